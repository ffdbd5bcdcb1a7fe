#include "lognc/certify.hpp"

#include <algorithm>

#include "lognc/gcd.hpp"
#include "lognc/parse.hpp"

namespace lognc {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

ComponentDescentReport component_descent(const Poly& f, std::optional<WeightSystem> W) {
    if (f.is_zero() || f.is_constant())
        throw PreconditionError("component analysis needs a nonconstant polynomial");
    ComponentDescentReport rep;
    rep.weights = W;

    Factorization fac = factor_irreducible(f);
    for (const auto& [q, mult] : fac.factors) {
        if (mult > 1) rep.reduced = false;
    }
    if (!rep.reduced) {
        for (const auto& [q, mult] : fac.factors) {
            FactorReport fr;
            fr.factor = q;
            fr.multiplicity = mult;
            fr.note = "input is not reduced";
            rep.components.push_back(std::move(fr));
        }
        return rep;
    }

    for (const auto& [q, mult] : fac.factors) {
        FactorReport fr;
        fr.factor = q;
        fr.multiplicity = mult;
        fr.own_weights = find_weight_system(q);
        std::optional<WeightSystem> Wq;
        if (W) {
            fr.chi_degree_fixed = poly_chi_degree(q, W->weights);
            if (fr.chi_degree_fixed.is_value())
                Wq = WeightSystem{W->weights, fr.chi_degree_fixed.value};
            else
                fr.note = "component is not homogeneous under the fixed weights";
        } else if (fr.own_weights) {
            Wq = fr.own_weights;
        } else {
            fr.note = "no positive weight system for this component";
        }
        if (Wq) {
            try {
                Freeness free = freeness_test(q, *Wq);
                fr.free = free.free;
                fr.generator_count = free.generator_count;
                if (free.free) {
                    const SaitoMatrix& S = *free.saito;
                    fr.degrees = S.degrees;
                    fr.degrees_nonpositive =
                        std::all_of(S.degrees.begin(), S.degrees.end(),
                                    [](const Rat& d) { return d <= 0; });
                    fr.minors_match = minors_vs_jacobian(S, q).equal;
                }
            } catch (const PreconditionError& e) {
                fr.note = e.what();
            }
        }
        rep.components.push_back(std::move(fr));
    }
    return rep;
}

namespace {

struct Pipeline {
    const DescentOptions& opts;
    CertifyResult res;
    Poly original;
    Rat unit = 1;
    int depth_guard;

    void note(const std::string& stage, const std::string& msg) {
        res.stages.push_back(StageNote{stage, msg});
    }

    void refute(const std::string& stage, const std::string& msg) {
        res.verdict = Verdict::Refuted;
        res.refuted_at = stage;
        res.reason = msg;
        note(stage, msg);
    }

    void inconclusive(const std::string& stage, const std::string& msg) {
        res.verdict = Verdict::Inconclusive;
        res.reason = msg;
        note(stage, msg);
    }

    // phi: current-ring variables expressed in the original coordinates.
    bool run(Poly f, CoordinateMap phi, bool top) {
        if (depth_guard-- <= 0) throw std::logic_error("certification recursion exceeded bound");
        const RingPtr ring = f.ring();

        if (f.is_constant()) {
            unit *= f.constant_term();
            return true;
        }

        auto Wopt = find_weight_system(f);
        if (!Wopt) {
            inconclusive("weights",
                         "no strictly positive weight system in these coordinates; "
                         "quasihomogeneity is required");
            return false;
        }
        WeightSystem W = *Wopt;
        if (top) res.weights = W;
        if (!top) note("weights", "cofactor weights re-detected: " + W.json());

        if (!is_squarefree(f)) throw PreconditionError("f is not reduced (repeated factor found)");

        // Suspension split first: all verdicts are equivalent for the
        // reduced part.
        SuspensionResult sus = suspension_split(f, W);
        if (sus.suspended) {
            res.suspension_dropped += static_cast<int>(sus.steps.size());
            note("suspension", "split off " + std::to_string(sus.steps.size()) +
                                   " smooth factor(s); continuing on " +
                                   std::to_string(sus.ring->nvars()) + " variable(s)");
            // Compose the pullback: kept new variables in terms of the old.
            CoordinateMap chain = sus.steps.front().forward;
            for (size_t i = 1; i < sus.steps.size(); ++i)
                chain = sus.steps[i].forward.then(chain);
            phi = chain.then(phi);
            f = sus.f;
            W = sus.W;
        }

        Freeness fr = freeness_test(f, W);
        if (!fr.free) {
            refute("freeness", "Der(-log D) needs " + std::to_string(fr.generator_count) +
                                   " generators on " + std::to_string(f.nvars()) +
                                   " variables; normal crossing divisors are free");
            return false;
        }
        const SaitoMatrix& S = *fr.saito;

        DegreeAudit audit = degree_audit(S, f);
        MinorsReport minors = minors_vs_jacobian(S, f);
        {
            std::string degs;
            for (const auto& d : S.degrees) degs += (degs.empty() ? "" : ",") + rat_to_string(d);
            note("degree_audit", "basis degrees (" + degs + "); minors " +
                                     (minors.equal ? "match" : "differ from") +
                                     " the Jacobian ideal");
        }

        if (!audit.all_nonpositive) {
            if (audit.f_irreducible_rational) {
                bool abs = absolutely_irreducible(f) == AbsIrred::Certified;
                res.absolutely_irreducible_certified = abs;
                std::string qual = abs ? "" :
                    " (irreducible over Q; absolute irreducibility assumed, verdict is "
                    "inconclusive over the rationals otherwise)";
                refute("degree_audit",
                       "a basis derivation has positive degree, so no nonpositive-degree "
                       "basis exists; an irreducible free divisor that is normal crossing "
                       "in codimension one must admit one" + qual);
                return false;
            }
            // Reducible: descend to components for a per-component refutation.
            ComponentDescentReport comp = component_descent(f, W);
            for (const auto& c : comp.components) {
                if (c.free && !*c.free) {
                    refute("components",
                           "component " + c.factor.str() +
                               " is not free; components of free divisors that are normal "
                               "crossing in codimension one stay free");
                    return false;
                }
                if (c.degrees_nonpositive && !*c.degrees_nonpositive &&
                    is_irreducible(c.factor)) {
                    bool abs = absolutely_irreducible(c.factor) == AbsIrred::Certified;
                    res.absolutely_irreducible_certified = abs;
                    refute("components",
                           "irreducible component " + c.factor.str() +
                               " has a positive-degree basis derivation" +
                               (abs ? "" : " (absolute irreducibility assumed)"));
                    return false;
                }
            }
            if (!minors.equal) {
                refute("minors",
                       "the submaximal minors of the Saito matrix do not generate the "
                       "Jacobian ideal, which normal crossing in codimension one forces");
                return false;
            }
            inconclusive("degree_audit",
                         "positive basis degrees on a reducible divisor; no component-level "
                         "refutation found");
            return false;
        }

        if (!minors.equal) {
            refute("minors",
                   "the submaximal minors of the Saito matrix do not generate the Jacobian "
                   "ideal, which normal crossing in codimension one forces");
            return false;
        }

        // Descend to a solvable lowest-weight action and peel off a smooth
        // component.
        DescentState state;
        try {
            state = descend_to_solvable(f, W, opts);
        } catch (const Sl2Obstruction& o) {
            inconclusive("descent", std::string("sl2-triple only over a field extension: ") +
                                        o.minimal_polynomial);
            return false;
        }
        for (const auto& it : state.trace) res.descent_trace.push_back(it);
        if (state.iterations > 0)
            note("descent", std::to_string(state.iterations) +
                                " chi-modification step(s) to a solvable action");

        // Compose descent coordinate changes into the pullback.
        for (auto hist = state.history.rbegin(); hist != state.history.rend(); ++hist)
            phi = hist->then(phi);

        SmoothComponentCertificate cert;
        try {
            cert = smooth_component(state, opts);
        } catch (const ExtensionObstruction& o) {
            inconclusive("smooth_component",
                         std::string("common eigenvector requires an extension: ") + o.factor);
            return false;
        }
        if (cert.ext) {
            inconclusive("smooth_component",
                         "smooth components form a conjugate pair over a quadratic extension "
                         "(rational product " + cert.quadratic_factor->str() +
                             "); no rational certificate");
            return false;
        }

        // Straighten ell to the first lowest-weight coordinate and divide.
        const RingPtr cur = state.ring;
        std::vector<Poly> fwd_vals;
        {
            int target = state.mprime.front();
            SpanTracker<Rat> indep;
            std::vector<Rat> ell_vec(cur->nvars(), Rat(0));
            for (const auto& t : cert.linear_form.terms())
                for (int v = 0; v < cur->nvars(); ++v)
                    if (t.mono[v] == 1) ell_vec[v] = t.coeff;
            for (int i = 0; i < cur->nvars(); ++i) fwd_vals.push_back(Poly::variable(cur, i));
            fwd_vals[target] = cert.linear_form;
            indep.insert(ell_vec);
            // Replace one dependent m' variable to keep the map invertible.
            for (int v : state.mprime) {
                std::vector<Rat> e(cur->nvars(), Rat(0));
                e[v] = 1;
                if (!indep.insert(e)) {
                    fwd_vals[v] = Poly::variable(cur, target);
                    std::vector<Rat> et(cur->nvars(), Rat(0));
                    et[target] = 1;
                    indep.insert(et);
                }
            }
        }
        CoordinateMap extract_fwd(cur, cur, fwd_vals);
        extract_fwd.validate(state.W, state.W);
        CoordinateMap extract_bwd = extract_fwd.inverse(state.W, state.W);
        Poly f_ex = extract_bwd.apply(state.f);
        phi = extract_fwd.then(phi);

        Poly var_ell = Poly::variable(cur, state.mprime.front());
        auto cof = f_ex.divide_exact(var_ell);
        if (!cof) throw std::logic_error("straightened component does not divide f");

        ExtractedFactor ef;
        ef.variable = cur->var_name(state.mprime.front());
        ef.pulled_back = phi.value(state.mprime.front());
        res.factors.push_back(ef);
        note("smooth_component",
             "extracted smooth component " + ef.pulled_back.str() + " (coordinate " +
                 ef.variable + " in the descent chart)");

        return run(*cof, phi, /*top=*/false);
    }
};

}  // namespace

CertifyResult certify_normal_crossing(const Poly& f, std::optional<WeightSystem> W,
                                      const DescentOptions& opts) {
    if (f.is_zero() || f.is_constant())
        throw PreconditionError("certification needs a nonconstant polynomial");
    Pipeline p{opts, CertifyResult{}, f, Rat(1), 4 * (f.total_degree() + 2)};
    if (W) {
        ChiDegree d = poly_chi_degree(f, W->weights);
        if (!d.is_value())
            throw PreconditionError("f is not homogeneous under the supplied weights");
        WeightSystem fixed = *W;
        fixed.degree = d.value;
        p.res.weights = fixed;
    }

    bool done = p.run(f, CoordinateMap::identity(f.ring()), /*top=*/true);
    CertifyResult res = std::move(p.res);
    if (done) {
        res.verdict = Verdict::Certified;
        res.unit = p.unit;
        // Exact re-substitution check in the original coordinates.
        Poly acc = Poly::constant(f.ring(), p.unit);
        for (const auto& fac : res.factors) acc = acc * fac.pulled_back;
        res.resubstitution_ok = (acc == f);
        if (!res.resubstitution_ok)
            throw std::logic_error("certificate fails the re-substitution identity");
        // Distinctness: pairwise non-proportional pulled-back factors.
        for (size_t i = 0; i < res.factors.size(); ++i)
            for (size_t j = i + 1; j < res.factors.size(); ++j) {
                const Poly& a = res.factors[i].pulled_back;
                const Poly& b = res.factors[j].pulled_back;
                auto q = a.divide_exact(b);
                if (q && q->is_constant())
                    throw std::logic_error("certificate factors are not distinct");
            }
        res.reason = "f is a unit times " + std::to_string(res.factors.size()) +
                     " distinct coordinate factors along the recorded chart chain";
    }
    return res;
}

}  // namespace lognc
