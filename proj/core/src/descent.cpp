#include "lognc/descent.hpp"

#include <algorithm>
#include <map>

#include "zpoly_internal.hpp"

namespace lognc {

namespace {

int effective_cap(const RingPtr& ring, const WeightSystem& W, const DescentOptions& opts) {
    return opts.lie_cap > 0 ? opts.lie_cap : default_lie_cap(ring, W);
}

void attach_rep(DescentState& s) {
    s.mprime = s.W.min_weight_vars();
    s.rep = restrict_to_mprime(s.ann, s.ring, s.W);
    s.a_solvable = is_solvable(rep_image_algebra(s.rep));
}

void tag_degree_zero(DescentState& s) {
    s.ann_degree0.clear();
    for (int i = 0; i < s.ann.dim(); ++i)
        if (s.ann.degrees()[i] && *s.ann.degrees()[i] == 0) s.ann_degree0.push_back(i);
}

}  // namespace

DescentState make_descent_state(const Poly& f, const WeightSystem& W,
                                const DescentOptions& opts) {
    Freeness fr = freeness_test(f, W);
    if (!fr.free)
        throw PreconditionError("descent requires a free divisor (got " +
                                std::to_string(fr.generator_count) + " generators)");
    const SaitoMatrix& S = *fr.saito;
    for (const auto& d : S.degrees)
        if (d > 0)
            throw PreconditionError(
                "descent requires all basis degrees <= 0 (a positive degree is present)");
    if (!entries_in_maximal_ideal(S))
        throw PreconditionError(
            "descent requires the derivation module inside m*Der (divisor is suspended)");

    DescentState s;
    s.ring = f.ring();
    s.f = f;
    s.W = W;

    EulerDerivation chi = euler_derivation(s.ring, W);
    LieAlgebra d = generate_lie_algebra(S.basis, W, effective_cap(s.ring, W, opts));
    AnnihilatorSplit split = split_annihilator(d, chi, f);
    s.ann = split.algebra;
    tag_degree_zero(s);
    attach_rep(s);
    return s;
}

DescentState make_synthetic_state(const Poly& f, const WeightSystem& W,
                                  std::vector<Derivation> annihilators,
                                  const DescentOptions& opts) {
    DescentState s;
    s.ring = f.ring();
    s.f = f;
    s.W = W;
    s.synthetic = true;

    ChiDegree fd = poly_chi_degree(f, W.weights);
    if (!fd.is_value() || fd.value != W.degree)
        throw PreconditionError("synthetic state: f is not homogeneous of the declared degree");
    for (const auto& a : annihilators)
        if (!a.apply(f).is_zero())
            throw PreconditionError("synthetic state: element does not annihilate f");

    LieAlgebra closure =
        generate_lie_algebra(annihilators, W, effective_cap(s.ring, W, opts));
    for (const auto& b : closure.backing())
        if (!b.apply(f).is_zero())
            throw std::logic_error("annihilator closure left the annihilator");
    s.ann = closure;
    tag_degree_zero(s);
    attach_rep(s);
    return s;
}

Rat select_epsilon(const WeightSystem& W, const std::vector<Rat>& h_eigenvalues) {
    if (static_cast<int>(h_eigenvalues.size()) != W.nvars())
        throw PreconditionError("one h-eigenvalue per variable required");
    Rat w1 = W.min_weight();
    bool neg_on_mprime = false;
    for (int i : W.min_weight_vars())
        if (h_eigenvalues[i] < 0) neg_on_mprime = true;
    if (!neg_on_mprime)
        throw PreconditionError("no negative h-eigenvalue on the lowest-weight space");

    Rat gap(0);
    bool have_gap = false;
    for (const auto& w : W.weights) {
        Rat diff = w - w1;
        if (diff > 0 && (!have_gap || diff < gap)) {
            gap = diff;
            have_gap = true;
        }
    }
    if (!have_gap) gap = w1;

    Rat H(0);
    for (const auto& e : h_eigenvalues) {
        Rat a = abs(e);
        if (a > H) H = a;
    }
    Rat eps = std::min(w1, gap) / (2 * (H + 1));
    eps.canonicalize();
    return eps;
}

EquivariantSplitting equivariant_splitting(const std::vector<Derivation>& action,
                                           const RingPtr& ring, const WeightSystem& W) {
    const int n = ring->nvars();
    for (const auto& s : action) {
        ChiDegree e = s.chi_degree(W.weights);
        if (!e.is_minus_infinity() && !(e.is_value() && e.value == 0))
            throw PreconditionError("equivariant splitting needs degree-zero derivations");
    }

    // Distinct weight levels ascending.
    std::vector<Rat> levels = W.weights;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<Poly> fwd_vals(n, Poly::zero(ring));
    Rat w1 = W.min_weight();
    for (const Rat& w : levels) {
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (W.weights[i] == w) vars.push_back(i);
        if (w == w1) {
            // pi_{w_1} is an isomorphism: representatives are the variables.
            for (int i : vars) fwd_vals[i] = Poly::variable(ring, i);
            continue;
        }
        // Correction space: monomials of weight w with total degree >= 2.
        std::vector<Monomial> m2;
        for (const auto& m : monomials_of_weight(ring, W, w))
            if (m.total_degree() >= 2) m2.push_back(m);
        const int q = static_cast<int>(m2.size());
        const int k = static_cast<int>(vars.size());
        if (q == 0) {
            for (int i : vars) fwd_vals[i] = Poly::variable(ring, i);
            continue;
        }

        // Unknowns z[l][a]: x'_{vars[l]} = x_{vars[l]} + sum_a z[l][a] m2[a].
        // One equation block per action generator s and level variable x_i:
        //   rem_i + s(q_i) - sum_j mu[j][i] q_j = 0  (identically),
        // where mu is the linear part of the level action and rem_i the
        // m^2 part of s(x_i).
        const int unknowns = k * q;
        auto unknown_id = [&](int l, int a) { return l * q + a; };
        std::vector<std::map<int, Rat>> eq_lhs;  // row -> unknown -> coeff
        std::vector<Rat> eq_rhs;

        for (const auto& s : action) {
            std::vector<std::vector<Rat>> mu(k, std::vector<Rat>(k, Rat(0)));
            std::vector<Poly> rem(k);
            for (int i = 0; i < k; ++i) {
                Poly img = s.apply(Poly::variable(ring, vars[i]));
                Poly rest = Poly::zero(ring);
                for (const auto& t : img.terms()) {
                    if (t.mono.total_degree() == 1) {
                        int var = -1;
                        for (int v = 0; v < n; ++v)
                            if (t.mono[v] == 1) var = v;
                        int j = -1;
                        for (int l = 0; l < k; ++l)
                            if (vars[l] == var) j = l;
                        if (j < 0)
                            throw std::logic_error("linear part leaves the weight level");
                        mu[j][i] = t.coeff;
                    } else {
                        rest = rest + Poly::monomial(ring, t.mono, t.coeff);
                    }
                }
                rem[i] = rest;
            }
            std::vector<Poly> s_of_m2;
            s_of_m2.reserve(q);
            for (int a = 0; a < q; ++a)
                s_of_m2.push_back(s.apply(Poly::monomial(ring, m2[a], Rat(1))));

            for (int i = 0; i < k; ++i) {
                std::map<std::vector<int>, int> row_of;  // monomial -> local row
                auto row_id = [&](const Monomial& m) {
                    auto it = row_of.find(m.exponents());
                    if (it != row_of.end()) return it->second;
                    int idx = static_cast<int>(eq_lhs.size());
                    row_of.emplace(m.exponents(), idx);
                    eq_lhs.emplace_back();
                    eq_rhs.push_back(Rat(0));
                    return idx;
                };
                for (const auto& t : rem[i].terms()) eq_rhs[row_id(t.mono)] -= t.coeff;
                for (int a = 0; a < q; ++a) {
                    for (const auto& t : s_of_m2[a].terms())
                        eq_lhs[row_id(t.mono)][unknown_id(i, a)] += t.coeff;
                    for (int j = 0; j < k; ++j)
                        if (mu[j][i] != 0) eq_lhs[row_id(m2[a])][unknown_id(j, a)] -= mu[j][i];
                }
            }
        }

        Mat<Rat> A(static_cast<int>(eq_lhs.size()), unknowns);
        std::vector<Rat> b(eq_lhs.size(), Rat(0));
        for (size_t r = 0; r < eq_lhs.size(); ++r) {
            for (const auto& [u, cval] : eq_lhs[r]) A.at(static_cast<int>(r), u) = cval;
            b[r] = eq_rhs[r];
        }
        auto z = solve(A, b);
        if (!z)
            throw std::logic_error(
                "equivariant splitting system infeasible (broken semisimplicity certificate)");

        for (int l = 0; l < k; ++l) {
            Poly val = Poly::variable(ring, vars[l]);
            for (int a = 0; a < q; ++a)
                if ((*z)[unknown_id(l, a)] != 0)
                    val = val + Poly::monomial(ring, m2[a], (*z)[unknown_id(l, a)]);
            fwd_vals[vars[l]] = val;
        }
    }

    CoordinateMap fwd(ring, ring, fwd_vals);
    fwd.validate(W, W);
    CoordinateMap bwd = fwd.inverse(W, W);

    // Exact checks: pi o sigma = id is structural; equivariance means the
    // transported action is linear on the new representatives.
    for (const auto& s : action)
        for (int i = 0; i < n; ++i) {
            Poly img = bwd.apply(s.apply(fwd_vals[i]));
            for (const auto& t : img.terms())
                if (t.mono.total_degree() > 1)
                    throw std::logic_error("equivariant splitting failed to linearize the action");
        }
    return EquivariantSplitting{fwd, bwd};
}

namespace {

Derivation transport(const Derivation& d, const CoordinateMap& fwd, const CoordinateMap& bwd) {
    // New coefficient i: d applied to the new variable, rewritten in the new
    // coordinates.
    std::vector<Poly> cs;
    const RingPtr& ring = bwd.codomain();
    for (int i = 0; i < fwd.domain()->nvars(); ++i)
        cs.push_back(bwd.apply(d.apply(fwd.value(i))));
    return Derivation(ring, std::move(cs));
}

// Split a derivation into chi-homogeneous components.
std::vector<Derivation> homogeneous_components(const Derivation& d, const WeightSystem& W) {
    std::map<Rat, std::vector<Poly>> parts;
    const RingPtr& ring = d.ring();
    for (int i = 0; i < d.nvars(); ++i)
        for (const auto& t : d.coeff(i).terms()) {
            Rat e = t.mono.weighted_degree(W.weights) - W.weights[i];
            auto it = parts.find(e);
            if (it == parts.end())
                it = parts.emplace(e, std::vector<Poly>(d.nvars(), Poly::zero(ring))).first;
            it->second[i] = it->second[i] + Poly::monomial(ring, t.mono, t.coeff);
        }
    std::vector<Derivation> out;
    for (auto& [e, cs] : parts) out.emplace_back(ring, std::move(cs));
    return out;
}

}  // namespace

DescentState chi_step(const DescentState& state, const DescentOptions& opts) {
    if (state.a_solvable)
        throw PreconditionError("chi_step requires a non-solvable lowest-weight action");
    const RingPtr ring = state.ring;
    const int n = ring->nvars();

    // a_0 and the part acting nontrivially on m'.
    Subspace a0_basis;
    for (int i : state.ann_degree0) {
        std::vector<Rat> e(state.ann.dim(), Rat(0));
        e[i] = 1;
        a0_basis.push_back(std::move(e));
    }
    LieAlgebra a0 = subalgebra(state.ann, a0_basis, "a0_");

    Subspace levi = levi_subalgebra(a0);
    if (levi.empty())
        throw std::logic_error("non-solvable m' action with solvable a_0");
    LieAlgebra s0 = subalgebra(a0, levi, "s0_");

    // Kernel of the m' action inside s0 and its Killing complement.
    LinearRep s0rep = restrict_to_mprime(s0, ring, state.W);
    const int k = s0rep.carrier_dim();
    Mat<Rat> act(k * k, s0.dim());
    for (int b = 0; b < s0.dim(); ++b)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) act.at(i * k + j, b) = s0rep.mats[b].at(i, j);
    Subspace ker = kernel(act);
    LieAlgebra work = s0;
    Subspace work_basis;  // basis of the searched subalgebra, in s0 coords
    if (!ker.empty()) {
        Mat<Rat> K = s0.killing_form();
        Mat<Rat> sys(static_cast<int>(ker.size()), s0.dim());
        for (size_t r = 0; r < ker.size(); ++r) {
            std::vector<Rat> row = K.apply(ker[r]);
            for (int j = 0; j < s0.dim(); ++j) sys.at(static_cast<int>(r), j) = row[j];
        }
        work_basis = kernel(sys);
        work = subalgebra(s0, work_basis, "sx_");
    } else {
        for (int i = 0; i < s0.dim(); ++i) {
            std::vector<Rat> e(s0.dim(), Rat(0));
            e[i] = 1;
            work_basis.push_back(std::move(e));
        }
    }

    auto triple = find_sl2_triple(work);
    if (!triple) throw std::logic_error("semisimple complement without an sl2-triple");
    auto realize_in_a0 = [&](const std::vector<Rat>& wcoords) {
        std::vector<Rat> s0c(s0.dim(), Rat(0));
        for (size_t i = 0; i < work_basis.size(); ++i)
            for (int j = 0; j < s0.dim(); ++j) s0c[j] += wcoords[i] * work_basis[i][j];
        return s0.realize(s0c);
    };
    Derivation h = realize_in_a0(triple->h);
    Derivation vp = realize_in_a0(triple->e);
    Derivation vm = realize_in_a0(triple->f);

    // Linearize the sl2 action, then diagonalize h level by level.
    EquivariantSplitting eq = equivariant_splitting({h, vp, vm}, ring, state.W);
    Poly f1 = eq.backward.apply(state.f);
    Derivation h1 = transport(h, eq.forward, eq.backward);

    std::vector<Rat> eta(n, Rat(0));
    std::vector<Poly> diag_vals(n, Poly::zero(ring));
    {
        // Per weight level: eigen-split the h1 action on the variables.
        std::vector<Rat> levels = state.W.weights;
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        for (const Rat& w : levels) {
            std::vector<int> vars;
            for (int i = 0; i < n; ++i)
                if (state.W.weights[i] == w) vars.push_back(i);
            const int kk = static_cast<int>(vars.size());
            Mat<Rat> H(kk, kk);
            for (int j = 0; j < kk; ++j) {
                Poly img = h1.apply(Poly::variable(ring, vars[j]));
                for (const auto& t : img.terms()) {
                    if (t.mono.total_degree() != 1)
                        throw std::logic_error("h does not act linearly after the splitting");
                    int var = -1;
                    for (int v = 0; v < n; ++v)
                        if (t.mono[v] == 1) var = v;
                    int i = -1;
                    for (int l = 0; l < kk; ++l)
                        if (vars[l] == var) i = l;
                    if (i < 0) throw std::logic_error("h mixes weight levels");
                    H.at(i, j) = t.coeff;
                }
            }
            // Integer eigenvalues (sl2 weight theory); eigenbasis over Q.
            std::vector<Rat> cp = charpoly(H);
            Int l = denominator_lcm(cp);
            internal::ZPoly z(cp.size());
            for (size_t i = 0; i < cp.size(); ++i) {
                Rat v = cp[i] * Rat(l);
                v.canonicalize();
                z[i] = v.get_num();
            }
            internal::ztrim(z);
            std::vector<Rat> roots = internal::zroots_rational(z);
            for (const auto& r : roots)
                if (!is_integer(r)) throw std::logic_error("h-eigenvalue is not an integer");
            std::sort(roots.begin(), roots.end(), std::greater<Rat>());
            int placed = 0;
            for (const auto& lam : roots) {
                Mat<Rat> shifted = H;
                for (int i = 0; i < kk; ++i) shifted.at(i, i) -= lam;
                for (const auto& kv : kernel(shifted)) {
                    // New variable: eigen-combination of the level variables.
                    Poly val = Poly::zero(ring);
                    for (int j = 0; j < kk; ++j)
                        if (kv[j] != 0) val = val + Poly::variable(ring, vars[j]) * kv[j];
                    diag_vals[vars[placed]] = val;
                    eta[vars[placed]] = lam;
                    ++placed;
                }
            }
            if (placed != kk) throw std::logic_error("h is not diagonalizable over Q");
        }
    }
    CoordinateMap diag_fwd(ring, ring, diag_vals);
    diag_fwd.validate(state.W, state.W);
    CoordinateMap diag_bwd = diag_fwd.inverse(state.W, state.W);
    Poly f2 = diag_bwd.apply(f1);
    CoordinateMap step_fwd = diag_fwd.then(eq.forward);

    // New weights.
    Rat eps = select_epsilon(state.W, eta);
    WeightSystem Wt;
    Wt.degree = state.W.degree;
    for (int i = 0; i < n; ++i) {
        Rat w = state.W.weights[i] + eps * eta[i];
        w.canonicalize();
        if (w <= 0) throw std::logic_error("reweighting produced a nonpositive weight");
        Wt.weights.push_back(w);
    }

    // chi~(f) = d f, exactly.
    ChiDegree fd = poly_chi_degree(f2, Wt.weights);
    if (!fd.is_value() || fd.value != Wt.degree)
        throw std::logic_error("f is not homogeneous for the modified Euler derivation");

    DescentState next;
    next.ring = ring;
    next.f = f2;
    next.W = Wt;
    next.synthetic = state.synthetic;
    next.history = state.history;
    next.history.push_back(step_fwd);
    next.trace = state.trace;
    next.iterations = state.iterations + 1;

    if (state.synthetic) {
        // Transport the annihilator, split into homogeneous components and
        // close up again.
        std::vector<Derivation> comps;
        CoordinateMap step_bwd = eq.backward.then(diag_bwd);
        for (const auto& b : state.ann.backing()) {
            Derivation tb = transport(b, step_fwd, step_bwd);
            for (auto& c : homogeneous_components(tb, Wt)) {
                if (!c.apply(f2).is_zero())
                    throw std::logic_error("transported annihilator fails to kill f");
                // Keep the nonpositive part: the reweighted algebra is the
                // degree-<=0 truncation, matching the graded setting.
                ChiDegree e = c.chi_degree(Wt.weights);
                if (e.is_value() && e.value > 0) continue;
                comps.push_back(std::move(c));
            }
        }
        next.ann = generate_lie_algebra(comps, Wt, effective_cap(ring, Wt, opts));
        tag_degree_zero(next);
        attach_rep(next);
    } else {
        DescentState fresh = make_descent_state(f2, Wt, opts);
        next.ann = fresh.ann;
        next.ann_degree0 = fresh.ann_degree0;
        next.rep = fresh.rep;
        next.mprime = fresh.mprime;
        next.a_solvable = fresh.a_solvable;
    }

    if (static_cast<int>(next.mprime.size()) >= static_cast<int>(state.mprime.size()))
        throw std::logic_error("lowest-weight space did not shrink");

    DescentIteration it;
    it.epsilon = eps;
    it.h_eigenvalues = eta;
    it.old_weights = state.W.weights;
    it.new_weights = Wt.weights;
    it.mprime_before = static_cast<int>(state.mprime.size());
    it.mprime_after = static_cast<int>(next.mprime.size());
    next.trace.push_back(std::move(it));
    return next;
}

DescentState descend_to_solvable(const Poly& f, const WeightSystem& W,
                                 const DescentOptions& opts) {
    DescentState s = make_descent_state(f, W, opts);
    const int bound = static_cast<int>(s.mprime.size());
    while (!s.a_solvable) {
        if (s.iterations >= bound - 1)
            throw std::logic_error("descent exceeded the dimension-drop bound");
        s = chi_step(s, opts);
    }
    return s;
}

SmoothComponentCertificate smooth_component(const DescentState& state,
                                            const DescentOptions& opts) {
    if (!state.a_solvable)
        throw PreconditionError("smooth component extraction requires a solvable m' action");
    SmoothComponentCertificate cert;
    CommonEigenvector ce = common_eigenvector(state.rep.mats, opts.field_ext);
    const RingPtr& ring = state.ring;
    if (!ce.ext) {
        Poly ell = Poly::zero(ring);
        for (size_t i = 0; i < state.mprime.size(); ++i)
            if (ce.vector_q[i] != 0)
                ell = ell + Poly::variable(ring, state.mprime[i]) * ce.vector_q[i];
        ell = ell.primitive();
        auto g = state.f.divide_exact(ell);
        if (!g) throw std::logic_error("common eigenform does not divide f");
        cert.linear_form = ell;
        cert.cofactor = *g;
        cert.eigenvalues = ce.eigenvalues_q;
        return cert;
    }
    // Quadratic case: the conjugate pair multiplies to a rational factor.
    // ell * conj(ell) = sum_{i,j} v_i conj(v_j) x_i x_j; over the ordered
    // pairs the t-parts cancel (the (i,j) and (j,i) terms are conjugate), so
    // summing the rational parts yields the exact product.
    cert.ext = ce.ext;
    const std::vector<QuadExt>& v = ce.vector_e;
    Poly quad = Poly::zero(ring);
    for (size_t i = 0; i < state.mprime.size(); ++i)
        for (size_t j = 0; j < state.mprime.size(); ++j) {
            QuadExt prod = v[i] * v[j].conj();
            Poly mono = Poly::variable(ring, state.mprime[i]) *
                        Poly::variable(ring, state.mprime[j]);
            quad = quad + mono * prod.re();
        }
    cert.quadratic_factor = quad.primitive();
    auto g = state.f.divide_exact(*cert.quadratic_factor);
    if (!g) throw std::logic_error("conjugate-pair factor does not divide f");
    cert.cofactor = *g;
    return cert;
}

}  // namespace lognc
