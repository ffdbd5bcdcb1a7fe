#include "lognc/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lognc {

bool ModElem::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

ModElem ModElem::operator+(const ModElem& o) const {
    ModElem r;
    r.comp.reserve(comp.size());
    for (size_t i = 0; i < comp.size(); ++i) r.comp.push_back(comp[i] + o.comp[i]);
    return r;
}

ModElem ModElem::operator-(const ModElem& o) const {
    ModElem r;
    r.comp.reserve(comp.size());
    for (size_t i = 0; i < comp.size(); ++i) r.comp.push_back(comp[i] - o.comp[i]);
    return r;
}

ModElem ModElem::scaled(const Rat& c) const {
    ModElem r;
    r.comp.reserve(comp.size());
    for (const auto& p : comp) r.comp.push_back(p * c);
    return r;
}

ModElem ModElem::mono_mul(const Monomial& m, const Rat& c) const {
    ModElem r;
    r.comp.reserve(comp.size());
    for (const auto& p : comp) {
        if (p.is_zero()) {
            r.comp.push_back(p);
            continue;
        }
        std::vector<Term> ts;
        ts.reserve(p.term_count());
        for (const auto& t : p.terms()) ts.push_back({t.mono * m, t.coeff * c});
        r.comp.push_back(Poly::from_terms(p.ring(), std::move(ts)));
    }
    return r;
}

bool ModElem::operator==(const ModElem& o) const {
    if (comp.size() != o.comp.size()) return false;
    for (size_t i = 0; i < comp.size(); ++i)
        if (!(comp[i] == o.comp[i])) return false;
    return true;
}

ModElem ModElem::wrap(Poly p) {
    ModElem r;
    r.comp.push_back(std::move(p));
    return r;
}

int ModElem::compare(const ModElem& a, const ModElem& b) {
    for (size_t i = 0; i < a.comp.size(); ++i) {
        int c = Poly::compare(a.comp[i], b.comp[i]);
        if (c != 0) return c;
    }
    return 0;
}

ModuleOrder::ModuleOrder(MonomialOrder base, std::vector<Rat> shifts)
    : base_(std::move(base)), shifts_(std::move(shifts)) {}

bool ModuleOrder::term_less(const ModTerm& a, const ModTerm& b) const {
    if (a.comp != b.comp) return a.comp > b.comp;  // lower component dominates
    return base_.less(a.mono, b.mono);
}

Rat ModuleOrder::term_degree(const ModTerm& t) const {
    return base_.degree(t.mono) + shifts_.at(t.comp);
}

ModTerm ModuleOrder::leading_term(const ModElem& v) const {
    for (size_t i = 0; i < v.comp.size(); ++i) {
        if (v.comp[i].is_zero()) continue;
        const Term& lt = v.comp[i].leading_term(base_);
        return ModTerm{static_cast<int>(i), lt.mono, lt.coeff};
    }
    return ModTerm{};
}

Rat ModuleOrder::elem_degree(const ModElem& v) const {
    Rat d = 0;
    bool found = false;
    for (size_t i = 0; i < v.comp.size(); ++i)
        for (const auto& t : v.comp[i].terms()) {
            Rat td = base_.degree(t.mono) + shifts_[i];
            if (!found || td > d) d = td;
            found = true;
        }
    return d;
}

namespace {

ModElem term_to_elem(const RingPtr& ring, int ncomp, const ModTerm& t) {
    ModElem r;
    r.comp.assign(ncomp, Poly::zero(ring));
    r.comp[t.comp] = Poly::monomial(ring, t.mono, t.coeff);
    return r;
}

const RingPtr& elem_ring(const ModElem& v) { return v.comp.at(0).ring(); }

}  // namespace

ModElem normal_form(ModElem v, const std::vector<ModElem>& basis, const ModuleOrder& ord) {
    std::vector<ModTerm> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(ord.leading_term(g));
    if (v.is_zero()) return v;
    const RingPtr ring = elem_ring(v);
    const int ncomp = static_cast<int>(v.comp.size());

    ModElem result;
    result.comp.assign(ncomp, Poly::zero(ring));
    while (!v.is_zero()) {
        ModTerm lt = ord.leading_term(v);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (lts[k].comp != lt.comp || !lts[k].mono.divides(lt.mono)) continue;
            Monomial q = lt.mono.divide_by(lts[k].mono);
            v = v - basis[k].mono_mul(q, lt.coeff / lts[k].coeff);
            reduced = true;
            break;
        }
        if (!reduced) {
            result = result + term_to_elem(ring, ncomp, lt);
            v = v - term_to_elem(ring, ncomp, lt);
        }
    }
    return result;
}

namespace {

struct Pair {
    Rat sugar;
    int comp;
    Monomial lcm;
    size_t i, j;
};

struct PairLess {
    const ModuleOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        int c = cmp(a.sugar, b.sugar);
        if (c != 0) return c < 0;
        if (a.comp != b.comp) return a.comp < b.comp;
        if (!(a.lcm == b.lcm)) return ord->base().less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

ModElem make_monic(ModElem v, const ModuleOrder& ord) {
    ModTerm lt = ord.leading_term(v);
    if (lt.comp < 0) return v;
    return v.scaled(Rat(1) / lt.coeff);
}

}  // namespace

std::vector<ModElem> groebner_module(std::vector<ModElem> gens, const ModuleOrder& ord) {
    std::vector<ModElem> G;
    std::vector<ModTerm> lt;
    std::vector<Rat> sugar;
    const bool ring_case = ord.ncomp() == 1;

    auto push = [&](ModElem v, const Rat& sug) {
        v = make_monic(std::move(v), ord);
        lt.push_back(ord.leading_term(v));
        G.push_back(std::move(v));
        sugar.push_back(sug);
    };

    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Rat d = ord.elem_degree(g);
        push(std::move(g), d);
    }

    PairLess less{&ord};
    std::set<Pair, PairLess> pairs(less);
    auto add_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (lt[i].comp != lt[j].comp) continue;
            if (ring_case && Monomial::coprime(lt[i].mono, lt[j].mono)) continue;
            Monomial l = Monomial::lcm(lt[i].mono, lt[j].mono);
            Rat si = sugar[i] + ord.base().degree(l.divide_by(lt[i].mono));
            Rat sj = sugar[j] + ord.base().degree(l.divide_by(lt[j].mono));
            pairs.insert(Pair{std::max(si, sj), lt[i].comp, l, i, j});
        }
    };
    for (size_t j = 0; j < G.size(); ++j) add_pairs(j);

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        ModElem s = G[p.i].mono_mul(p.lcm.divide_by(lt[p.i].mono), Rat(1)) -
                    G[p.j].mono_mul(p.lcm.divide_by(lt[p.j].mono), Rat(1));
        ModElem h = normal_form(std::move(s), G, ord);
        if (h.is_zero()) continue;
        push(std::move(h), p.sugar);
        add_pairs(G.size() - 1);
    }

    // Full inter-reduction to the canonical reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < G.size(); ++k) {
            std::vector<ModElem> rest;
            rest.reserve(G.size() - 1);
            for (size_t i = 0; i < G.size(); ++i)
                if (i != k) rest.push_back(G[i]);
            ModElem r = normal_form(G[k], rest, ord);
            if (r.is_zero()) {
                G.erase(G.begin() + k);
                changed = true;
                break;
            }
            r = make_monic(std::move(r), ord);
            if (!(r == G[k])) {
                G[k] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(G.begin(), G.end(), [&](const ModElem& a, const ModElem& b) {
        ModTerm la = ord.leading_term(a), lb = ord.leading_term(b);
        if (la.comp != lb.comp || !(la.mono == lb.mono)) return ord.term_less(la, lb);
        return ModElem::compare(a, b) < 0;
    });
    return G;
}

bool module_member(const ModElem& v, const std::vector<ModElem>& reduced_basis,
                   const ModuleOrder& ord) {
    return normal_form(v, reduced_basis, ord).is_zero();
}

// ---- Ideals -------------------------------------------------------------

Ideal::Ideal(RingPtr ring_, std::vector<Poly> gens_, WeightSystem W_)
    : ring(std::move(ring_)), gens(std::move(gens_)), W(std::move(W_)) {
    if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator");
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("zero ideal generator");
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("ideal generator ring mismatch");
    }
    if (W.nvars() != ring->nvars()) throw std::invalid_argument("ideal weight arity mismatch");
}

static ModuleOrder ideal_order(const Ideal& I) {
    return ModuleOrder(MonomialOrder(I.W.weights), {Rat(0)});
}

std::vector<Poly> groebner_basis(const Ideal& I) {
    std::vector<ModElem> gens;
    gens.reserve(I.gens.size());
    for (const auto& g : I.gens) gens.push_back(ModElem::wrap(g));
    auto G = groebner_module(std::move(gens), ideal_order(I));
    std::vector<Poly> out;
    out.reserve(G.size());
    for (auto& e : G) out.push_back(std::move(e.comp[0]));
    return out;
}

bool ideal_member(const Poly& p, const Ideal& I) {
    if (!same_ring(p.ring(), I.ring)) throw std::invalid_argument("membership test ring mismatch");
    if (p.is_zero()) return true;
    ModuleOrder ord = ideal_order(I);
    std::vector<ModElem> G;
    for (const auto& g : groebner_basis(I)) G.push_back(ModElem::wrap(g));
    return module_member(ModElem::wrap(p), G, ord);
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring, J.ring)) throw std::invalid_argument("ideal comparison ring mismatch");
    // Reduced Groebner bases are canonical for a fixed order; compare under
    // I's order.
    Ideal J2(J.ring, J.gens, I.W);
    auto a = groebner_basis(I);
    auto b = groebner_basis(J2);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// ---- Syzygies -----------------------------------------------------------

SyzygyModule syzygy_module(const std::vector<Poly>& g, const WeightSystem& W,
                           std::vector<Rat> shifts) {
    if (g.empty()) throw std::invalid_argument("syzygy computation needs generators");
    const RingPtr& ring = g[0].ring();
    for (const auto& p : g) {
        if (p.is_zero()) throw std::invalid_argument("zero entry in syzygy target");
        if (!same_ring(p.ring(), ring)) throw std::invalid_argument("syzygy target ring mismatch");
    }
    const int m = static_cast<int>(g.size());
    if (static_cast<int>(shifts.size()) != m)
        throw std::invalid_argument("one degree shift per syzygy column required");

    // Augmented module O^(1+m): component 0 carries sum a_k g_k and is
    // eliminated first by the position-over-term order.
    std::vector<Rat> aug_shifts;
    aug_shifts.push_back(Rat(0));
    for (const auto& s : shifts) aug_shifts.push_back(s);
    ModuleOrder ord(MonomialOrder(W.weights), aug_shifts);

    std::vector<ModElem> gens;
    for (int i = 0; i < m; ++i) {
        ModElem e;
        e.comp.assign(1 + m, Poly::zero(ring));
        e.comp[0] = g[i];
        e.comp[1 + i] = Poly::constant(ring, Rat(1));
        gens.push_back(std::move(e));
    }
    auto G = groebner_module(std::move(gens), ord);

    SyzygyModule out;
    out.ring = ring;
    out.target = g;
    out.shifts = std::move(shifts);
    for (auto& e : G) {
        if (!e.comp[0].is_zero()) continue;
        std::vector<Poly> v(e.comp.begin() + 1, e.comp.end());
        // Exactness is structural, but cheap to re-check.
        Poly acc = Poly::zero(ring);
        for (int k = 0; k < m; ++k) acc = acc + v[k] * g[k];
        if (!acc.is_zero()) throw std::logic_error("syzygy candidate fails exactness");
        out.gens.push_back(std::move(v));
    }
    return out;
}

namespace {

std::vector<Poly> primitive_vector(const std::vector<Poly>& v) {
    std::vector<Rat> cs;
    for (const auto& p : v)
        for (const auto& t : p.terms()) cs.push_back(t.coeff);
    Rat c = rational_content(cs);
    if (c == 0) return v;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        if (p.storage_leading_term().coeff < 0) c = -c;
        break;
    }
    std::vector<Poly> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p * (Rat(1) / c));
    return out;
}

}  // namespace

std::vector<std::vector<Poly>> minimal_graded_generators(
    const std::vector<std::vector<Poly>>& gens, const WeightSystem& W,
    const std::vector<Rat>& shifts) {
    if (gens.empty()) return {};
    const size_t m = gens[0].size();
    const RingPtr ring = [&]() -> RingPtr {
        for (const auto& v : gens)
            for (const auto& p : v)
                if (p.ring()) return p.ring();
        throw std::invalid_argument("cannot infer ring of module generators");
    }();

    // Split generators into chi-homogeneous components.
    struct Cand {
        Rat degree;
        std::vector<Poly> v;
    };
    std::vector<Cand> cands;
    for (const auto& v : gens) {
        if (v.size() != m) throw std::invalid_argument("ragged module generators");
        std::map<Rat, std::vector<Poly>> split;
        for (size_t i = 0; i < v.size(); ++i)
            for (const auto& t : v[i].terms()) {
                Rat d = t.mono.weighted_degree(W.weights) + shifts[i];
                auto it = split.find(d);
                if (it == split.end())
                    it = split.emplace(d, std::vector<Poly>(m, Poly::zero(ring))).first;
                it->second[i] = it->second[i] + Poly::monomial(ring, t.mono, t.coeff);
            }
        for (auto& [d, part] : split) cands.push_back({d, primitive_vector(part)});
    }

    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        int c = cmp(a.degree, b.degree);
        if (c != 0) return c < 0;
        for (size_t i = 0; i < a.v.size(); ++i) {
            int pc = Poly::compare(a.v[i], b.v[i]);
            if (pc != 0) return pc < 0;
        }
        return false;
    });
    // Drop duplicates.
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](const Cand& a, const Cand& b) { return a.v == b.v; }),
                cands.end());

    ModuleOrder ord(MonomialOrder(W.weights), shifts);
    std::vector<std::vector<Poly>> kept;
    std::vector<ModElem> kept_gb;
    for (auto& c : cands) {
        ModElem e{c.v};
        if (e.is_zero()) continue;
        if (!kept.empty() && module_member(e, kept_gb, ord)) continue;
        kept.push_back(c.v);
        std::vector<ModElem> raw;
        raw.reserve(kept.size());
        for (const auto& k : kept) raw.push_back(ModElem{k});
        kept_gb = groebner_module(std::move(raw), ord);
    }
    return kept;
}

}  // namespace lognc
