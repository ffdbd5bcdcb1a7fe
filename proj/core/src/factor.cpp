#include "lognc/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lognc/gcd.hpp"
#include "zpoly_internal.hpp"

namespace lognc {

using internal::ZPoly;

Poly Factorization::recombine(const RingPtr& ring) const {
    Poly acc = Poly::constant(ring, unit);
    for (const auto& [q, m] : factors) acc = acc * q.pow(m);
    return acc;
}

namespace {

constexpr long kMaxPackedDegree = 200000;
constexpr int kMaxAtoms = 22;

std::vector<int> vars_present(const Poly& p) {
    std::vector<int> vs;
    for (int v = 0; v < p.nvars(); ++v)
        if (p.degree_in(v) > 0) vs.push_back(v);
    return vs;
}

// Integer-coefficient image of a primitive polynomial.
ZPoly pack_kronecker(const Poly& p, const std::vector<int>& vars,
                     const std::vector<long>& radix_base) {
    long maxdeg = 0;
    ZPoly u;
    for (const auto& t : p.terms()) {
        long e = 0;
        for (size_t i = 0; i < vars.size(); ++i) e += t.mono[vars[i]] * radix_base[i];
        maxdeg = std::max(maxdeg, e);
    }
    u.assign(maxdeg + 1, Int(0));
    for (const auto& t : p.terms()) {
        long e = 0;
        for (size_t i = 0; i < vars.size(); ++i) e += t.mono[vars[i]] * radix_base[i];
        u[e] += t.coeff.get_num();  // primitive input: denominators are 1
    }
    internal::ztrim(u);
    return u;
}

Poly unpack_kronecker(const ZPoly& u, const RingPtr& ring, const std::vector<int>& vars,
                      const std::vector<long>& box) {
    std::vector<Term> terms;
    for (size_t e = 0; e < u.size(); ++e) {
        if (u[e] == 0) continue;
        long rest = static_cast<long>(e);
        std::vector<int> exps(ring->nvars(), 0);
        for (size_t i = 0; i < vars.size(); ++i) {
            exps[vars[i]] = static_cast<int>(rest % box[i]);
            rest /= box[i];
        }
        terms.push_back({Monomial(std::move(exps)), Rat(u[e])});
    }
    return Poly::from_terms(ring, std::move(terms));
}

ZPoly to_zpoly(const Poly& p, int var) {
    ZPoly u(p.degree_in(var) + 1, Int(0));
    for (const auto& t : p.terms()) u[t.mono[var]] += t.coeff.get_num();
    internal::ztrim(u);
    return u;
}

Poly from_zpoly(const RingPtr& ring, int var, const ZPoly& u) {
    std::vector<Term> terms;
    for (size_t e = 0; e < u.size(); ++e)
        if (u[e] != 0) terms.push_back({Monomial::unit(ring->nvars(), var, static_cast<int>(e)),
                                        Rat(u[e])});
    return Poly::from_terms(ring, std::move(terms));
}

// Irreducible factors of a squarefree primitive polynomial.
std::vector<Poly> factor_squarefree(Poly p) {
    const RingPtr ring = p.ring();
    std::vector<int> vars = vars_present(p);
    if (vars.empty()) return {};
    if (vars.size() == 1) {
        std::vector<Poly> out;
        for (const auto& [g, mult] : internal::zfactor(to_zpoly(p, vars[0])))
            for (int i = 0; i < mult; ++i) out.push_back(from_zpoly(ring, vars[0], g));
        return out;
    }

    // Kronecker packing box: per-variable degree + 1.
    std::vector<long> box, radix_base;
    long total = 1;
    for (int v : vars) {
        box.push_back(p.degree_in(v) + 1);
        radix_base.push_back(total);
        total *= box.back();
        if (total > kMaxPackedDegree)
            throw std::runtime_error("factorization input exceeds the desk-scale degree box");
    }

    std::vector<Poly> out;
    for (;;) {
        if (p.is_constant()) break;
        ZPoly packed = pack_kronecker(p, vars, radix_base);
        std::vector<ZPoly> atoms;
        for (const auto& [g, mult] : internal::zfactor(packed))
            for (int i = 0; i < mult; ++i) atoms.push_back(g);
        if (atoms.size() > kMaxAtoms)
            throw std::runtime_error("factorization image splits beyond the desk-scale cap");
        if (atoms.size() <= 1) {
            out.push_back(p);
            return out;
        }

        // Sub-multiset products, smallest packed degree first; the first
        // divisor found is irreducible.
        size_t m = atoms.size();
        std::vector<unsigned> masks;
        for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) masks.push_back(mask);
        auto mask_deg = [&](unsigned mask) {
            long d = 0;
            for (size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) d += internal::zdeg(atoms[i]);
            return d;
        };
        std::stable_sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
            long da = mask_deg(a), db = mask_deg(b);
            if (da != db) return da < db;
            return a < b;
        });

        bool split = false;
        for (unsigned mask : masks) {
            ZPoly prod{Int(1)};
            for (size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) prod = internal::zmul(prod, atoms[i]);
            Poly cand = unpack_kronecker(prod, ring, vars, box).primitive();
            if (cand.is_constant()) continue;
            auto quot = p.divide_exact(cand);
            if (!quot) continue;
            out.push_back(cand);
            p = quot->primitive();
            split = true;
            break;
        }
        if (!split) {
            out.push_back(p);
            return out;
        }
    }
    return out;
}

}  // namespace

Factorization factor_irreducible(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
    Factorization out;
    auto [unit, prim] = p.primitive_with_unit();
    out.unit = unit;
    if (prim.is_constant()) {
        out.unit = out.unit * prim.constant_term();
        return out;
    }

    // Monomial content x_i^k.
    Poly rest = prim;
    for (int v = 0; v < p.nvars(); ++v) {
        int mn = rest.is_zero() ? 0 : rest.terms()[0].mono[v];
        for (const auto& t : rest.terms()) mn = std::min(mn, t.mono[v]);
        if (mn > 0) {
            out.factors.push_back({Poly::variable(p.ring(), v), mn});
            auto q = rest.divide_exact(Poly::variable(p.ring(), v).pow(mn));
            rest = *q;
        }
    }
    if (rest.is_constant()) {
        out.unit = out.unit * rest.constant_term();
        std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
            if (a.first.total_degree() != b.first.total_degree())
                return a.first.total_degree() < b.first.total_degree();
            return Poly::compare(a.first, b.first) < 0;
        });
        return out;
    }

    Poly radical = squarefree_part(rest);
    std::vector<Poly> irreducibles = factor_squarefree(radical);

    // Multiplicities by repeated exact division.
    for (const auto& q : irreducibles) {
        int mult = 0;
        for (;;) {
            auto quot = rest.divide_exact(q);
            if (!quot) break;
            rest = *quot;
            ++mult;
        }
        if (mult == 0) throw std::logic_error("factor lost during multiplicity recovery");
        out.factors.push_back({q, mult});
    }
    if (!rest.is_constant()) throw std::logic_error("incomplete factorization");
    out.unit = out.unit * rest.constant_term();

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() < b.first.total_degree();
        return Poly::compare(a.first, b.first) < 0;
    });

    // Exactness check.
    if (!(out.recombine(p.ring()) == p)) throw std::logic_error("factorization does not recombine");
    return out;
}

bool is_irreducible(const Poly& p) {
    if (p.is_zero() || p.is_constant()) return false;
    auto f = factor_irreducible(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

AbsIrred absolutely_irreducible(const Poly& p) {
    if (p.is_zero() || p.is_constant()) return AbsIrred::Unknown;
    if (p.total_degree() == 1) return AbsIrred::Certified;
    std::vector<int> vs;
    for (int v = 0; v < p.nvars(); ++v)
        if (p.degree_in(v) > 0) vs.push_back(v);
    if (vs.size() == 2 && p.term_count() == 2) {
        // c1 y^b + c2 x^a with coprime exponents defines an irreducible curve
        // over any extension field.
        const auto& t0 = p.terms()[0].mono;
        const auto& t1 = p.terms()[1].mono;
        int a0 = t0[vs[0]], b0 = t0[vs[1]];
        int a1 = t1[vs[0]], b1 = t1[vs[1]];
        bool pure = (a0 > 0 && b0 == 0 && a1 == 0 && b1 > 0) ||
                    (a0 == 0 && b0 > 0 && a1 > 0 && b1 == 0);
        int ea = std::max(a0, a1), eb = std::max(b0, b1);
        if (pure && std::gcd(ea, eb) == 1) return AbsIrred::Certified;
    }
    return AbsIrred::Unknown;
}

}  // namespace lognc
