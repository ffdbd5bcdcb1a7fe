#include "lognc/gcd.hpp"

#include <stdexcept>

namespace lognc {

std::vector<Poly> coeffs_in_var(const Poly& p, int var) {
    std::vector<Poly> out;
    if (p.is_zero()) return out;
    out.assign(p.degree_in(var) + 1, Poly::zero(p.ring()));
    for (const auto& t : p.terms()) {
        std::vector<int> exps = t.mono.exponents();
        int e = exps[var];
        exps[var] = 0;
        out[e] = out[e] + Poly::monomial(p.ring(), Monomial(std::move(exps)), t.coeff);
    }
    return out;
}

Poly from_coeffs_in_var(const RingPtr& ring, int var, const std::vector<Poly>& coeffs) {
    Poly acc = Poly::zero(ring);
    Poly x = Poly::variable(ring, var);
    for (size_t e = 0; e < coeffs.size(); ++e)
        if (!coeffs[e].is_zero()) acc = acc + coeffs[e] * x.pow(static_cast<int>(e));
    return acc;
}

namespace {

int first_var_present(const Poly& a, const Poly& b) {
    for (int v = 0; v < a.nvars(); ++v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

struct UniView {
    std::vector<Poly> c;  // coefficients, c.back() != 0
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const Poly& lc() const { return c.back(); }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

UniView view(const Poly& p, int var) { return UniView{coeffs_in_var(p, var)}; }

UniView mul_coeff(const UniView& a, const Poly& k) {
    UniView r = a;
    for (auto& q : r.c) q = q * k;
    r.trim();
    return r;
}

UniView sub(const UniView& a, const UniView& b) {
    UniView r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), Poly::zero(b.c[0].ring()));
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
}

UniView shift_mul(const UniView& a, int k, const Poly& coeff) {
    if (a.is_zero()) return a;
    UniView r;
    r.c.assign(a.c.size() + k, Poly::zero(a.c[0].ring()));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i] * coeff;
    r.trim();
    return r;
}

// Pseudo remainder lc(B)^(dA-dB+1) A mod B in the main variable.
UniView prem_full(const UniView& A0, const UniView& B) {
    int dA = A0.deg(), dB = B.deg();
    if (dA < dB) return A0;
    UniView A = A0;
    int steps = 0;
    const Poly& b = B.lc();
    while (!A.is_zero() && A.deg() >= dB) {
        int k = A.deg() - dB;
        Poly a = A.lc();
        A = sub(mul_coeff(A, b), shift_mul(B, k, a));
        ++steps;
    }
    int want = dA - dB + 1;
    for (; steps < want; ++steps) A = mul_coeff(A, b);
    return A;
}

Poly content_in_var(const UniView& v);

// Forward declaration of the full gcd used in the recursion.
Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in_var(const UniView& v) {
    if (v.is_zero()) throw std::logic_error("content of zero");
    Poly g = Poly::zero(v.c[0].ring());
    for (const auto& q : v.c) g = gcd_rec(g, q);
    return g;
}

UniView divide_view(const UniView& v, const Poly& d) {
    UniView r = v;
    for (auto& q : r.c) {
        auto qq = q.divide_exact(d);
        if (!qq) throw std::logic_error("inexact division in gcd");
        q = *qq;
    }
    return r;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.ring(), Rat(1));

    int var = first_var_present(a, b);
    UniView A = view(a, var), B = view(b, var);
    if (A.deg() < B.deg()) std::swap(A, B);
    if (B.deg() == 0) {
        // gcd(A, const-in-var B) = gcd(cont(A), B).
        return gcd_rec(content_in_var(A), B.c[0]).primitive();
    }

    Poly contA = content_in_var(A);
    Poly contB = content_in_var(B);
    Poly cont_gcd = gcd_rec(contA, contB);
    A = divide_view(A, contA);
    B = divide_view(B, contB);

    // Subresultant PRS on the primitive parts.
    const RingPtr ring = a.ring();
    Poly g = Poly::constant(ring, Rat(1));
    Poly h = Poly::constant(ring, Rat(1));
    for (;;) {
        int d = A.deg() - B.deg();
        UniView R = prem_full(A, B);
        if (R.is_zero()) break;
        if (R.deg() == 0) {
            // Primitive parts are coprime in the main variable.
            return cont_gcd.primitive();
        }
        A = B;
        Poly divisor = g * h.pow(d);
        B = divide_view(R, divisor);
        g = A.lc();
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = g;
        } else {
            auto q = g.pow(d).divide_exact(h.pow(d - 1));
            if (!q) throw std::logic_error("subresultant h-update failed");
            h = *q;
        }
    }
    Poly pp = from_coeffs_in_var(ring, var, divide_view(B, content_in_var(B)).c);
    return (cont_gcd * pp).primitive();
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("gcd ring mismatch");
    return gcd_rec(a, b).primitive();
}

Poly gcd_with_partials(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("gcd_with_partials of zero");
    Poly g = Poly::zero(p.ring());
    for (int v = 0; v < p.nvars(); ++v) g = poly_gcd(g, p.derivative(v));
    return poly_gcd(p, g);
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    return gcd_with_partials(p).is_constant();
}

Poly squarefree_part(const Poly& p) {
    Poly g = gcd_with_partials(p);
    auto q = p.divide_exact(g);
    if (!q) throw std::logic_error("radical division failed");
    return q->primitive();
}

}  // namespace lognc
