#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lognc/lie.hpp"
#include "zpoly_internal.hpp"

namespace lognc {

namespace {

bool is_nilpotent_mat(const Mat<Rat>& m) {
    Mat<Rat> p = m;
    for (int i = 0; i < m.rows(); ++i) {
        if (p.is_zero()) return true;
        p = p * m;
    }
    return p.is_zero();
}

// Lower central series test on a subspace (given as echelon basis).
bool subspace_nilpotent(const LieAlgebra& L, const Subspace& basis) {
    Subspace cur = basis;
    for (int guard = 0; guard <= static_cast<int>(basis.size()); ++guard) {
        if (cur.empty()) return true;
        std::vector<std::vector<Rat>> vecs;
        for (const auto& x : basis)
            for (const auto& y : cur) vecs.push_back(L.bracket(x, y));
        Mat<Rat> m(static_cast<int>(vecs.size()), L.dim());
        for (size_t i = 0; i < vecs.size(); ++i)
            for (int j = 0; j < L.dim(); ++j) m.at(static_cast<int>(i), j) = vecs[i][j];
        std::vector<int> piv = rref(m);
        Subspace next;
        for (size_t r = 0; r < piv.size(); ++r) {
            std::vector<Rat> v(L.dim());
            for (int j = 0; j < L.dim(); ++j) v[j] = m.at(static_cast<int>(r), j);
            next.push_back(std::move(v));
        }
        if (next.size() == cur.size()) return false;
        cur = std::move(next);
    }
    return cur.empty();
}

// Deterministic candidate elements: basis vectors, pair sums/differences,
// then seeded small random combinations.
std::vector<std::vector<Rat>> candidate_elements(int n, int random_count) {
    std::vector<std::vector<Rat>> cands;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> v(n, Rat(0));
        v[i] = 1;
        cands.push_back(v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int sign : {1, -1}) {
                std::vector<Rat> v(n, Rat(0));
                v[i] = 1;
                v[j] = sign;
                cands.push_back(v);
            }
    std::mt19937_64 rng(0x51e2d3c4b5a6ULL);
    for (int k = 0; k < random_count; ++k) {
        std::vector<Rat> v(n, Rat(0));
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            long c = static_cast<long>(rng() % 7) - 3;
            v[i] = c;
            if (c != 0) nonzero = true;
        }
        if (nonzero) cands.push_back(v);
    }
    return cands;
}

// Charpoly of a rational matrix as a primitive integer polynomial.
internal::ZPoly integer_charpoly(const Mat<Rat>& A) {
    std::vector<Rat> c = charpoly(A);
    Int l = denominator_lcm(c);
    internal::ZPoly z(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        Rat v = c[i] * Rat(l);
        v.canonicalize();
        z[i] = v.get_num();
    }
    internal::ztrim(z);
    return z;
}

struct NilpotentSearch {
    std::optional<std::vector<Rat>> element;
    std::string obstruction_factor;  // best witness when no rational nilpotent
};

std::string zpoly_str(const internal::ZPoly& f) {
    std::ostringstream os;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (i + 1 < f.size() && f[i] > 0) os << "+";
        os << f[i].get_str();
        if (i > 0) os << "*t";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

// Nonzero ad-nilpotent element of a semisimple algebra, over the rationals
// when one is reachable: direct candidates first, then eigenvectors of
// nonzero rational eigenvalues of ad h for h in a Cartan subalgebra.
NilpotentSearch find_nilpotent(const LieAlgebra& S) {
    NilpotentSearch res;
    const int n = S.dim();
    auto cands = candidate_elements(n, 64);

    for (const auto& v : cands) {
        if (is_nilpotent_mat(S.ad(v))) {
            res.element = v;
            return res;
        }
    }

    // Cartan subalgebra: a nilpotent Engel subalgebra (Fitting-null of ad x).
    Subspace cartan;
    for (const auto& v : cands) {
        Mat<Rat> a = S.ad(v);
        Mat<Rat> p = Mat<Rat>::identity(n);
        for (int i = 0; i < n; ++i) p = p * a;
        Subspace k0 = kernel(p);
        if (static_cast<int>(k0.size()) == n) continue;  // ad x nilpotent: skip
        if (subspace_nilpotent(S, k0)) {
            if (cartan.empty() || k0.size() < cartan.size()) cartan = k0;
        }
    }
    if (cartan.empty()) return res;

    // Root elements for rational eigenvalues of ad h'.
    std::vector<std::vector<Rat>> hs = candidate_elements(static_cast<int>(cartan.size()), 16);
    for (const auto& hc : hs) {
        std::vector<Rat> h(n, Rat(0));
        for (size_t i = 0; i < cartan.size(); ++i)
            for (int j = 0; j < n; ++j) h[j] += hc[i] * cartan[i][j];
        Mat<Rat> a = S.ad(h);
        internal::ZPoly cp = integer_charpoly(a);
        auto roots = internal::zroots_rational(cp);
        std::vector<Rat> nonzero;
        for (const auto& r : roots)
            if (r != 0) nonzero.push_back(r);
        std::sort(nonzero.begin(), nonzero.end(), [](const Rat& x, const Rat& y) {
            Rat ax = abs(x), ay = abs(y);
            if (ax != ay) return ax < ay;
            return x > y;  // prefer the positive one
        });
        for (const auto& lam : nonzero) {
            Mat<Rat> shifted = a;
            for (int i = 0; i < n; ++i) shifted.at(i, i) -= lam;
            auto ker = kernel(shifted);
            for (const auto& v : ker) {
                if (is_nilpotent_mat(S.ad(v))) {
                    res.element = v;
                    return res;
                }
            }
        }
        if (res.obstruction_factor.empty()) {
            // Record the smallest non-linear irreducible factor as witness.
            internal::ZPoly best;
            for (const auto& [fac, mult] : internal::zfactor(cp))
                if (internal::zdeg(fac) >= 2 &&
                    (best.empty() || internal::zdeg(fac) < internal::zdeg(best)))
                    best = fac;
            if (!best.empty()) res.obstruction_factor = zpoly_str(best);
        }
    }
    return res;
}

}  // namespace

std::optional<Sl2Triple> find_sl2_triple(const LieAlgebra& L) {
    if (L.dim() == 0 || is_solvable(L)) return std::nullopt;
    Subspace levi = levi_subalgebra(L);
    LieAlgebra S = subalgebra(L, levi, "s");
    const int n = S.dim();

    NilpotentSearch ns = find_nilpotent(S);
    if (!ns.element) {
        std::string witness = ns.obstruction_factor.empty()
                                  ? std::string("(no rational spectrum witness)")
                                  : ns.obstruction_factor;
        throw Sl2Obstruction(
            "no rational nilpotent element: an sl2-triple exists only over a field extension; "
            "witness factor " + witness,
            witness);
    }
    std::vector<Rat> e = *ns.element;

    // Jacobson-Morozov: solve (ad e)^2 f0 = -2 e, set h = [e, f0], then
    // correct f inside ker(ad e) so that [h, f] = -2 f.
    Mat<Rat> ade = S.ad(e);
    Mat<Rat> ade2 = ade * ade;
    std::vector<Rat> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = -2 * e[i];
    auto f0 = solve(ade2, rhs);
    if (!f0) throw std::logic_error("Jacobson-Morozov system has no solution");
    std::vector<Rat> h = S.bracket(e, *f0);

    // w = -([h, f0] + 2 f0) lies in ker(ad e); solve (ad h + 2) z = w there.
    std::vector<Rat> w = S.bracket(h, *f0);
    for (int i = 0; i < n; ++i) w[i] = -(w[i] + 2 * (*f0)[i]);
    auto ker_basis = kernel(ade);
    const int kd = static_cast<int>(ker_basis.size());
    Mat<Rat> adh = S.ad(h);
    // Matrix of (ad h + 2) on the kernel, plus the coordinates of w there.
    Mat<Rat> big(n, kd);
    for (int c = 0; c < kd; ++c) {
        std::vector<Rat> img = adh.apply(ker_basis[c]);
        for (int i = 0; i < n; ++i) big.at(i, c) = img[i] + 2 * ker_basis[c][i];
    }
    auto z = solve(big, w);
    if (!z) throw std::logic_error("sl2 correction system has no solution");
    std::vector<Rat> f = *f0;
    for (int c = 0; c < kd; ++c)
        for (int i = 0; i < n; ++i) f[i] += (*z)[c] * ker_basis[c][i];

    // Exact relation checks inside S.
    auto expect = [](const std::vector<Rat>& got, const std::vector<Rat>& want, int scale) {
        for (size_t i = 0; i < got.size(); ++i)
            if (got[i] != scale * want[i]) throw std::logic_error("sl2 relations violated");
    };
    expect(S.bracket(h, e), e, 2);
    expect(S.bracket(h, f), f, -2);
    expect(S.bracket(e, f), h, 1);

    // Transport to L coordinates.
    auto lift = [&](const std::vector<Rat>& v) {
        std::vector<Rat> out(L.dim(), Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < L.dim(); ++j) out[j] += v[i] * levi[i][j];
        return out;
    };
    Sl2Triple t{lift(h), lift(e), lift(f)};
    expect(L.bracket(t.h, t.e), t.e, 2);
    return t;
}

}  // namespace lognc
