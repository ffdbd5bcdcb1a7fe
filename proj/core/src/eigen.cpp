#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lognc/lie.hpp"
#include "zpoly_internal.hpp"

namespace lognc {

namespace {

struct NeedQuadExt {
    QuadMin min;
    std::string factor_str;
};

std::string zpoly_str(const internal::ZPoly& f) {
    std::ostringstream os;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (i + 1 < f.size() && f[i] > 0) os << "+";
        os << f[i].get_str();
        if (i > 0) os << "*x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

bool rat_sqrt(const Rat& q, Rat& root) {
    if (q < 0) return false;
    Int num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rat(rn, rd);
    root.canonicalize();
    return true;
}

// Roots of a monic charpoly inside the working field. The rational instance
// may request a quadratic extension; the extension instance reports larger
// obstructions.
struct RatRootFinder {
    FieldExtPolicy policy;

    std::vector<Rat> operator()(const std::vector<Rat>& coeffs) const {
        Int l = denominator_lcm(coeffs);
        internal::ZPoly z(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) {
            Rat v = coeffs[i] * Rat(l);
            v.canonicalize();
            z[i] = v.get_num();
        }
        internal::ztrim(z);
        auto roots = internal::zroots_rational(z);
        if (!roots.empty()) return roots;
        // No rational root: find the smallest irreducible factor.
        internal::ZPoly best;
        for (const auto& [fac, mult] : internal::zfactor(z))
            if (best.empty() || internal::zdeg(fac) < internal::zdeg(best)) best = fac;
        if (internal::zdeg(best) == 2 && policy == FieldExtPolicy::Allow) {
            // x^2 + p x + r, monic over Q: t^2 = s t + p' with s = -p, p' = -r.
            Rat p(best[1], best[2]), r(best[0], best[2]);
            p.canonicalize();
            r.canonicalize();
            throw NeedQuadExt{QuadMin{-p, -r}, zpoly_str(best)};
        }
        throw ExtensionObstruction(
            "eigenvalue requires a field extension beyond the supported range; factor " +
                zpoly_str(best),
            zpoly_str(best));
    }
};

struct QuadRootFinder {
    QuadMin field;

    std::vector<QuadExt> operator()(const std::vector<QuadExt>& coeffs) const {
        // Norm polynomial N = q * conj(q) has rational coefficients.
        std::vector<QuadExt> conj_coeffs;
        for (const auto& c : coeffs) conj_coeffs.push_back(c.conj());
        size_t n = coeffs.size();
        std::vector<QuadExt> N(2 * n - 1, QuadExt(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) N[i + j] = N[i + j] + coeffs[i] * conj_coeffs[j];
        std::vector<Rat> Nq(N.size());
        for (size_t i = 0; i < N.size(); ++i) {
            if (N[i].im() != 0) throw std::logic_error("norm polynomial is not rational");
            Nq[i] = N[i].re();
        }
        Int l = denominator_lcm(Nq);
        internal::ZPoly z(Nq.size());
        for (size_t i = 0; i < Nq.size(); ++i) {
            Rat v = Nq[i] * Rat(l);
            v.canonicalize();
            z[i] = v.get_num();
        }
        internal::ztrim(z);

        auto eval = [&](const QuadExt& x) {
            QuadExt acc(0);
            for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
            return acc;
        };

        std::vector<QuadExt> roots;
        internal::ZPoly witness;
        for (const auto& [fac, mult] : internal::zfactor(z)) {
            if (internal::zdeg(fac) == 1) {
                Rat r(-fac[0], fac[1]);
                r.canonicalize();
                QuadExt cand = QuadExt::embed(r, field);
                if (eval(cand) == QuadExt(0)) roots.push_back(cand);
            } else if (internal::zdeg(fac) == 2) {
                // Roots alpha + beta t of x^2 + p x + r inside Q(t).
                Rat p(fac[1], fac[2]), r(fac[0], fac[2]);
                p.canonicalize();
                r.canonicalize();
                Rat denom = field.discriminant();
                Rat ratio = (p * p - 4 * r) / denom;
                Rat beta;
                if (rat_sqrt(ratio, beta) && beta != 0) {
                    for (int sgn : {1, -1}) {
                        Rat b = beta * sgn;
                        Rat a = -(b * field.s + p) / 2;
                        QuadExt cand(a, b, field);
                        if (eval(cand) == QuadExt(0)) roots.push_back(cand);
                    }
                }
            } else if (witness.empty() || internal::zdeg(fac) < internal::zdeg(witness)) {
                witness = fac;
            }
        }
        std::sort(roots.begin(), roots.end(), [](const QuadExt& a, const QuadExt& b) {
            if (a.re() != b.re()) return a.re() < b.re();
            return a.im() < b.im();
        });
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        if (roots.empty()) {
            std::string w = witness.empty() ? std::string("(no witness)") : zpoly_str(witness);
            throw ExtensionObstruction(
                "eigenvalue requires an extension of degree > 2; factor " + w, w);
        }
        return roots;
    }
};

template <class F>
std::vector<F> flatten(const Mat<F>& m) {
    std::vector<F> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

// Restrict M to the invariant subspace with column basis V: M V = V M_V.
template <class F>
Mat<F> restrict_to(const Mat<F>& M, const Mat<F>& V) {
    Mat<F> img = M * V;
    Mat<F> out(V.cols(), V.cols());
    for (int c = 0; c < V.cols(); ++c) {
        std::vector<F> col(V.rows());
        for (int i = 0; i < V.rows(); ++i) col[i] = img.at(i, c);
        auto x = solve(V, col);
        if (!x) throw std::logic_error("subspace is not invariant");
        for (int i = 0; i < V.cols(); ++i) out.at(i, c) = (*x)[i];
    }
    return out;
}

// Constructive Lie's theorem on the span of the given matrices, acting on
// F^dim. Returns a common eigenvector.
template <class F, class Roots>
std::vector<F> lie_eigenvector(const std::vector<Mat<F>>& mats, int dim, const Roots& roots) {
    // Independent spanning subset.
    SpanTracker<F> span;
    std::vector<Mat<F>> basis;
    for (const auto& m : mats) {
        if (m.is_zero()) continue;
        if (span.insert(flatten(m))) basis.push_back(m);
    }
    if (basis.empty()) {
        std::vector<F> e1(dim, F(0));
        e1[0] = F(1);
        return e1;
    }

    // Derived span [L, L].
    SpanTracker<F> der_span;
    std::vector<Mat<F>> derived;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Mat<F> c = commutator(basis[i], basis[j]);
            if (c.is_zero()) continue;
            if (der_span.insert(flatten(c))) derived.push_back(c);
        }
    if (derived.size() == basis.size())
        throw std::logic_error("common_eigenvector: span is not solvable");

    // Codimension-one ideal I containing [L, L], and the leftover z.
    SpanTracker<F> ideal_span;
    std::vector<Mat<F>> ideal = derived;
    for (const auto& m : derived) ideal_span.insert(flatten(m));
    Mat<F> z;
    std::vector<Mat<F>> completions;
    for (const auto& m : basis)
        if (ideal_span.insert(flatten(m))) completions.push_back(m);
    z = completions.back();
    for (size_t i = 0; i + 1 < completions.size(); ++i) ideal.push_back(completions[i]);

    // Common eigenvector of the ideal, then its full weight space W.
    Mat<F> W(dim, dim);
    if (ideal.empty()) {
        W = Mat<F>::identity(dim);
    } else {
        std::vector<F> v = lie_eigenvector(ideal, dim, roots);
        // Weight of each ideal element on v.
        Mat<F> cur = Mat<F>::identity(dim);  // columns: current W basis
        int cur_cols = dim;
        for (const auto& M : ideal) {
            std::vector<F> img = M.apply(v);
            F lambda(0);
            for (int i = 0; i < dim; ++i)
                if (!(v[i] == F(0))) {
                    lambda = img[i] / v[i];
                    break;
                }
            for (int i = 0; i < dim; ++i)
                if (!(img[i] == lambda * v[i]))
                    throw std::logic_error("ideal eigenvector verification failed");
            // Intersect with ker(M - lambda) : solve inside current basis.
            Mat<F> Mres = restrict_to(M, cur);
            for (int i = 0; i < cur_cols; ++i) Mres.at(i, i) = Mres.at(i, i) - lambda;
            auto kb = kernel(Mres);
            if (kb.empty()) throw std::logic_error("weight space collapsed");
            Mat<F> next(dim, static_cast<int>(kb.size()));
            for (size_t c = 0; c < kb.size(); ++c) {
                std::vector<F> emb(dim, F(0));
                for (int r = 0; r < cur_cols; ++r)
                    for (int i = 0; i < dim; ++i) emb[i] = emb[i] + cur.at(i, r) * kb[c][r];
                for (int i = 0; i < dim; ++i) next.at(i, static_cast<int>(c)) = emb[i];
            }
            cur = next;
            cur_cols = cur.cols();
        }
        W = cur;
    }

    // Eigenvector of z on W.
    Mat<F> zW = restrict_to(z, W);
    std::vector<F> cp = charpoly(zW);
    std::vector<F> lams = roots(cp);

    struct Candidate {
        int pivot;
        F lambda;
        std::vector<F> vec;
    };
    std::vector<Candidate> cands;
    for (const auto& lam : lams) {
        Mat<F> shifted = zW;
        for (int i = 0; i < zW.rows(); ++i) shifted.at(i, i) = shifted.at(i, i) - lam;
        auto kb = kernel(shifted);
        for (const auto& k : kb) {
            std::vector<F> emb(dim, F(0));
            for (int r = 0; r < W.cols(); ++r)
                for (int i = 0; i < dim; ++i) emb[i] = emb[i] + W.at(i, r) * k[r];
            int pivot = 0;
            while (pivot < dim && emb[pivot] == F(0)) ++pivot;
            if (pivot == dim) continue;
            // Scale so the pivot coordinate is 1.
            F inv = F(1) / emb[pivot];
            for (auto& x : emb) x = x * inv;
            cands.push_back(Candidate{pivot, lam, std::move(emb)});
            break;  // canonical kernel vector per eigenvalue
        }
    }
    if (cands.empty()) throw std::logic_error("no eigenvector for any root");
    // Tie-break: earliest pivot, then root order as produced by the finder.
    int best = 0;
    for (size_t i = 1; i < cands.size(); ++i)
        if (cands[i].pivot < cands[best].pivot) best = static_cast<int>(i);
    return cands[best].vec;
}

template <class F>
std::vector<F> eigenvalues_on(const std::vector<Mat<F>>& mats, const std::vector<F>& v) {
    std::vector<F> lams;
    for (const auto& M : mats) {
        std::vector<F> img = M.apply(v);
        F lambda(0);
        bool found = false;
        for (size_t i = 0; i < v.size(); ++i)
            if (!(v[i] == F(0))) {
                lambda = img[i] / v[i];
                found = true;
                break;
            }
        if (!found) throw std::logic_error("zero eigenvector");
        for (size_t i = 0; i < v.size(); ++i)
            if (!(img[i] == lambda * v[i]))
                throw std::logic_error("final eigenvector verification failed");
        lams.push_back(lambda);
    }
    return lams;
}

}  // namespace

CommonEigenvector common_eigenvector(const std::vector<Mat<Rat>>& mats, FieldExtPolicy policy) {
    int dim = 0;
    for (const auto& m : mats) dim = std::max(dim, m.rows());
    if (dim == 0) throw std::invalid_argument("common_eigenvector needs a carrier");

    CommonEigenvector out;
    try {
        RatRootFinder rf{policy};
        std::vector<Rat> v = lie_eigenvector(mats, dim, rf);
        out.vector_q = v;
        out.eigenvalues_q = eigenvalues_on(mats, v);
        return out;
    } catch (const NeedQuadExt& need) {
        // Restart over the quadratic extension.
        std::vector<Mat<QuadExt>> emats;
        for (const auto& m : mats) {
            Mat<QuadExt> e(m.rows(), m.cols());
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) e.at(i, j) = QuadExt::embed(m.at(i, j), need.min);
            emats.push_back(std::move(e));
        }
        QuadRootFinder rf{need.min};
        try {
            std::vector<QuadExt> v = lie_eigenvector(emats, dim, rf);
            out.ext = need.min;
            out.vector_e = v;
            out.eigenvalues_e = eigenvalues_on(emats, v);
            return out;
        } catch (const NeedQuadExt&) {
            throw std::logic_error("extension requested inside an extension run");
        }
    }
}

}  // namespace lognc
