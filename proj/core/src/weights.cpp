#include "lognc/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lognc {

bool WeightSystem::valid() const {
    if (weights.empty()) return false;
    for (const auto& w : weights)
        if (w <= 0) return false;
    return degree >= 0;
}

std::vector<int> WeightSystem::min_weight_vars() const {
    Rat m = min_weight();
    std::vector<int> out;
    for (int i = 0; i < nvars(); ++i)
        if (weights[i] == m) out.push_back(i);
    return out;
}

Rat WeightSystem::min_weight() const {
    Rat m = weights.at(0);
    for (const auto& w : weights) m = std::min(m, w);
    return m;
}

std::string WeightSystem::json() const {
    std::ostringstream os;
    os << "{\"weights\":[";
    for (int i = 0; i < nvars(); ++i) {
        if (i) os << ",";
        os << "\"" << rat_to_string(weights[i]) << "\"";
    }
    os << "],\"degree\":\"" << rat_to_string(degree) << "\"}";
    return os.str();
}

namespace {

// Reduced row echelon form of a small rational matrix; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

// Kernel basis (columns) of the matrix, canonical RREF parameterization.
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> m, size_t cols) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Restricted growth strings enumerate set partitions canonically.
void enumerate_partitions(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> a(n, 0);
    for (;;) {
        out.push_back(a);
        int i = n - 1;
        for (; i >= 1; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) break;
        }
        if (i < 1) return;
        a[i] += 1;
        for (int j = i + 1; j < n; ++j) a[j] = 0;
    }
}

struct Inequality {
    std::vector<Rat> c;  // sum c_j t_j >= b
    Rat b;
};

// Exact Fourier-Motzkin feasibility for (K t)_i >= 1; returns a point w = K t
// with all entries >= 1, or nullopt. Tiny systems only.
std::optional<std::vector<Rat>> positive_point(const std::vector<std::vector<Rat>>& K) {
    size_t n = K.size(), k = K[0].size();
    std::vector<Inequality> sys;
    for (size_t i = 0; i < n; ++i) sys.push_back({K[i], Rat(1)});
    std::vector<std::vector<Inequality>> stages;
    for (size_t v = k; v-- > 0;) {
        stages.push_back(sys);
        std::vector<Inequality> next;
        std::vector<const Inequality*> pos, neg;
        for (const auto& q : sys) {
            if (q.c[v] > 0)
                pos.push_back(&q);
            else if (q.c[v] < 0)
                neg.push_back(&q);
            else
                next.push_back(q);
        }
        for (const auto* p : pos)
            for (const auto* m : neg) {
                Inequality q{std::vector<Rat>(k, Rat(0)), Rat(0)};
                // p scaled by -c_m[v], m scaled by c_p[v]; variable v cancels.
                Rat sp = -m->c[v], sm = p->c[v];
                for (size_t j = 0; j < k; ++j) q.c[j] = sp * p->c[j] + sm * m->c[j];
                q.b = sp * p->b + sm * m->b;
                next.push_back(std::move(q));
            }
        sys = std::move(next);
    }
    for (const auto& q : sys)
        if (q.b > 0) return std::nullopt;  // 0 >= b infeasible
    // Back-substitute, lowest admissible values first.
    std::vector<Rat> t(k, Rat(0));
    for (size_t v = 0; v < k; ++v) {
        const auto& stage = stages[stages.size() - 1 - v];
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (const auto& q : stage) {
            Rat rest = q.b;
            for (size_t j = v + 1; j < k; ++j) rest -= q.c[j] * t[j];
            if (q.c[v] > 0) {
                Rat bound = rest / q.c[v];
                if (!has_lo || bound > lo) lo = bound, has_lo = true;
            } else if (q.c[v] < 0) {
                Rat bound = rest / q.c[v];
                if (!has_hi || bound < hi) hi = bound, has_hi = true;
            }
        }
        if (has_lo)
            t[v] = lo;
        else if (has_hi)
            t[v] = hi - 1;
        else
            t[v] = 0;
    }
    std::vector<Rat> w(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) w[i] += K[i][j] * t[j];
    return w;
}

WeightSystem normalized(std::vector<Rat> w, const Monomial& alpha) {
    Rat mn = w[0];
    for (const auto& x : w) mn = std::min(mn, x);
    for (auto& x : w) x /= mn;
    Int l = denominator_lcm(w);
    for (auto& x : w) {
        x *= Rat(l);
        x.canonicalize();
    }
    WeightSystem W;
    W.degree = alpha.weighted_degree(w);
    W.weights = std::move(w);
    return W;
}

}  // namespace

std::optional<WeightSystem> find_weight_system(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("weight detection needs a nonzero polynomial");
    const int n = f.nvars();
    std::vector<Monomial> alphas;
    for (const auto& t : f.terms()) alphas.push_back(t.mono);

    // Difference system: <alpha_i - alpha_0, w> = 0.
    std::vector<std::vector<Rat>> diff;
    for (size_t i = 1; i < alphas.size(); ++i) {
        std::vector<Rat> row(n);
        for (int j = 0; j < n; ++j) row[j] = Rat(alphas[i][j] - alphas[0][j]);
        diff.push_back(std::move(row));
    }

    std::vector<std::vector<int>> partitions;
    enumerate_partitions(n, partitions);
    std::stable_sort(partitions.begin(), partitions.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         int ga = *std::max_element(a.begin(), a.end()) + 1;
                         int gb = *std::max_element(b.begin(), b.end()) + 1;
                         return ga < gb;
                     });

    for (const auto& part : partitions) {
        int g = *std::max_element(part.begin(), part.end()) + 1;
        // Constraint matrix on group values.
        std::vector<std::vector<Rat>> m;
        for (const auto& row : diff) {
            std::vector<Rat> red(g, Rat(0));
            for (int j = 0; j < n; ++j) red[part[j]] += row[j];
            m.push_back(std::move(red));
        }
        if (g == 1) {
            bool ones_ok = true;
            for (const auto& row : m)
                if (row[0] != 0) ones_ok = false;
            if (ones_ok)
                return normalized(std::vector<Rat>(n, Rat(1)), alphas[0]);
            continue;
        }
        auto kern = kernel_basis(m, g);
        if (kern.size() != 1) continue;
        std::vector<Rat> y(g);
        bool pos = true, neg = true;
        for (int j = 0; j < g; ++j) {
            y[j] = kern[0][j];
            if (y[j] <= 0) pos = false;
            if (y[j] >= 0) neg = false;
        }
        if (!pos && !neg) continue;
        if (neg)
            for (auto& v : y) v = -v;
        std::vector<Rat> w(n);
        for (int j = 0; j < n; ++j) w[j] = y[part[j]];
        return normalized(std::move(w), alphas[0]);
    }

    // Minimal-distinct search failed; fall back to exact linear feasibility
    // over the full solution space.
    std::vector<std::vector<Rat>> kern_cols = kernel_basis(diff, n);
    if (kern_cols.empty()) return std::nullopt;
    std::vector<std::vector<Rat>> K(n, std::vector<Rat>(kern_cols.size()));
    for (size_t j = 0; j < kern_cols.size(); ++j)
        for (int i = 0; i < n; ++i) K[i][j] = kern_cols[j][i];
    auto w = positive_point(K);
    if (!w) return std::nullopt;
    return normalized(std::move(*w), alphas[0]);
}

EulerDerivation euler_derivation(const RingPtr& ring, const WeightSystem& W) {
    if (!W.valid()) throw std::invalid_argument("invalid weight system");
    if (W.nvars() != ring->nvars()) throw std::invalid_argument("weight system arity mismatch");
    std::vector<Poly> cs;
    cs.reserve(W.nvars());
    for (int i = 0; i < W.nvars(); ++i) cs.push_back(Poly::variable(ring, i) * W.weights[i]);
    return EulerDerivation{Derivation(ring, std::move(cs)), W};
}

ChiDegree chi_degree(const Poly& p, const EulerDerivation& chi) {
    return poly_chi_degree(p, chi.W.weights);
}

std::map<Rat, std::vector<Poly>> graded_pieces(const std::vector<Poly>& basis,
                                               const EulerDerivation& chi) {
    std::map<Rat, std::vector<Poly>> pieces;
    for (const auto& p : basis) {
        ChiDegree d = chi_degree(p, chi);
        if (d.is_minus_infinity()) continue;
        if (d.is_inhomogeneous())
            throw std::invalid_argument("graded_pieces: element not chi-homogeneous: " + p.str());
        pieces[d.value].push_back(p);
    }
    return pieces;
}

namespace {
void enumerate_rec(const RingPtr& ring, const WeightSystem& W, int var, Rat remaining, bool exact,
                   std::vector<int>& exps, std::vector<Monomial>& out) {
    if (var == ring->nvars()) {
        if (!exact || remaining == 0) out.emplace_back(exps);
        return;
    }
    Rat w = W.weights[var];
    for (int e = 0; Rat(e) * w <= remaining; ++e) {
        exps[var] = e;
        enumerate_rec(ring, W, var + 1, remaining - Rat(e) * w, exact, exps, out);
    }
    exps[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_weight(const RingPtr& ring, const WeightSystem& W,
                                          const Rat& w) {
    std::vector<Monomial> out;
    if (w < 0) return out;
    std::vector<int> exps(ring->nvars(), 0);
    enumerate_rec(ring, W, 0, w, true, exps, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return mono_storage_less(a, b); });
    return out;
}

std::vector<Monomial> monomials_of_weight_at_most(const RingPtr& ring, const WeightSystem& W,
                                                  const Rat& w, bool exclude_constant) {
    std::vector<Monomial> out;
    if (w < 0) return out;
    std::vector<int> exps(ring->nvars(), 0);
    enumerate_rec(ring, W, 0, w, false, exps, out);
    if (exclude_constant)
        std::erase_if(out, [](const Monomial& m) { return m.is_one(); });
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return mono_storage_less(a, b); });
    return out;
}

}  // namespace lognc
