#ifndef LOGNC_LINALG_HPP
#define LOGNC_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "lognc/rational.hpp"

namespace lognc {

// Dense matrix over an exact field F (F(long), +, -, *, /, ==).
template <class F>
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols, F(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    F& at(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
    const F& at(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

    Mat operator+(const Mat& o) const {
        Mat m = *this;
        for (size_t k = 0; k < d_.size(); ++k) m.d_[k] = m.d_[k] + o.d_[k];
        return m;
    }
    Mat operator-(const Mat& o) const {
        Mat m = *this;
        for (size_t k = 0; k < d_.size(); ++k) m.d_[k] = m.d_[k] - o.d_[k];
        return m;
    }
    Mat operator*(const Mat& o) const {
        Mat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                if (at(i, k) == F(0)) continue;
                for (int j = 0; j < o.c_; ++j)
                    m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
            }
        return m;
    }
    Mat scaled(const F& s) const {
        Mat m = *this;
        for (auto& x : m.d_) x = x * s;
        return m;
    }
    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> out(r_, F(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out[i] = out[i] + at(i, j) * v[j];
        return out;
    }
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
    bool is_zero() const {
        for (const auto& x : d_)
            if (!(x == F(0))) return false;
        return true;
    }
    F trace() const {
        F t(0);
        for (int i = 0; i < r_; ++i) t = t + at(i, i);
        return t;
    }
    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

  private:
    int r_ = 0, c_ = 0;
    std::vector<F> d_;
};

template <class F>
Mat<F> commutator(const Mat<F>& a, const Mat<F>& b) {
    return a * b - b * a;
}

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> rref(Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!(m.at(i, c) == F(0))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        F inv = F(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == F(0)) continue;
            F f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Mat<F> m) {
    return static_cast<int>(rref(m).size());
}

// Kernel basis (canonical RREF parameterization, free variables set to 1).
template <class F>
std::vector<std::vector<F>> kernel(Mat<F> m) {
    const int n = m.cols();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(n, F(0));
        v[f] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(0) - m.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b (free variables zero), or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& A, const std::vector<F>& b) {
    Mat<F> aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
    std::vector<F> x(A.cols(), F(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), A.cols());
    return x;
}

// Characteristic polynomial coefficients c with det(xI - A) = sum c_k x^k,
// c.size() = n+1, monic. Faddeev-LeVerrier; exact over any field of
// characteristic zero.
template <class F>
std::vector<F> charpoly(const Mat<F>& A) {
    const int n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("charpoly needs a square matrix");
    std::vector<F> c(n + 1, F(0));
    c[n] = F(1);
    Mat<F> M = Mat<F>::identity(n);
    for (int k = 1; k <= n; ++k) {
        M = A * M;
        F t = M.trace();
        c[n - k] = F(0) - t / F(k);
        for (int i = 0; i < n; ++i) M.at(i, i) = M.at(i, i) + c[n - k];
    }
    return c;
}

// Incremental exact span tracking with expression of new vectors in terms of
// the inserted ones.
template <class F>
class SpanTracker {
  public:
    int dim() const { return static_cast<int>(rows_.size()); }
    int inserted() const { return n_inserted_; }

    // Express v in the span; nullopt when v is outside.
    std::optional<std::vector<F>> express(std::vector<F> v) const {
        std::vector<F> combo(n_inserted_, F(0));
        reduce(v, combo);
        for (const auto& x : v)
            if (!(x == F(0))) return std::nullopt;
        // Reduction accumulated v - sum(c_k row_k) = 0 as combo = -c, so flip.
        combo.resize(n_inserted_, F(0));
        for (auto& x : combo) x = F(0) - x;
        return combo;
    }

    bool contains(std::vector<F> v) const { return express(std::move(v)).has_value(); }

    // Insert v as a new element; returns false when dependent (not inserted).
    bool insert(std::vector<F> v) {
        std::vector<F> combo(n_inserted_ + 1, F(0));
        combo[n_inserted_] = F(1);
        reduce(v, combo);
        bool zero = true;
        for (const auto& x : v)
            if (!(x == F(0))) {
                zero = false;
                break;
            }
        ++n_inserted_;
        if (zero) return false;
        int pivot = 0;
        while (v[pivot] == F(0)) ++pivot;
        F inv = F(1) / v[pivot];
        for (auto& x : v) x = x * inv;
        for (auto& x : combo) x = x * inv;
        rows_.push_back(Row{std::move(v), pivot, std::move(combo)});
        return true;
    }

  private:
    struct Row {
        std::vector<F> vec;
        int pivot;
        std::vector<F> combo;
    };

    void reduce(std::vector<F>& v, std::vector<F>& combo) const {
        for (const auto& row : rows_) {
            if (v.size() < row.vec.size()) v.resize(row.vec.size(), F(0));
            F factor = v[row.pivot];
            if (factor == F(0)) continue;
            for (size_t j = 0; j < row.vec.size(); ++j) v[j] = v[j] - factor * row.vec[j];
            for (size_t j = 0; j < row.combo.size() && j < combo.size(); ++j)
                combo[j] = combo[j] - factor * row.combo[j];
        }
    }

    int n_inserted_ = 0;
    std::vector<Row> rows_;
};

}  // namespace lognc

#endif
