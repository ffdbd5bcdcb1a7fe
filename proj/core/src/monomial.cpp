#include "lognc/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lognc {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
        if (x < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::unit(int nvars, int var, int power) {
    Monomial m(nvars);
    if (var < 0 || var >= nvars) throw std::out_of_range("variable index");
    m.e_[var] = power;
    return m;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

int Monomial::total_degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
}

Rat Monomial::weighted_degree(std::span<const Rat> weights) const {
    Rat d = 0;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0) d += Rat(e_[i]) * weights[i];
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
    return r;
}

Monomial Monomial::divide_by(const Monomial& other) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= other.e_[i];
        if (r.e_[i] < 0) throw std::logic_error("monomial division underflow");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
}

// Reverse lexicographic tie-break shared by both orders: with equal degree,
// a < b iff the last index where they differ has a-exponent > b-exponent.
static bool revlex_less(const Monomial& a, const Monomial& b) {
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

bool mono_storage_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return revlex_less(a, b);
}

MonomialOrder::MonomialOrder(std::vector<Rat> weights) : weights_(std::move(weights)) {
    for (const auto& w : weights_)
        if (w <= 0) throw std::invalid_argument("monomial order weights must be positive");
}

Rat MonomialOrder::degree(const Monomial& m) const {
    return m.weighted_degree(weights_);
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    Rat da = degree(a), db = degree(b);
    int c = cmp(da, db);
    if (c != 0) return c < 0;
    return revlex_less(a, b);
}

}  // namespace lognc
