#ifndef LOGNC_MONOMIAL_HPP
#define LOGNC_MONOMIAL_HPP

#include <compare>
#include <span>
#include <vector>

#include "lognc/rational.hpp"

namespace lognc {

// Exponent vector of a power product x_1^{e_1} ... x_n^{e_n}.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial unit(int nvars, int var, int power = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_one() const;
    int total_degree() const;
    Rat weighted_degree(std::span<const Rat> weights) const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Quotient this / other; requires other.divides(*this).
    Monomial divide_by(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return e_ == other.e_; }

  private:
    std::vector<int> e_;
};

// Structural order used for term storage and tie-breaking: graded (total
// degree) reverse lexicographic. Weight-independent, so every polynomial has
// one canonical term layout regardless of the active weight system.
bool mono_storage_less(const Monomial& a, const Monomial& b);

// Active computational order: weighted degree first (strictly positive
// rational weights), ties broken by reverse lexicographic on exponents.
// Homogeneous pieces are contiguous and Groebner runs are grading-compatible.
class MonomialOrder {
  public:
    explicit MonomialOrder(std::vector<Rat> weights);

    int nvars() const { return static_cast<int>(weights_.size()); }
    const std::vector<Rat>& weights() const { return weights_; }

    bool less(const Monomial& a, const Monomial& b) const;
    Rat degree(const Monomial& m) const;

  private:
    std::vector<Rat> weights_;
};

}  // namespace lognc

#endif
