#ifndef LOGNC_DERIVATION_HPP
#define LOGNC_DERIVATION_HPP

#include <span>
#include <string>
#include <vector>

#include "lognc/poly.hpp"

namespace lognc {

// Degree of a polynomial under a chi-grading: a rational value, -infinity
// (zero polynomial), or inhomogeneous.
struct ChiDegree {
    enum class Kind { Value, MinusInfinity, Inhomogeneous };
    Kind kind = Kind::MinusInfinity;
    Rat value;  // meaningful only for Kind::Value

    static ChiDegree of(Rat v) { return {Kind::Value, std::move(v)}; }
    static ChiDegree minus_infinity() { return {Kind::MinusInfinity, Rat(0)}; }
    static ChiDegree inhomogeneous() { return {Kind::Inhomogeneous, Rat(0)}; }

    bool is_value() const { return kind == Kind::Value; }
    bool is_minus_infinity() const { return kind == Kind::MinusInfinity; }
    bool is_inhomogeneous() const { return kind == Kind::Inhomogeneous; }
    std::string str() const;
};

ChiDegree poly_chi_degree(const Poly& p, std::span<const Rat> weights);

// A polynomial vector field  sum_i a_i d/dx_i  given by its coefficients.
class Derivation {
  public:
    Derivation() = default;
    Derivation(RingPtr ring, std::vector<Poly> coefficients);

    static Derivation zero(const RingPtr& ring);
    // d/dx_i.
    static Derivation partial(const RingPtr& ring, int var);

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return static_cast<int>(coeff_.size()); }
    const Poly& coeff(int i) const { return coeff_.at(i); }
    const std::vector<Poly>& coefficients() const { return coeff_; }

    bool is_zero() const;

    Poly apply(const Poly& p) const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator-(const Derivation& o) const;
    Derivation operator*(const Rat& c) const;
    bool operator==(const Derivation& o) const;

    // chi-degree under the weight vector: value e when every nonzero
    // coefficient a_i is homogeneous with deg(a_i) - w_i == e.
    ChiDegree chi_degree(std::span<const Rat> weights) const;

    // Integer-primitive scaling with positive leading sign; returns (unit u,
    // normalized) with *this == u * normalized.
    std::pair<Rat, Derivation> primitive_with_unit() const;

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Poly> coeff_;
};

// Lie bracket [a, b]: coefficient i is a(b_i) - b(a_i).
Derivation bracket(const Derivation& a, const Derivation& b);

}  // namespace lognc

#endif
