#ifndef LOGNC_POLY_HPP
#define LOGNC_POLY_HPP

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lognc/monomial.hpp"
#include "lognc/rational.hpp"

namespace lognc {

// Ambient polynomial ring: a fixed list of variable names. Shared by value
// semantics through a RingPtr; two rings are compatible when their variable
// lists coincide.
class PolyRing {
  public:
    explicit PolyRing(std::vector<std::string> vars);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::string& var_name(int i) const { return vars_.at(i); }
    const std::vector<std::string>& var_names() const { return vars_; }
    int var_index(const std::string& name) const;  // -1 when absent

  private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial mono;
    Rat coeff;
};

// Immutable-by-convention sparse multivariate polynomial over Q. Terms are
// kept sorted ascending under mono_storage_less with no zero coefficients;
// this canonical layout makes equality, hashing and printing order-stable.
class Poly {
  public:
    Poly() = default;

    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, const Rat& c);
    static Poly variable(RingPtr ring, int var);
    static Poly monomial(RingPtr ring, Monomial m, const Rat& c);
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return ring_ ? ring_->nvars() : 0; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent).
    Rat constant_term() const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const;

    Poly pow(int k) const;

    // Formal partial derivative with respect to variable i.
    Poly derivative(int var) const;

    int total_degree() const;   // -1 for the zero polynomial
    int degree_in(int var) const;
    WDegree weighted_degree(std::span<const Rat> weights) const;

    // Largest term under the given order (requires nonzero).
    const Term& leading_term(const MonomialOrder& ord) const;
    // Largest term under the storage order (requires nonzero).
    const Term& storage_leading_term() const;

    Rat coeff_of(const Monomial& m) const;

    // Exact quotient this / q, or nullopt when q does not divide exactly.
    // Throws on q = 0.
    std::optional<Poly> divide_exact(const Poly& q) const;

    // Evaluate with variable -> polynomial substitution, values[i] replacing
    // variable i. A ring homomorphism; values may live in another ring.
    Poly substitute(const std::vector<Poly>& values) const;

    // Evaluate at a rational point.
    Rat evaluate(std::span<const Rat> point) const;

    // content(): gcd of coefficients (positive), 0 for the zero polynomial.
    Rat content() const;
    // Integer-primitive normal form: integer coefficients with content 1 and
    // positive leading coefficient under the storage order. Returns the unit
    // u with *this == u * primitive.
    std::pair<Rat, Poly> primitive_with_unit() const;
    Poly primitive() const { return primitive_with_unit().second; }

    std::string str() const;

    // Total order for canonical sorting of polynomial lists.
    static int compare(const Poly& a, const Poly& b);

  private:
    RingPtr ring_;
    std::vector<Term> terms_;  // ascending under mono_storage_less

    void normalize();  // sort + combine + drop zeros
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace lognc

#endif
