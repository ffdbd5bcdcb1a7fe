#ifndef LOGNC_WEIGHTS_HPP
#define LOGNC_WEIGHTS_HPP

#include <map>
#include <optional>
#include <vector>

#include "lognc/derivation.hpp"
#include "lognc/poly.hpp"

namespace lognc {

// Strictly positive rational weights for the ambient variables together with
// the degree of the defining polynomial under them.
struct WeightSystem {
    std::vector<Rat> weights;
    Rat degree = 0;

    int nvars() const { return static_cast<int>(weights.size()); }
    bool valid() const;

    // Indices of the variables of minimal weight (the lowest weight space).
    std::vector<int> min_weight_vars() const;
    Rat min_weight() const;

    std::string json() const;  // {"weights":["2","3"],"degree":"6"}
};

// Euler derivation  chi = sum_i w_i x_i d/dx_i  tied to its weight system.
struct EulerDerivation {
    Derivation chi;
    WeightSystem W;
};

// Detect a weight system making f weighted homogeneous: positive rational w
// and d with <alpha, w> = d for every exponent vector alpha of f. Among a
// positive-dimensional solution space, picks the solution with the fewest
// distinct weights (variable-partition enumeration in canonical order), then
// normalizes: smallest weight 1, cleared to integers when possible. Returns
// nullopt when no strictly positive solution exists.
std::optional<WeightSystem> find_weight_system(const Poly& f);

EulerDerivation euler_derivation(const RingPtr& ring, const WeightSystem& W);

// chi-degree of a polynomial: common weighted degree when chi-homogeneous,
// -infinity for 0, inhomogeneous otherwise.
ChiDegree chi_degree(const Poly& p, const EulerDerivation& chi);

// Decompose a list of chi-homogeneous polynomials by weight. Throws when an
// element is not chi-homogeneous.
std::map<Rat, std::vector<Poly>> graded_pieces(const std::vector<Poly>& basis,
                                               const EulerDerivation& chi);

// All monomials of the ring with weighted degree exactly w (finite since all
// weights are positive). Deterministic order.
std::vector<Monomial> monomials_of_weight(const RingPtr& ring, const WeightSystem& W,
                                          const Rat& w);
// As above with weighted degree <= w, total degree >= 1 optionally enforced.
std::vector<Monomial> monomials_of_weight_at_most(const RingPtr& ring, const WeightSystem& W,
                                                  const Rat& w, bool exclude_constant);

}  // namespace lognc

#endif
