#ifndef LOGNC_FACTOR_HPP
#define LOGNC_FACTOR_HPP

#include <utility>
#include <vector>

#include "lognc/poly.hpp"

namespace lognc {

struct Factorization {
    Rat unit;
    std::vector<std::pair<Poly, int>> factors;  // irreducible over Q, primitive

    Poly recombine(const RingPtr& ring) const;
};

// Irreducible factorization over Q. Desk-scale method: monomial extraction,
// radical via gcd with the partials, then univariate Zassenhaus reached
// through a Kronecker exponent packing with subset recombination. Intended
// for small inputs (per-variable degree boxes up to a few hundred packed
// monomials); larger inputs are rejected with an error rather than silently
// mis-factored. Factor order is deterministic.
Factorization factor_irreducible(const Poly& p);

bool is_irreducible(const Poly& p);

// Certificate of irreducibility over C, where available at desk scale:
// linear forms, and two-variable weighted-homogeneous binomials
// c1 y^b + c2 x^a with gcd(a, b) = 1. Everything else reports Unknown
// (callers must not treat Unknown as reducible).
enum class AbsIrred { Certified, Unknown };
AbsIrred absolutely_irreducible(const Poly& p);

}  // namespace lognc

#endif
