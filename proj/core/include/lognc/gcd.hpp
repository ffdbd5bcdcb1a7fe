#ifndef LOGNC_GCD_HPP
#define LOGNC_GCD_HPP

#include "lognc/poly.hpp"

namespace lognc {

// Multivariate gcd over Q via the primitive subresultant remainder sequence.
// Result is integer-primitive with positive leading coefficient; gcd(0,0)=0.
Poly poly_gcd(const Poly& a, const Poly& b);

// gcd of p with all its partial derivatives: product of q^(e-1) over
// irreducible factors q^e of p (characteristic zero).
Poly gcd_with_partials(const Poly& p);

// Squarefree (= reduced) test.
bool is_squarefree(const Poly& p);

// The radical: product of the distinct irreducible factors, primitive.
Poly squarefree_part(const Poly& p);

// Coefficients of p viewed as univariate in var; index = power of var.
// Entries live in the same ring with var absent. Empty for p = 0.
std::vector<Poly> coeffs_in_var(const Poly& p, int var);
Poly from_coeffs_in_var(const RingPtr& ring, int var, const std::vector<Poly>& coeffs);

}  // namespace lognc

#endif
