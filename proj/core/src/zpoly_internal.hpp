#ifndef LOGNC_ZPOLY_INTERNAL_HPP
#define LOGNC_ZPOLY_INTERNAL_HPP

// Dense integer univariate polynomials backing the factorization routines.
// Internal to the library.

#include <utility>
#include <vector>

#include "lognc/rational.hpp"

namespace lognc::internal {

// c[0] + c[1] t + ... ; invariant: empty or c.back() != 0.
using ZPoly = std::vector<Int>;

int zdeg(const ZPoly& f);
void ztrim(ZPoly& f);
ZPoly zscale(const ZPoly& f, const Int& c);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zderiv(const ZPoly& f);
Int zcontent(const ZPoly& f);
ZPoly zprimitive(const ZPoly& f);  // positive leading coefficient
// Exact division over Z; false when not exact.
bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quot);
// Primitive gcd over Z.
ZPoly zgcd(const ZPoly& a, const ZPoly& b);

// Irreducible factorization over Q of a nonzero integer polynomial:
// f = unit * prod factors[i]^mult[i], factors primitive with positive lead.
// Deterministic output order.
std::vector<std::pair<ZPoly, int>> zfactor(const ZPoly& f);

// Convenience: rational roots of f (from its linear factors), sorted.
std::vector<Rat> zroots_rational(const ZPoly& f);

}  // namespace lognc::internal

#endif
