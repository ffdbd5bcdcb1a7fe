#ifndef LOGNC_RATIONAL_HPP
#define LOGNC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lognc {

// Exact arbitrary-precision rationals, always kept in lowest terms.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s);

// Lowest-terms decimal string, "num" or "num/den".
std::string rat_to_string(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Least common multiple of the denominators of a list of rationals.
Int denominator_lcm(const std::vector<Rat>& qs);

// gcd of numerators over lcm of denominators; zero entries ignored.
// Returns 0 when all entries are zero.
Rat rational_content(const std::vector<Rat>& qs);

// Weighted degrees live in Q \cup {-infinity}; nullopt encodes -infinity
// (the degree of the zero polynomial).
using WDegree = std::optional<Rat>;

std::string wdegree_to_string(const WDegree& d);

}  // namespace lognc

#endif
