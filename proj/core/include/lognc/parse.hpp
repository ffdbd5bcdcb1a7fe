#ifndef LOGNC_PARSE_HPP
#define LOGNC_PARSE_HPP

#include <stdexcept>
#include <string>

#include "lognc/poly.hpp"

namespace lognc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column);
    int line;
    int column;
};

// Polynomial expression grammar: identifiers are variables, `^` raises to a
// non-negative integer power, `*` is optional between a coefficient and a
// variable, `/` divides by a constant, parentheses group. Printing via
// Poly::str() round-trips through this parser.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace lognc

#endif
