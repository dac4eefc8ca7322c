#pragma once

#include <string>
#include <vector>

#include "zkq/laurent.hpp"
#include "zkq/series.hpp"

namespace zkq {

// Expression grammar (whitespace between tokens is ignored):
//
//   series   = term { ("+"|"-") term }
//   term     = [sign] [rational] { "z" ["^" int] } { "u" ["^" nat] } ["h" ["^" nat]]
//   rational = nat ["/" posnat]
//
// An "h" suffix tags the whole term with that h-power (default 1); terms
// without one are classical. Example: "1/2 z^-1 u^2 + 3 z u h^1".
// ParseError offsets are 1-based byte positions into the input.
LaurentPoly parse_poly(const std::string& text);
HbarSeries parse_series(const std::string& text);

// A single rational literal spanning the whole string, e.g. "-2/3".
Rational parse_rational(const std::string& text);

// Comma-separated rational literals; the empty (or blank) string is the
// empty list.
std::vector<Rational> parse_rational_list(const std::string& text);

// Canonical printers. Terms are emitted in (u-exponent, z-exponent)
// lexicographic order, grouped by ascending h-power; parse(print(x)) == x
// and printing is idempotent on canonical forms.
std::string to_string(const LaurentPoly& p);
std::string to_string(const HbarSeries& s);

}  // namespace zkq
