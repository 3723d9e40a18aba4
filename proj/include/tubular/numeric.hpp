#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tubular {

// Exact integers and rationals. Rationals are kept reduced with positive
// denominator by the backend, so structural equality is value equality.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& q) {
  return floor_div(numerator(q), denominator(q));
}

// q - floor(q), in [0, 1)
inline Rat rat_mod1(const Rat& q) { return q - Rat(rat_floor(q)); }

// Canonical "p/q" with q > 0 and gcd(p, q) = 1, always including the slash.
inline std::string rat_str(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Strict parse of the canonical form above. Rejects anything the formatter
// would not produce (missing slash, q <= 0, unreduced fractions).
std::optional<Rat> rat_parse(std::string_view s);

}  // namespace tubular
