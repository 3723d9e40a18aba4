#pragma once

#include <span>
#include <string>
#include <vector>

#include "tubular/errors.hpp"
#include "tubular/numeric.hpp"

namespace tubular {

// An element of the Z^2 vertex group, written in the vertex's input chart.
struct IntVec2 {
  Int x{0};
  Int y{0};

  bool operator==(const IntVec2&) const = default;
  bool is_zero() const { return x == 0 && y == 0; }
  IntVec2 operator-() const { return {-x, -y}; }
  IntVec2 operator*(const Int& n) const { return {x * n, y * n}; }

  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline bool operator<(const IntVec2& a, const IntVec2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline Int det(const IntVec2& a, const IntVec2& b) {
  return a.x * b.y - a.y * b.x;
}

inline Int intersection_number(const IntVec2& a, const IntVec2& b) {
  return abs(det(a, b));
}

inline Int intersection_number_set(const IntVec2& a,
                                   std::span<const IntVec2> bs) {
  Int total = 0;
  for (const auto& b : bs) total += intersection_number(a, b);
  return total;
}

inline bool parallel(const IntVec2& a, const IntVec2& b) {
  return det(a, b) == 0;
}

struct PrimitiveDecomposition {
  Int factor;        // positive
  IntVec2 primitive; // same direction as the input
};

inline PrimitiveDecomposition primitive_decomposition(const IntVec2& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroVector, "primitive_decomposition of (0,0)");
  Int g = gcd(abs(a.x), abs(a.y));
  return {g, {a.x / g, a.y / g}};
}

inline bool is_primitive_vec(const IntVec2& a) {
  return !a.is_zero() && gcd(abs(a.x), abs(a.y)) == 1;
}

// Primitive representative of a's direction class, sign-normalized so the
// first nonzero coordinate is positive.
inline IntVec2 normalize_direction(const IntVec2& a) {
  IntVec2 p = primitive_decomposition(a).primitive;
  if (p.x < 0 || (p.x == 0 && p.y < 0)) p = -p;
  return p;
}

// For primitive d, a vector w with det(d, w) = 1 (so levels of lines in
// direction d can be realized as points level * w). Deterministic via the
// extended Euclidean algorithm on |d|.
IntVec2 unit_complement(const IntVec2& d);

// A rational point of a flat chart.
struct RatPoint {
  Rat x{0};
  Rat y{0};
  bool operator==(const RatPoint&) const = default;
};

inline Rat line_value(const IntVec2& dir, const RatPoint& p) {
  return Rat(dir.x) * p.y - Rat(dir.y) * p.x;
}

// The line { p : det(direction, p) = level }, with direction primitive and
// sign-normalized. Equal lines compare equal structurally.
struct RationalLine {
  IntVec2 direction;
  Rat level;

  bool operator==(const RationalLine&) const = default;

  static RationalLine make(const IntVec2& dir, const Rat& level) {
    auto [n, d0] = primitive_decomposition(dir);
    Rat lv = level / Rat(n);
    if (d0.x < 0 || (d0.x == 0 && d0.y < 0)) {
      d0 = -d0;
      lv = -lv;
    }
    return {d0, lv};
  }
};

inline bool operator<(const RationalLine& a, const RationalLine& b) {
  if (!(a.direction == b.direction)) return a.direction < b.direction;
  return a.level < b.level;
}

}  // namespace tubular
