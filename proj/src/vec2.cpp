#include "tubular/vec2.hpp"

namespace tubular {

namespace {

// g = gcd(a, b) together with x, y such that a*x + b*y = g; a, b >= 0.
void extended_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  if (b == 0) {
    g = a;
    x = 1;
    y = 0;
    return;
  }
  Int x1, y1;
  extended_gcd(b, a % b, g, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

}  // namespace

IntVec2 unit_complement(const IntVec2& d) {
  if (!is_primitive_vec(d))
    fail(ErrorCode::ZeroVector, "unit_complement requires a primitive vector");
  // det(d, w) = d.x*w.y - d.y*w.x = 1
  Int g, s, t;
  extended_gcd(abs(d.x), abs(d.y), g, s, t);
  // |d.x|*s + |d.y|*t = 1. Fix signs: d.x*(sgn(d.x)*s) + d.y*(sgn(d.y)*t) = 1.
  Int sx = d.x < 0 ? Int(-1) : Int(1);
  Int sy = d.y < 0 ? Int(-1) : Int(1);
  // Want w with d.x*w.y - d.y*w.x = 1: take w.y = sgn(d.x)*s, w.x = -sgn(d.y)*t.
  IntVec2 w{-sy * t, sx * s};
  return w;
}

}  // namespace tubular
