#pragma once

#include <span>

#include "tubular/walls.hpp"

namespace tubular {

struct RewriteStep {
  VertexId vertex;
  int curve_index;     // index before the rewrite
  Int factor;          // n with vec = n * primitive
  IntVec2 primitive;
};

struct PrimitivizeResult {
  EquitableSet set;
  ArcPairing pairing;
  std::vector<RewriteStep> trace;
};

// Replace the first non-primitive curve (vertex order, then curve order) by
// `factor` parallel primitive copies, transporting slots by
// (copy, point) = (j / m, j mod m) with m the per-copy slot count, and
// reassigning offsets at the touched vertex. Returns false when every curve
// is already primitive.
bool primitivize_step(const TubularGraph& g, EquitableSet& s, ArcPairing& p,
                      RewriteStep* step);

// Iterate primitivize_step to a fixpoint.
PrimitivizeResult primitivize(const TubularGraph& g, const EquitableSet& s,
                              const ArcPairing& p);

// (all before non-dilated) implies (all after non-dilated).
bool verify_primitivize_dilation(std::span<const WallDilation> before,
                                 std::span<const WallDilation> after);

}  // namespace tubular
