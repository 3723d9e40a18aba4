#pragma once

#include "tubular/homology.hpp"
#include "tubular/walls.hpp"

namespace tubular {

struct AuxEdgeNote {
  EdgeId id;
  VertexId u, v;
  IntVec2 g_u, g_v;  // chart vectors of the auxiliary attaching maps
};

struct ThreeDimResult {
  EquitableSet set;      // exactly two curve classes per vertex
  ArcPairing pairing;    // arcs join only curves coming from the same generator
  std::vector<AuxEdgeNote> auxiliary_edges;  // added then stripped during the recursion
};

// Build the two-curves-per-vertex equitable set from the free part of the
// vertex homology: S_v = { p_v(a), p_v(b) } once the free rank is reduced to 2
// by auxiliary edges. Throws SummandConditionFailed (offending vertex in the
// message) or RecursionLimit.
ThreeDimResult three_dim_equitable(const TubularGraph& g);

}  // namespace tubular
