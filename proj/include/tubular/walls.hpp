#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tubular/equitable.hpp"

namespace tubular {

// One intersection point between a curve and an attaching map, on one side
// of one edge. point ranges over [0, #[phi_side, vec_curve)).
struct Slot {
  int curve;
  Int point;
  bool operator==(const Slot&) const = default;
};

inline bool operator<(const Slot& a, const Slot& b) {
  if (a.curve != b.curve) return a.curve < b.curve;
  return a.point < b.point;
}

// Per edge, a perfect matching of minus-side and plus-side slots (the arcs).
struct ArcPairing {
  std::map<EdgeId, std::vector<std::pair<Slot, Slot>>> arcs;
};

// Slot lists sorted lexicographically on each side and matched in order.
ArcPairing default_pairing(const TubularGraph& g, const EquitableSet& s);

// Number of slots for each curve at one side of an edge.
std::vector<Int> side_slot_counts(const TubularGraph& g, const EquitableSet& s,
                                  int edge, bool minus_side);

struct Circle {
  int vertex;  // vertex index
  int curve;   // curve index at that vertex
};

struct WallArc {
  int edge;        // edge index
  int pair_index;  // index into the pairing list of that edge
  int minus_circle;
  int plus_circle;
  Slot minus_slot;
  Slot plus_slot;
};

struct ImmersedWall {
  int id = 0;
  std::vector<int> circles;  // global circle ids
  std::vector<WallArc> arcs;
};

struct WallSet {
  std::vector<Circle> circles;     // global circle table
  std::vector<int> circle_wall;    // circle id -> wall id
  std::vector<ImmersedWall> walls;

  int circle_id(int vertex, int curve) const {
    for (std::size_t i = 0; i < circles.size(); ++i)
      if (circles[i].vertex == vertex && circles[i].curve == curve)
        return static_cast<int>(i);
    return -1;
  }
};

WallSet build_walls(const TubularGraph& g, const EquitableSet& s, const ArcPairing& p);

struct ArcWeight {
  int edge;
  int pair_index;
  Rat weight;  // #[phi^-, vec(minus circle)] / #[phi^+, vec(plus circle)]
};

struct WallDilation {
  int wall = 0;
  std::vector<ArcWeight> arc_weights;
  std::vector<Rat> cycle_weights;  // fundamental cycles of a spanning tree
  bool dilated = false;
};

WallDilation dilation(const ImmersedWall& w, const TubularGraph& g, const EquitableSet& s,
                      const WallSet& ws);

// With a custom spanning-tree root preference, for the tree-independence
// property tests.
WallDilation dilation_rooted(const ImmersedWall& w, const TubularGraph& g,
                             const EquitableSet& s, const WallSet& ws,
                             const std::vector<int>& arc_order);

bool finite_dimensional(std::span<const WallDilation> reports);

}  // namespace tubular
