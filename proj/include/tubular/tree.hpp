#pragma once

#include <cstdint>
#include <vector>

#include "tubular/graph.hpp"

namespace tubular {

// One step of a path from the base flat: traverse `edge_orbit` (forward =
// minus-to-plus) entering the tube at `coset` on the parent's side.
struct TreeStep {
  int edge_orbit;
  bool forward;
  int coset;
};

struct TreeVertexRec {
  int id;
  int orbit;        // vertex index in the quotient graph
  int depth;
  int parent_vertex;  // -1 at the base
  int parent_edge;    // tree edge id towards the base, -1 at the base
  std::vector<TreeStep> path;
};

// A tube: its two attaching lines sit at integer levels in the two endpoint
// flats (the coset index on the parent's side, level 0 on the child's side).
struct TreeEdgeRec {
  int id;
  int orbit;  // edge index in the quotient graph
  int tv_minus;
  int tv_plus;
  int level_minus;
  int level_plus;
};

struct TreeBall {
  int base = 0;
  int radius = 0;
  int coset_window = 0;
  std::vector<TreeVertexRec> vertices;
  std::vector<TreeEdgeRec> edges;
  std::vector<std::vector<int>> incident;  // tree vertex -> incident tree edges

  // Endpoint of tree edge e on the side of tree vertex tv (tv must be an
  // endpoint); the other endpoint.
  int other_end(int e, int tv) const {
    return edges[e].tv_minus == tv ? edges[e].tv_plus : edges[e].tv_minus;
  }
};

TreeBall build_tree_ball(const TubularGraph& g, int radius, int coset_window,
                         std::uint64_t vertex_cap = 200000);

}  // namespace tubular
