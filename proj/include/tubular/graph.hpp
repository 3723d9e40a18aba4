#pragma once

#include <string>
#include <vector>

#include "tubular/vec2.hpp"

namespace tubular {

using VertexId = std::string;
using EdgeId = std::string;

// One edge of the graph of groups: an infinite cyclic edge group attached
// into the Z^2 vertex groups at both ends by nonzero vectors.
struct EdgeRecord {
  EdgeId id;
  VertexId minus;
  VertexId plus;
  IntVec2 phi_minus;
  IntVec2 phi_plus;
};

struct TubularGraph {
  std::vector<VertexId> vertices;
  std::vector<EdgeRecord> edges;

  int vertex_index(const VertexId& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return static_cast<int>(i);
    return -1;
  }
  int edge_index(const EdgeId& e) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].id == e) return static_cast<int>(i);
    return -1;
  }
  const IntVec2& phi(int edge, bool minus_side) const {
    return minus_side ? edges[edge].phi_minus : edges[edge].phi_plus;
  }
  int end(int edge, bool minus_side) const {
    return vertex_index(minus_side ? edges[edge].minus : edges[edge].plus);
  }
};

struct ValidationIssue {
  std::string kind;   // "ZeroAttaching", "Disconnected", "DanglingVertex", ...
  std::string where;  // vertex or edge id
  std::string detail;
};

struct ValidationReport {
  bool valid = false;
  bool connected = false;
  std::vector<ValidationIssue> issues;
};

ValidationReport validate(const TubularGraph& g);

}  // namespace tubular
