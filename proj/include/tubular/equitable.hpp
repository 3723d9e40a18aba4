#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tubular/graph.hpp"

namespace tubular {

// A geodesic curve in the vertex torus: homotopy class `vec` placed at a
// fractional transversal offset so it misses the integer-level attaching
// lines and its own parallel copies.
struct CurveSpec {
  IntVec2 vec;
  Rat offset;  // in (0,1)
  bool operator==(const CurveSpec&) const = default;
};

struct EquitableSet {
  std::map<VertexId, std::vector<CurveSpec>> curves;

  const std::vector<CurveSpec>& at(const VertexId& v) const {
    static const std::vector<CurveSpec> empty;
    auto it = curves.find(v);
    return it == curves.end() ? empty : it->second;
  }
  std::size_t total_curves() const {
    std::size_t n = 0;
    for (auto& [v, cs] : curves) n += cs.size();
    return n;
  }
};

struct BalanceCheck {
  EdgeId edge;
  Int minus_total;
  Int plus_total;
  bool ok;
};
struct FiniteIndexCheck {
  VertexId vertex;
  bool ok;
};
struct DisjointnessIssue {
  VertexId vertex;
  int curve_a;
  int curve_b;  // -1 when the issue is a bad single curve (zero vec, bad offset)
  std::string kind;
};
struct VerifyReport {
  bool ok = false;
  std::vector<BalanceCheck> balance;
  std::vector<FiniteIndexCheck> finite_index;
  std::vector<DisjointnessIssue> disjointness;
};

VerifyReport verify_equitable(const TubularGraph& g, const EquitableSet& s);

struct FortifiedEdge {
  EdgeId edge;
  std::optional<int> minus_witness;  // curve index at the minus vertex
  std::optional<int> plus_witness;
};
struct FortifiedReport {
  bool fortified = false;
  std::vector<FortifiedEdge> edges;
};

FortifiedReport is_fortified(const TubularGraph& g, const EquitableSet& s);

struct PrimitiveReport {
  bool primitive = false;
  std::vector<std::pair<VertexId, int>> offenders;
};

PrimitiveReport is_primitive_set(const EquitableSet& s);

// Offsets k/(n+1), k = 1..n, across the n curves of each parallel class at a
// vertex (in list order); classes keyed by normalized direction.
std::vector<CurveSpec> with_default_offsets(const std::vector<IntVec2>& vecs);

struct SearchCaps {
  int max_curves_per_vertex = 3;
  std::uint64_t max_candidates = 50'000'000;
};

struct SearchResult {
  std::optional<EquitableSet> found;
  std::uint64_t candidates_tried = 0;
  // NotFound at a bound is not a nonexistence proof; the report says so.
  std::string note;
};

// Exhaustive first-hit search in the documented order: vectors ordered by
// (max |coordinate|, lex), per-vertex multisets by (size, lex), global
// assignments by (total size, lex). `parallel` distributes the first vertex's
// candidate index over OpenMP threads with a deterministic min-reduce.
SearchResult search_equitable(const TubularGraph& g, int bound,
                              const SearchCaps& caps = {}, bool parallel = false);

}  // namespace tubular
