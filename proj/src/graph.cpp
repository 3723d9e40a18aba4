#include "tubular/graph.hpp"

#include <numeric>
#include <set>

namespace tubular {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ValidationReport validate(const TubularGraph& g) {
  ValidationReport r;
  if (g.vertices.empty()) {
    r.issues.push_back({"Empty", "", "graph has no vertices"});
    return r;
  }
  std::set<VertexId> vset;
  for (const auto& v : g.vertices) {
    if (!vset.insert(v).second)
      r.issues.push_back({"DuplicateVertex", v, "vertex id appears twice"});
  }
  std::set<EdgeId> eset;
  for (const auto& e : g.edges) {
    if (!eset.insert(e.id).second)
      r.issues.push_back({"DuplicateEdge", e.id, "edge id appears twice"});
    if (g.vertex_index(e.minus) < 0)
      r.issues.push_back({"DanglingVertex", e.id, "minus endpoint '" + e.minus + "' unknown"});
    if (g.vertex_index(e.plus) < 0)
      r.issues.push_back({"DanglingVertex", e.id, "plus endpoint '" + e.plus + "' unknown"});
    if (e.phi_minus.is_zero())
      r.issues.push_back({"ZeroAttaching", e.id, "phi_minus is (0,0)"});
    if (e.phi_plus.is_zero())
      r.issues.push_back({"ZeroAttaching", e.id, "phi_plus is (0,0)"});
  }

  UnionFind uf(static_cast<int>(g.vertices.size()));
  for (const auto& e : g.edges) {
    int a = g.vertex_index(e.minus), b = g.vertex_index(e.plus);
    if (a >= 0 && b >= 0) uf.unite(a, b);
  }
  r.connected = true;
  for (std::size_t i = 1; i < g.vertices.size(); ++i)
    if (uf.find(static_cast<int>(i)) != uf.find(0)) r.connected = false;
  if (!r.connected)
    r.issues.push_back({"Disconnected", "", "underlying graph is not connected"});

  r.valid = r.issues.empty();
  return r;
}

}  // namespace tubular
