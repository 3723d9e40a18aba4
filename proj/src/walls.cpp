#include "tubular/walls.hpp"

#include <algorithm>
#include <numeric>

#include "tubular/errors.hpp"

namespace tubular {

std::vector<Int> side_slot_counts(const TubularGraph& g, const EquitableSet& s,
                                  int edge, bool minus_side) {
  const auto& e = g.edges[edge];
  const auto& curves = s.at(minus_side ? e.minus : e.plus);
  const IntVec2& phi = minus_side ? e.phi_minus : e.phi_plus;
  std::vector<Int> counts;
  counts.reserve(curves.size());
  for (const auto& c : curves) counts.push_back(intersection_number(phi, c.vec));
  return counts;
}

namespace {

std::vector<Slot> side_slots(const std::vector<Int>& counts) {
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (Int p = 0; p < counts[i]; ++p) slots.push_back({static_cast<int>(i), p});
  return slots;  // already lexicographic by construction
}

}  // namespace

ArcPairing default_pairing(const TubularGraph& g, const EquitableSet& s) {
  ArcPairing p;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto minus = side_slots(side_slot_counts(g, s, static_cast<int>(e), true));
    auto plus = side_slots(side_slot_counts(g, s, static_cast<int>(e), false));
    if (minus.size() != plus.size())
      fail(ErrorCode::BadPairing,
           "edge " + g.edges[e].id + ": side slot counts differ (set not equitable)");
    std::vector<std::pair<Slot, Slot>> arcs;
    for (std::size_t i = 0; i < minus.size(); ++i) arcs.push_back({minus[i], plus[i]});
    p.arcs[g.edges[e].id] = std::move(arcs);
  }
  return p;
}

WallSet build_walls(const TubularGraph& g, const EquitableSet& s, const ArcPairing& p) {
  WallSet ws;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& cs = s.at(g.vertices[v]);
    for (std::size_t c = 0; c < cs.size(); ++c)
      ws.circles.push_back({static_cast<int>(v), static_cast<int>(c)});
  }

  const int n = static_cast<int>(ws.circles.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  std::vector<WallArc> arcs;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& rec = g.edges[e];
    auto it = p.arcs.find(rec.id);
    const auto& pairs = it == p.arcs.end() ? std::vector<std::pair<Slot, Slot>>{} : it->second;

    auto minus_counts = side_slot_counts(g, s, static_cast<int>(e), true);
    auto plus_counts = side_slot_counts(g, s, static_cast<int>(e), false);
    Int minus_total = std::accumulate(minus_counts.begin(), minus_counts.end(), Int(0));
    Int plus_total = std::accumulate(plus_counts.begin(), plus_counts.end(), Int(0));
    if (minus_total != plus_total)
      fail(ErrorCode::BadPairing, "edge " + rec.id + ": unbalanced slot counts");
    if (Int(pairs.size()) != minus_total)
      fail(ErrorCode::BadPairing, "edge " + rec.id + ": pairing is not a perfect matching");

    std::vector<Slot> seen_minus, seen_plus;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto& [ms, ps] = pairs[k];
      if (ms.curve < 0 || ms.curve >= static_cast<int>(minus_counts.size()) ||
          ms.point < 0 || ms.point >= minus_counts[ms.curve])
        fail(ErrorCode::BadPairing, "edge " + rec.id + ": minus slot out of range");
      if (ps.curve < 0 || ps.curve >= static_cast<int>(plus_counts.size()) ||
          ps.point < 0 || ps.point >= plus_counts[ps.curve])
        fail(ErrorCode::BadPairing, "edge " + rec.id + ": plus slot out of range");
      seen_minus.push_back(ms);
      seen_plus.push_back(ps);

      int vm = g.vertex_index(rec.minus), vp = g.vertex_index(rec.plus);
      int cm = ws.circle_id(vm, ms.curve), cp = ws.circle_id(vp, ps.curve);
      arcs.push_back({static_cast<int>(e), static_cast<int>(k), cm, cp, ms, ps});
      parent[find(cm)] = find(cp);
    }
    auto is_dup = [](std::vector<Slot>& v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) != v.end();
    };
    if (is_dup(seen_minus) || is_dup(seen_plus))
      fail(ErrorCode::BadPairing, "edge " + rec.id + ": slot used twice");
  }

  // Components, ids by smallest member circle.
  std::map<int, int> root_to_wall;
  ws.circle_wall.assign(n, -1);
  for (int c = 0; c < n; ++c) {
    int r = find(c);
    if (!root_to_wall.count(r)) {
      int id = static_cast<int>(ws.walls.size());
      root_to_wall[r] = id;
      ws.walls.push_back({id, {}, {}});
    }
    ws.circle_wall[c] = root_to_wall[r];
    ws.walls[root_to_wall[r]].circles.push_back(c);
  }
  for (const auto& a : arcs) ws.walls[ws.circle_wall[a.minus_circle]].arcs.push_back(a);
  return ws;
}

namespace {

Rat arc_weight(const WallArc& a, const TubularGraph& g, const EquitableSet& s,
               const WallSet& ws) {
  const auto& rec = g.edges[a.edge];
  const Circle& cm = ws.circles[a.minus_circle];
  const Circle& cp = ws.circles[a.plus_circle];
  Int num = intersection_number(rec.phi_minus, s.at(rec.minus)[cm.curve].vec);
  Int den = intersection_number(rec.phi_plus, s.at(rec.plus)[cp.curve].vec);
  return Rat(num, den);
}

}  // namespace

WallDilation dilation_rooted(const ImmersedWall& w, const TubularGraph& g,
                             const EquitableSet& s, const WallSet& ws,
                             const std::vector<int>& arc_order) {
  WallDilation rep;
  rep.wall = w.id;

  std::map<int, Rat> potential;  // circle -> weight of tree path from root
  if (!w.circles.empty()) potential[w.circles.front()] = 1;

  std::vector<Rat> weights(w.arcs.size());
  for (std::size_t i = 0; i < w.arcs.size(); ++i) {
    weights[i] = arc_weight(w.arcs[i], g, s, ws);
    rep.arc_weights.push_back({w.arcs[i].edge, w.arcs[i].pair_index, weights[i]});
  }

  // Grow a spanning tree in the given arc order; leftover arcs close cycles.
  std::vector<int> pending = arc_order;
  std::vector<bool> used(w.arcs.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int idx : pending) {
      if (used[idx]) continue;
      const WallArc& a = w.arcs[idx];
      bool have_m = potential.count(a.minus_circle), have_p = potential.count(a.plus_circle);
      if (have_m && have_p) continue;  // cycle-closing arc, handled below
      if (!have_m && !have_p) continue;
      if (have_m)
        potential[a.plus_circle] = potential[a.minus_circle] * weights[idx];
      else
        potential[a.minus_circle] = potential[a.plus_circle] / weights[idx];
      used[idx] = true;
      progress = true;
    }
  }
  for (int idx : pending) {
    if (used[idx]) continue;
    const WallArc& a = w.arcs[idx];
    // root -> minus, traverse arc (+1), plus -> root.
    Rat cyc = potential.at(a.minus_circle) * weights[idx] / potential.at(a.plus_circle);
    rep.cycle_weights.push_back(cyc);
    if (cyc != 1) rep.dilated = true;
  }
  return rep;
}

WallDilation dilation(const ImmersedWall& w, const TubularGraph& g, const EquitableSet& s,
                      const WallSet& ws) {
  std::vector<int> order(w.arcs.size());
  std::iota(order.begin(), order.end(), 0);
  return dilation_rooted(w, g, s, ws, order);
}

bool finite_dimensional(std::span<const WallDilation> reports) {
  return std::none_of(reports.begin(), reports.end(), [](auto& r) { return r.dilated; });
}

}  // namespace tubular
