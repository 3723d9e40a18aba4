#include "tubular/primitivize.hpp"

#include <algorithm>

namespace tubular {

namespace {

// Reassign the offset convention at one vertex, preserving curve order.
void reassign_offsets(std::vector<CurveSpec>& curves) {
  std::vector<IntVec2> vecs;
  vecs.reserve(curves.size());
  for (const auto& c : curves) vecs.push_back(c.vec);
  curves = with_default_offsets(vecs);
}

Slot transport_slot(const Slot& s, int replaced, const Int& n, const Int& per_copy) {
  if (s.curve < replaced) return s;
  if (s.curve > replaced) return {s.curve + static_cast<int>(n) - 1, s.point};
  // Slot j on the wrapped curve lands on copy j / m at point j mod m.
  Int copy = per_copy == 0 ? Int(0) : s.point / per_copy;
  Int point = per_copy == 0 ? Int(0) : s.point % per_copy;
  return {replaced + static_cast<int>(copy), point};
}

}  // namespace

bool primitivize_step(const TubularGraph& g, EquitableSet& s, ArcPairing& p,
                      RewriteStep* step) {
  for (const auto& vid : g.vertices) {
    auto it = s.curves.find(vid);
    if (it == s.curves.end()) continue;
    auto& curves = it->second;
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
      if (curves[ci].vec.is_zero() || is_primitive_vec(curves[ci].vec)) continue;

      auto [n, prim] = primitive_decomposition(curves[ci].vec);
      if (step) *step = {vid, static_cast<int>(ci), n, prim};

      // Transport every slot that lives on this vertex's side of an edge.
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& rec = g.edges[e];
        auto pit = p.arcs.find(rec.id);
        if (pit == p.arcs.end()) continue;
        for (auto& [ms, ps] : pit->second) {
          if (rec.minus == vid) {
            Int per_copy = intersection_number(rec.phi_minus, prim);
            ms = transport_slot(ms, static_cast<int>(ci), n, per_copy);
          }
          if (rec.plus == vid) {
            Int per_copy = intersection_number(rec.phi_plus, prim);
            ps = transport_slot(ps, static_cast<int>(ci), n, per_copy);
          }
        }
      }

      // Replace the curve by n parallel primitive copies in place.
      std::vector<CurveSpec> next(curves.begin(), curves.begin() + ci);
      for (Int k = 0; k < n; ++k) next.push_back({prim, Rat(1, 2)});
      next.insert(next.end(), curves.begin() + ci + 1, curves.end());
      curves = std::move(next);
      reassign_offsets(curves);
      return true;
    }
  }
  return false;
}

PrimitivizeResult primitivize(const TubularGraph& g, const EquitableSet& s,
                              const ArcPairing& p) {
  PrimitivizeResult res{s, p, {}};
  RewriteStep step;
  while (primitivize_step(g, res.set, res.pairing, &step)) res.trace.push_back(step);
  return res;
}

bool verify_primitivize_dilation(std::span<const WallDilation> before,
                                 std::span<const WallDilation> after) {
  bool before_clean =
      std::none_of(before.begin(), before.end(), [](auto& r) { return r.dilated; });
  if (!before_clean) return true;  // vacuous
  return std::none_of(after.begin(), after.end(), [](auto& r) { return r.dilated; });
}

}  // namespace tubular
