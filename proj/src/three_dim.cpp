#include "tubular/three_dim.hpp"

#include "tubular/errors.hpp"

namespace tubular {

namespace {

std::vector<Int> inclusion_column(const H1Data& h, int vertex, int chart_col) {
  const Matrix& inc = h.vertex[vertex].inclusion;
  std::vector<Int> c(inc.rows);
  for (int i = 0; i < inc.rows; ++i) c[i] = inc.at(i, chart_col);
  return c;
}

void require_all_summands(const TubularGraph& g, const H1Data& h) {
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (!h.vertex[v].summand)
      fail(ErrorCode::SummandConditionFailed,
           "vertex group '" + g.vertices[v] + "' is not a summand of the free part");
}

bool same_image(const H1Data& h, int u, int v) {
  for (int col = 0; col < 2; ++col) {
    if (!in_image(h.vertex[v].inclusion, inclusion_column(h, u, col))) return false;
    if (!in_image(h.vertex[u].inclusion, inclusion_column(h, v, col))) return false;
  }
  return true;
}

// Chart basis vectors of u whose image avoids the image of v, in order.
std::vector<IntVec2> generator_candidates(const H1Data& h, int u, int v) {
  std::vector<IntVec2> out;
  const IntVec2 chart[2] = {{1, 0}, {0, 1}};
  for (int col = 0; col < 2; ++col)
    if (!in_image(h.vertex[v].inclusion, inclusion_column(h, u, col)))
      out.push_back(chart[col]);
  return out;
}

}  // namespace

ThreeDimResult three_dim_equitable(const TubularGraph& g) {
  ThreeDimResult res;
  TubularGraph work = g;
  H1Data h = h1_vertex_part(work);
  require_all_summands(work, h);

  int guard = 0;
  while (h.rank_d > 2) {
    if (++guard > h.rank_d + static_cast<int>(g.vertices.size()) + 8)
      fail(ErrorCode::RecursionLimit, "auxiliary edge recursion did not reduce the rank");

    bool added = false;
    for (std::size_t u = 0; u < work.vertices.size() && !added; ++u) {
      for (std::size_t v = u + 1; v < work.vertices.size() && !added; ++v) {
        if (same_image(h, static_cast<int>(u), static_cast<int>(v))) continue;
        auto cu = generator_candidates(h, static_cast<int>(u), static_cast<int>(v));
        auto cv = generator_candidates(h, static_cast<int>(v), static_cast<int>(u));
        for (const auto& gu : cu) {
          for (const auto& gv : cv) {
            EdgeId aux_id = "__aux" + std::to_string(res.auxiliary_edges.size());
            TubularGraph trial = work;
            trial.edges.push_back({aux_id, work.vertices[u], work.vertices[v], gu, gv});
            H1Data ht = h1_vertex_part(trial);
            bool ok = ht.rank_d == h.rank_d - 1;
            for (std::size_t w = 0; w < trial.vertices.size() && ok; ++w)
              ok = ht.vertex[w].summand;
            if (!ok) continue;
            res.auxiliary_edges.push_back(
                {aux_id, work.vertices[u], work.vertices[v], gu, gv});
            work = std::move(trial);
            h = std::move(ht);
            added = true;
            break;
          }
          if (added) break;
        }
      }
    }
    if (!added)
      fail(ErrorCode::RecursionLimit,
           "no auxiliary edge choice keeps every vertex group a summand");
  }

  if (h.rank_d != 2)
    fail(ErrorCode::SummandConditionFailed,
         "free rank " + std::to_string(h.rank_d) + " cannot carry a two-generator set");

  // S_v = { p_v(a), p_v(b) } for the first two basis vectors of the free part.
  for (std::size_t v = 0; v < work.vertices.size(); ++v) {
    const Matrix& pv = h.vertex[v].projection;  // 2 x 2 here
    std::vector<IntVec2> vecs = {{pv.at(0, 0), pv.at(1, 0)}, {pv.at(0, 1), pv.at(1, 1)}};
    res.set.curves[work.vertices[v]] = with_default_offsets(vecs);
  }

  // Arcs join only curves that are images of the same generator.
  for (const auto& e : work.edges) {
    const auto& su = res.set.at(e.minus);
    const auto& sv = res.set.at(e.plus);
    std::vector<std::pair<Slot, Slot>> arcs;
    for (int k = 0; k < 2; ++k) {
      Int m_minus = intersection_number(e.phi_minus, su[k].vec);
      Int m_plus = intersection_number(e.phi_plus, sv[k].vec);
      if (m_minus != m_plus)
        fail(ErrorCode::RecursionLimit,
             "generator balance failed on edge '" + e.id + "' (internal invariant)");
      for (Int pt = 0; pt < m_minus; ++pt) arcs.push_back({{k, pt}, {k, pt}});
    }
    res.pairing.arcs[e.id] = std::move(arcs);
  }

  // Delete the arcs that map into the auxiliary edge spaces.
  for (const auto& aux : res.auxiliary_edges) res.pairing.arcs.erase(aux.id);
  return res;
}

}  // namespace tubular
