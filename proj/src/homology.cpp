#include "tubular/homology.hpp"

namespace tubular {

H1Data h1_vertex_part(const TubularGraph& g) {
  const int nv = static_cast<int>(g.vertices.size());
  const int ne = static_cast<int>(g.edges.size());
  const int n = 2 * nv;

  // Column per edge: inc_{-e}(phi^-) - inc_{+e}(phi^+).
  Matrix rel(n, ne);
  for (int e = 0; e < ne; ++e) {
    int vm = g.vertex_index(g.edges[e].minus);
    int vp = g.vertex_index(g.edges[e].plus);
    rel.at(2 * vm, e) += g.edges[e].phi_minus.x;
    rel.at(2 * vm + 1, e) += g.edges[e].phi_minus.y;
    rel.at(2 * vp, e) -= g.edges[e].phi_plus.x;
    rel.at(2 * vp + 1, e) -= g.edges[e].phi_plus.y;
  }

  SmithResult s = smith_normal_form(rel);
  const int r = static_cast<int>(s.invariant_factors.size());

  H1Data h;
  h.invariant_factors = s.invariant_factors;
  h.rank_d = n - r;

  // Rows r..n-1 of P are the coordinates of the free part.
  h.free_projection = Matrix(h.rank_d, n);
  for (int i = 0; i < h.rank_d; ++i)
    for (int j = 0; j < n; ++j) h.free_projection.at(i, j) = s.p.at(r + i, j);

  h.vertex.resize(nv);
  for (int v = 0; v < nv; ++v) {
    auto& part = h.vertex[v];
    part.inclusion = Matrix(h.rank_d, 2);
    for (int i = 0; i < h.rank_d; ++i) {
      part.inclusion.at(i, 0) = h.free_projection.at(i, 2 * v);
      part.inclusion.at(i, 1) = h.free_projection.at(i, 2 * v + 1);
    }
    SmithResult si = smith_normal_form(part.inclusion);
    part.summand = si.invariant_factors.size() == 2 &&
                   si.invariant_factors[0] == 1 && si.invariant_factors[1] == 1;
    if (part.summand) {
      // inclusion = U^-1 D W^-1 with U = si.p, W = si.q, D = diag(1,1);
      // projection = W [I2|0] U retracts it.
      Matrix i2pad(2, h.rank_d);
      i2pad.at(0, 0) = 1;
      i2pad.at(1, 1) = 1;
      part.projection = multiply(si.q, multiply(i2pad, si.p));
    }
  }
  return h;
}

bool in_image(const Matrix& inclusion, const std::vector<Int>& c) {
  return solve_integer(inclusion, c).has_value();
}

}  // namespace tubular
