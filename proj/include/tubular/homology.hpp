#pragma once

#include "tubular/graph.hpp"
#include "tubular/snf.hpp"

namespace tubular {

// Free part of the abelianization data restricted to the vertex-group factor:
// (⊕_v Z^2) / < inc_{-e}(phi_e^-) - inc_{+e}(phi_e^+) >.
struct H1Data {
  std::vector<Int> invariant_factors;  // nonzero diagonal of the relation matrix SNF
  int rank_d = 0;                      // free rank

  struct VertexPart {
    Matrix inclusion;   // rank_d x 2: images of the chart basis in the free part
    bool summand = false;
    Matrix projection;  // 2 x rank_d, projection * inclusion = I_2 (when summand)
  };
  std::vector<VertexPart> vertex;  // indexed like TubularGraph::vertices

  Matrix free_projection;  // rank_d x 2|V|: coordinates of the free part
};

H1Data h1_vertex_part(const TubularGraph& g);

// Is the column vector c in the image of inclusion (a rank_d x 2 matrix)?
bool in_image(const Matrix& inclusion, const std::vector<Int>& c);

}  // namespace tubular
