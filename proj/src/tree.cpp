#include "tubular/tree.hpp"

#include <deque>

#include "tubular/errors.hpp"

namespace tubular {

TreeBall build_tree_ball(const TubularGraph& g, int radius, int coset_window,
                         std::uint64_t vertex_cap) {
  TreeBall ball;
  ball.radius = radius;
  ball.coset_window = coset_window;

  ball.vertices.push_back({0, 0, 0, -1, -1, {}});
  ball.incident.emplace_back();

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int tv = queue.front();
    queue.pop_front();
    const TreeVertexRec cur = ball.vertices[tv];
    if (cur.depth == radius) continue;

    // Children: every incident (edge orbit, direction) and coset in the
    // window, except the tube we arrived on, which sits at coset 0 of the
    // reversed direction by construction.
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      for (bool forward : {true, false}) {
        int from = g.end(e, forward);  // forward: leave via the minus side
        if (from != cur.orbit) continue;
        for (int c = -coset_window; c <= coset_window; ++c) {
          if (cur.parent_edge >= 0 && c == 0 &&
              ball.edges[cur.parent_edge].orbit == e) {
            const TreeStep& arr = cur.path.back();
            if (arr.forward != forward) continue;  // the tube we came through
          }
          if (ball.vertices.size() >= vertex_cap)
            fail(ErrorCode::ResourceLimit, "tree ball exceeds vertex cap");

          int child = static_cast<int>(ball.vertices.size());
          int child_orbit = g.end(e, !forward);
          std::vector<TreeStep> path = cur.path;
          path.push_back({e, forward, c});

          int te = static_cast<int>(ball.edges.size());
          TreeEdgeRec rec;
          rec.id = te;
          rec.orbit = e;
          if (forward) {
            rec.tv_minus = tv;
            rec.tv_plus = child;
            rec.level_minus = c;
            rec.level_plus = 0;
          } else {
            rec.tv_plus = tv;
            rec.tv_minus = child;
            rec.level_plus = c;
            rec.level_minus = 0;
          }
          ball.edges.push_back(rec);
          ball.vertices.push_back({child, child_orbit, cur.depth + 1, tv, te, std::move(path)});
          ball.incident.emplace_back();
          ball.incident[tv].push_back(te);
          ball.incident[child].push_back(te);
          queue.push_back(child);
        }
      }
    }
  }
  return ball;
}

}  // namespace tubular
