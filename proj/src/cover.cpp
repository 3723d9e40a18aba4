#include "tubular/cover.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "tubular/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tubular {

CoverBall build_cover(const TubularGraph& g, const CoverOptions& opt) {
  CoverBall ball;
  ball.tree = build_tree_ball(g, opt.radius, opt.coset_window, opt.caps.tree_vertices);
  ball.tubes.reserve(ball.tree.edges.size());
  for (const auto& te : ball.tree.edges) {
    const auto& rec = g.edges[te.orbit];
    TubeGeom t;
    t.minus.flat = te.tv_minus;
    t.minus.phi = rec.phi_minus;
    t.minus.dir = normalize_direction(rec.phi_minus);
    t.minus.ref_unit = unit_complement(t.minus.dir);
    t.minus.level = te.level_minus;
    t.plus.flat = te.tv_plus;
    t.plus.phi = rec.phi_plus;
    t.plus.dir = normalize_direction(rec.phi_plus);
    t.plus.ref_unit = unit_complement(t.plus.dir);
    t.plus.level = te.level_plus;
    ball.tubes.push_back(t);
  }
  return ball;
}

namespace {

// Crossing pattern of one curve family with one tube boundary line:
// parameter of the level-lambda line is t = (lambda - level*off) / den, and
// the curve's lifts cross at parameters tau + Z for the taus below.
struct SideCross {
  Int den;  // det(curve_dir, phi_side); 0 = parallel, no crossings
  Int off;  // det(curve_dir, ref_unit_side)
  std::vector<Rat> taus;
};

struct CurveGeom {
  IntVec2 dir;
  Rat offset;
  Int mult;  // multiplicity of the curve vector over its primitive part
};

struct LiftContext {
  const TubularGraph& g;
  const EquitableSet& s;
  const ArcPairing& p;
  const CoverBall& ball;
  const CoverOptions& opt;

  std::vector<std::vector<CurveGeom>> curve_geom;  // per vertex orbit
  // (edge orbit, minus side, curve, tube level) -> SideCross
  std::map<std::tuple<int, bool, int, Int>, SideCross> cross_cache;

  LiftContext(const TubularGraph& g_, const EquitableSet& s_, const ArcPairing& p_,
              const CoverBall& ball_, const CoverOptions& opt_)
      : g(g_), s(s_), p(p_), ball(ball_), opt(opt_) {
    curve_geom.resize(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      for (const auto& c : s.at(g.vertices[v]))
        curve_geom[v].push_back({normalize_direction(c.vec), c.offset,
                                 primitive_decomposition(c.vec).factor});
  }

  const SideCross& side_cross(int orbit, bool minus_side, int curve, const Int& level) {
    auto key = std::make_tuple(orbit, minus_side, curve, level);
    auto it = cross_cache.find(key);
    if (it != cross_cache.end()) return it->second;

    const auto& rec = g.edges[orbit];
    int v = g.vertex_index(minus_side ? rec.minus : rec.plus);
    const IntVec2& phi = minus_side ? rec.phi_minus : rec.phi_plus;
    IntVec2 tube_dir = normalize_direction(phi);
    IntVec2 ref_unit = unit_complement(tube_dir);
    const CurveGeom& cg = curve_geom[v][curve];

    SideCross sc;
    sc.den = det(cg.dir, phi);
    sc.off = det(cg.dir, ref_unit);
    if (sc.den != 0) {
      Rat base = cg.offset - Rat(level * sc.off);
      Int m = abs(sc.den);
      for (Int k = 0; k < m; ++k)
        sc.taus.push_back(rat_mod1((base + Rat(k)) / Rat(sc.den)));
      std::sort(sc.taus.begin(), sc.taus.end());
    }
    return cross_cache.emplace(key, std::move(sc)).first->second;
  }
};

int tau_rank(const std::vector<Rat>& taus, const Rat& residue) {
  auto it = std::lower_bound(taus.begin(), taus.end(), residue);
  if (it == taus.end() || *it != residue)
    fail(ErrorCode::InputError, "crossing parameter off the curve lattice (internal)");
  return static_cast<int>(it - taus.begin());
}

using NodeKey = std::tuple<int, int, Rat>;  // (flat, curve, level)

}  // namespace

std::vector<LiftedWall> lift_walls(const TubularGraph& g, const EquitableSet& s,
                                   const ArcPairing& p, const CoverBall& ball,
                                   const WallSet& ws, const CoverOptions& opt) {
  LiftContext ctx(g, s, p, ball, opt);
  std::vector<LiftedWall> walls;
  std::map<NodeKey, int> node_wall;
  std::uint64_t nodes_used = 0;

  auto bfs = [&](int wall_id, int seed_tv, int seed_curve, const Rat& seed_level) {
    LiftedWall w;
    w.id = wall_id;
    w.kind = LiftedWall::Kind::horizontal;
    int seed_vertex = ball.tree.vertices[seed_tv].orbit;
    w.wall_component = ws.circle_wall[ws.circle_id(seed_vertex, seed_curve)];
    w.seed_tv = seed_tv;
    w.seed_curve = seed_curve;
    w.seed_translate = rat_floor(seed_level);

    std::deque<NodeKey> queue;
    auto add_node = [&](int tv, int curve, const Rat& level) {
      NodeKey key{tv, curve, level};
      auto it = node_wall.find(key);
      if (it != node_wall.end()) return;  // visited (necessarily this wall)
      if (++nodes_used > opt.caps.wall_nodes)
        fail(ErrorCode::ResourceLimit, "wall lifting exceeded the node cap");
      node_wall.emplace(key, wall_id);
      const CurveGeom& cg = ctx.curve_geom[ball.tree.vertices[tv].orbit][curve];
      if (auto tr = w.traces.find(tv); tr != w.traces.end()) {
        if (!(tr->second.dir == cg.dir && tr->second.level == level))
          w.trace_conflict = true;
        return;  // keep the first line in this flat, do not expand the fold
      }
      w.traces.emplace(tv, TraceLine{curve, cg.dir, level});
      queue.push_back(key);
    };

    add_node(seed_tv, seed_curve, seed_level);
    while (!queue.empty()) {
      auto [tv, curve, level] = queue.front();
      queue.pop_front();
      const CurveGeom& cg = ctx.curve_geom[ball.tree.vertices[tv].orbit][curve];

      for (int te : ball.tree.incident[tv]) {
        const TubeGeom& tube = ball.tubes[te];
        bool in_minus = tube.minus.flat == tv;
        const TubeSideGeom& in = in_minus ? tube.minus : tube.plus;
        const TubeSideGeom& out = in_minus ? tube.plus : tube.minus;
        int orbit = ball.tree.edges[te].orbit;

        const SideCross& sc = ctx.side_cross(orbit, in_minus, curve, in.level);
        if (sc.den == 0) continue;  // parallel: the wall misses this tube

        Rat t = (level - Rat(in.level * sc.off)) / Rat(sc.den);
        int gidx = tau_rank(sc.taus, rat_mod1(t));
        Rat u = t - sc.taus[gidx];
        Int m_geo = abs(sc.den);

        const auto& pairs = p.arcs.at(g.edges[orbit].id);
        for (Int wrap = 0; wrap < cg.mult; ++wrap) {
          Slot slot_in{curve, wrap * m_geo + gidx};
          int pair_index = -1;
          Slot slot_out;
          for (std::size_t k = 0; k < pairs.size(); ++k) {
            const Slot& mine = in_minus ? pairs[k].first : pairs[k].second;
            if (mine == slot_in) {
              pair_index = static_cast<int>(k);
              slot_out = in_minus ? pairs[k].second : pairs[k].first;
              break;
            }
          }
          if (pair_index < 0)
            fail(ErrorCode::BadPairing, "slot missing from pairing during lift");

          const SideCross& so =
              ctx.side_cross(orbit, !in_minus, slot_out.curve, out.level);
          Int m_geo_out = abs(so.den);
          Int g_out = slot_out.point % m_geo_out;
          Rat t_out = so.taus[static_cast<std::size_t>(g_out)] + u;
          Rat level_out = Rat(out.level * so.off) + t_out * Rat(so.den);

          if (in_minus) {
            w.crossings.push_back({te, t, t_out, pair_index});
            w.crossings_by_edge[te].push_back({t, t_out});
          }
          add_node(out.flat, slot_out.curve, level_out);
        }
      }
    }
    return w;
  };

  for (const auto& tv : ball.tree.vertices) {
    const auto& curves = s.at(g.vertices[tv.orbit]);
    for (std::size_t c = 0; c < curves.size(); ++c) {
      for (int k = -opt.level_window; k <= opt.level_window; ++k) {
        Rat level = Rat(k) + curves[c].offset;
        if (node_wall.count({tv.id, static_cast<int>(c), level})) continue;
        if (walls.size() >= opt.caps.lifted_walls)
          fail(ErrorCode::ResourceLimit, "lifted wall cap exceeded");
        walls.push_back(bfs(static_cast<int>(walls.size()), tv.id, static_cast<int>(c), level));
      }
    }
  }

  for (const auto& te : ball.tree.edges) {
    LiftedWall v;
    v.id = static_cast<int>(walls.size());
    v.kind = LiftedWall::Kind::vertical;
    v.tree_edge = te.id;
    walls.push_back(std::move(v));
  }
  return walls;
}

Cross cross(const LiftedWall& a, const LiftedWall& b) {
  using K = LiftedWall::Kind;
  if (a.kind == K::vertical && b.kind == K::vertical) return Cross::disjoint;
  if (a.kind == K::vertical) return cross(b, a);
  if (b.kind == K::vertical)
    return a.crosses_edge(b.tree_edge) ? Cross::regular : Cross::disjoint;

  bool touching = false;
  const auto& small = a.traces.size() <= b.traces.size() ? a : b;
  const auto& big = a.traces.size() <= b.traces.size() ? b : a;
  for (const auto& [tv, la] : small.traces) {
    auto it = big.traces.find(tv);
    if (it == big.traces.end()) continue;
    if (!(la.dir == it->second.dir)) return Cross::regular;
    if (la.level == it->second.level) touching = true;  // identical trace line
  }
  if (!touching) {
    for (const auto& [te, lst] : a.crossings_by_edge) {
      auto it = b.crossings_by_edge.find(te);
      if (it == b.crossings_by_edge.end()) continue;
      for (const auto& [am, ap] : lst) {
        for (const auto& [bm, bp] : it->second) {
          bool neg = (am < bm && ap > bp) || (am > bm && ap < bp);
          if (neg) {
            touching = true;  // arcs interleave inside the tube
            break;
          }
        }
        if (touching) break;
      }
      if (touching) break;
    }
  }
  return touching ? Cross::nonregular : Cross::disjoint;
}

std::vector<std::uint8_t> crossing_matrix_serial(std::span<const LiftedWall> walls) {
  const std::size_t n = walls.size();
  std::vector<std::uint8_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = static_cast<std::uint8_t>(cross(walls[i], walls[j]));
      m[i * n + j] = c;
      m[j * n + i] = c;
    }
  return m;
}

std::vector<std::uint8_t> crossing_matrix_parallel(std::span<const LiftedWall> walls) {
  const std::size_t n = walls.size();
  std::vector<std::uint8_t> m(n * n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
      auto c = static_cast<std::uint8_t>(cross(walls[i], walls[j]));
      m[i * n + j] = c;
      m[j * n + i] = c;
    }
  return m;
}

namespace {

// Exact max clique, Tomita-style branch and bound with greedy coloring.
struct CliqueSolver {
  int n;
  const std::vector<std::uint8_t>& m;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int best = 0;

  bool adj(int i, int j) const {
    return m[static_cast<std::size_t>(i) * n + j] ==
           static_cast<std::uint8_t>(Cross::regular);
  }

  void expand(std::vector<int>& r, std::vector<int>& cand) {
    if (++nodes > budget)
      fail(ErrorCode::ResourceLimit, "clique search exceeded the node cap");
    if (cand.empty()) {
      best = std::max(best, static_cast<int>(r.size()));
      return;
    }
    // Greedy coloring in candidate order; color = bound on clique extension.
    std::vector<int> color(cand.size());
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      int v = cand[i];
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (int u : classes[k])
          if (adj(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
      color[i] = static_cast<int>(k) + 1;
    }
    // Sort candidates by color ascending (stable: keeps id order inside).
    std::vector<int> idx(cand.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int x, int y) { return color[x] < color[y]; });

    std::vector<int> ordered(cand.size());
    std::vector<int> ocolor(cand.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      ordered[i] = cand[idx[i]];
      ocolor[i] = color[idx[i]];
    }
    for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(r.size()) + ocolor[i] <= best) return;
      int v = ordered[i];
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (adj(ordered[j], v)) next.push_back(ordered[j]);
      r.push_back(v);
      expand(r, next);
      r.pop_back();
    }
  }
};

}  // namespace

int dimension_estimate(std::span<const LiftedWall> walls,
                       const std::vector<std::uint8_t>& matrix, std::uint64_t node_cap) {
  const int n = static_cast<int>(walls.size());
  if (n == 0) return 0;
  CliqueSolver solver{n, matrix, node_cap};

  // Seed order: degree descending, id ascending.
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && solver.adj(i, j)) ++deg[i];
  std::vector<int> cand(n);
  for (int i = 0; i < n; ++i) cand[i] = i;
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int x, int y) { return deg[x] > deg[y]; });

  std::vector<int> r;
  solver.expand(r, cand);
  return solver.best;
}

int dimension_estimate(const TubularGraph& g, const EquitableSet& s, const ArcPairing& p,
                       const WallSet& ws, const CoverOptions& opt) {
  CoverBall ball = build_cover(g, opt);
  auto walls = lift_walls(g, s, p, ball, ws, opt);
  auto matrix = crossing_matrix_serial(walls);
  return dimension_estimate(walls, matrix, opt.caps.clique_nodes);
}

StablePartitionBall stable_partition(std::span<const LiftedWall> walls,
                                     const CoverBall& ball) {
  StablePartitionBall part;

  using Key = std::pair<int, std::vector<std::tuple<int, Int, Int>>>;
  std::map<Key, std::vector<int>> groups;
  for (const auto& w : walls) {
    if (w.kind != LiftedWall::Kind::horizontal) continue;
    Key key;
    key.first = w.wall_component;
    for (const auto& [tv, line] : w.traces)
      key.second.emplace_back(tv, line.dir.x, line.dir.y);
    groups[std::move(key)].push_back(w.id);
  }

  std::map<int, const LiftedWall*> by_id;
  for (const auto& w : walls) by_id[w.id] = &w;

  for (auto& [key, members] : groups) {
    WallFamily f;
    f.id = static_cast<int>(part.families.size());
    f.wall_component = key.first;
    for (const auto& [tv, dx, dy] : key.second) {
      f.domain.push_back(tv);
      f.dir_at[tv] = IntVec2{dx, dy};
    }

    int anchor = f.domain.front();
    std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
      return by_id.at(a)->traces.at(anchor).level < by_id.at(b)->traces.at(anchor).level;
    });
    f.members = members;

    for (int tv : f.domain) {
      f.base_level_at[tv] = by_id.at(members.front())->traces.at(tv).level;
      Rat stride = 0;
      bool uniform = true;
      for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        Rat diff = by_id.at(members[i + 1])->traces.at(tv).level -
                   by_id.at(members[i])->traces.at(tv).level;
        if (i == 0)
          stride = diff;
        else if (diff != stride)
          uniform = false;
      }
      if (!uniform) {
        part.violations.push_back("family " + std::to_string(f.id) +
                                  ": level progression not arithmetic in flat " +
                                  std::to_string(tv));
        stride = 0;
      }
      f.stride_at[tv] = stride;
    }

    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (cross(*by_id.at(members[i]), *by_id.at(members[j])) != Cross::disjoint)
          part.violations.push_back(
              "family " + std::to_string(f.id) + ": members " +
              std::to_string(members[i]) + " and " + std::to_string(members[j]) +
              " intersect");

    part.families.push_back(std::move(f));
  }

  for (const auto& tv : ball.tree.vertices) part.families_per_flat[tv.id] = 0;
  for (const auto& f : part.families)
    for (int tv : f.domain) ++part.families_per_flat[tv];
  return part;
}

std::optional<Int> family_bracket_index(const WallFamily& f, int flat, const Rat& val) {
  Rat stride = f.stride_at.at(flat);
  if (stride == 0)
    fail(ErrorCode::InputError,
         "family has a single member in the window; increase level_window");
  Rat s = stride < 0 ? -stride : stride;
  Rat base = f.base_level_at.at(flat);
  Rat rel = (val - base) / s;
  if (denominator(rel) == 1) return std::nullopt;  // on a member line
  // Residue representative in [-s, 0): the index-0 pair brackets value 0.
  Rat rho = base - s * Rat(rat_floor(base / s));
  Rat anchor = rho - s;
  return rat_floor((val - anchor) / s);
}

CubeCoords zero_cube_coords(const StablePartitionBall& part, int flat, const RatPoint& p) {
  CubeCoords out;
  out.flat = flat;
  for (const auto& f : part.families) {
    if (!f.dir_at.count(flat)) continue;
    Rat val = line_value(f.dir_at.at(flat), p);
    auto idx = family_bracket_index(f, flat, val);
    if (!idx) fail(ErrorCode::OnWall, "sample point lies on a wall line");
    out.coords.emplace_back(f.id, *idx);
  }
  return out;
}

namespace {

// Endpoint of `edge` on the same side as `tv` (the tree minus the edge has
// two components; each endpoint names one).
int nearer_endpoint(const TreeBall& tree, int edge, int tv) {
  const auto& e = tree.edges[edge];
  int child = tree.vertices[e.tv_minus].parent_edge == edge ? e.tv_minus : e.tv_plus;
  for (int cur = tv; cur != -1; cur = tree.vertices[cur].parent_vertex)
    if (cur == child) return child;
  return tree.other_end(edge, child);
}

}  // namespace

ZeroCube canonical_cube(const TreeBall& tree, int flat) {
  ZeroCube cube;
  for (const auto& e : tree.edges) cube.side[e.id] = nearer_endpoint(tree, e.id, flat);
  return cube;
}

void flip_vertical(ZeroCube& cube, const TreeBall& tree, int tree_edge) {
  cube.side[tree_edge] = tree.other_end(tree_edge, cube.side[tree_edge]);
}

int tree_projection(const TreeBall& tree, const ZeroCube& cube) {
  for (const auto& tv : tree.vertices) {
    bool ok = true;
    for (const auto& [edge, side] : cube.side)
      if (nearer_endpoint(tree, edge, tv.id) != side) {
        ok = false;
        break;
      }
    if (ok) return tv.id;
  }
  fail(ErrorCode::InconsistentOrientation,
       "vertical orientations select no tree vertex");
}

ProbeResult local_finiteness_probe(const TubularGraph& g, const CoverBall& ball,
                                   const StablePartitionBall& part) {
  ProbeResult res;
  res.max_count = 0;

  std::map<int, int> orbit_flat;  // first flat per vertex orbit
  for (const auto& tv : ball.tree.vertices)
    orbit_flat.emplace(tv.orbit, tv.id);

  bool all_fenced = true;
  for (const auto& [orbit, flat] : orbit_flat) {
    // Deterministic off-wall sample point in this flat.
    RatPoint pt;
    bool placed = false;
    for (int i = 1; i <= 1000 && !placed; ++i) {
      pt = {Rat(i, 101), Rat(i, 103)};
      placed = true;
      for (const auto& f : part.families) {
        if (!f.dir_at.count(flat)) continue;
        if (!family_bracket_index(f, flat, line_value(f.dir_at.at(flat), pt))) {
          placed = false;
          break;
        }
      }
    }
    if (!placed) fail(ErrorCode::OnWall, "no off-wall sample point found");
    res.sample = pt;

    // Groups: (edge orbit, side of this flat).
    for (int eo = 0; eo < static_cast<int>(g.edges.size()); ++eo) {
      for (bool minus_side : {true, false}) {
        std::vector<int> group;
        for (int te : ball.tree.incident[flat]) {
          if (ball.tree.edges[te].orbit != eo) continue;
          const TubeSideGeom& side = minus_side ? ball.tubes[te].minus : ball.tubes[te].plus;
          if (side.flat == flat) group.push_back(te);
        }
        if (group.empty()) continue;

        IntVec2 att_dir = normalize_direction(g.phi(eo, minus_side));
        std::vector<const WallFamily*> fences;
        for (const auto& f : part.families)
          if (f.dir_at.count(flat) && f.dir_at.at(flat) == att_dir) fences.push_back(&f);

        Int valid = 0;
        for (int te : group) {
          const TubeSideGeom& side = minus_side ? ball.tubes[te].minus : ball.tubes[te].plus;
          bool flip_ok = true;
          for (const WallFamily* f : fences) {
            Rat val = line_value(att_dir, pt);
            auto idx = family_bracket_index(*f, flat, val);
            Rat s = f->stride_at.at(flat);
            if (s < 0) s = -s;
            Rat base = f->base_level_at.at(flat);
            Rat rho = base - s * Rat(rat_floor(base / s));
            Rat lo = (rho - s) + Rat(*idx) * s;
            Rat hi = lo + s;
            Rat c = Rat(side.level);
            if (!(lo < c && c < hi)) {
              flip_ok = false;
              break;
            }
          }
          if (flip_ok) ++valid;
        }

        ProbeGroup pg;
        pg.flat = flat;
        pg.edge_orbit = eo;
        pg.minus_side = minus_side;
        pg.group_size = Int(group.size());
        pg.valid_flips = valid;
        pg.has_parallel_family = !fences.empty();
        if (!pg.has_parallel_family && all_fenced) {
          all_fenced = false;
          res.witness = "edge '" + g.edges[eo].id + "' " +
                        (minus_side ? "minus" : "plus") + " side at flat " +
                        std::to_string(flat) + " has no parallel wall family";
        }
        if (valid > res.max_count) res.max_count = valid;
        res.groups.push_back(std::move(pg));
      }
    }
  }
  res.locally_finite_evidence = all_fenced;
  return res;
}

}  // namespace tubular
