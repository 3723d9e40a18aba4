#include "tubular/io.hpp"

#include <algorithm>

#include "tubular/errors.hpp"

namespace tubular {

namespace {

[[noreturn]] void bad_input(const std::string& what) {
  fail(ErrorCode::InputError, what);
}

void check_keys(const Json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad_input(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const char* k) { return it.key() == k; });
    if (!ok) bad_input(where + ": unknown field '" + it.key() + "'");
  }
}

const Json& require(const Json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad_input(where + ": missing field '" + key + "'");
  return *it;
}

Int parse_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad_input(where + ": expected an integer");
  return Int(j.get<long long>());
}

int parse_small_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad_input(where + ": expected an integer");
  return j.get<int>();
}

IntVec2 parse_vec(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad_input(where + ": expected [x, y]");
  return {parse_int(j[0], where), parse_int(j[1], where)};
}

std::string parse_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad_input(where + ": expected a string");
  return j.get<std::string>();
}

Json vec_json(const IntVec2& v) {
  return Json::array({Json(v.x.convert_to<long long>()), Json(v.y.convert_to<long long>())});
}

Json int_json(const Int& n) {
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max())
    return Json(n.convert_to<long long>());
  return Json(n.str());
}

}  // namespace

InputDocument parse_input(const std::string& text, const Options& defaults) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad_input(std::string("malformed JSON: ") + e.what());
  }
  check_keys(root, "document", {"equitable", "group", "options", "pairing"});

  InputDocument doc;
  doc.options = defaults;

  const Json& jg = require(root, "document", "group");
  check_keys(jg, "group", {"edges", "vertices"});
  for (const auto& v : require(jg, "group", "vertices")) {
    doc.group.vertices.push_back(parse_string(v, "group.vertices"));
  }
  for (const auto& je : require(jg, "group", "edges")) {
    check_keys(je, "group.edges[]", {"id", "minus", "phi_minus", "phi_plus", "plus"});
    EdgeRecord e;
    e.id = parse_string(require(je, "edge", "id"), "edge.id");
    e.minus = parse_string(require(je, "edge", "minus"), "edge.minus");
    e.plus = parse_string(require(je, "edge", "plus"), "edge.plus");
    e.phi_minus = parse_vec(require(je, "edge", "phi_minus"), "edge.phi_minus");
    e.phi_plus = parse_vec(require(je, "edge", "phi_plus"), "edge.phi_plus");
    doc.group.edges.push_back(std::move(e));
  }

  if (auto it = root.find("equitable"); it != root.end()) {
    EquitableSet s;
    if (!it->is_object()) bad_input("equitable: expected an object keyed by vertex");
    for (auto cur = it->begin(); cur != it->end(); ++cur) {
      if (doc.group.vertex_index(cur.key()) < 0)
        bad_input("equitable: unknown vertex '" + cur.key() + "'");
      std::vector<CurveSpec> curves;
      if (!cur->is_array()) bad_input("equitable." + cur.key() + ": expected an array");
      for (const auto& jc : *cur) {
        check_keys(jc, "curve", {"offset", "vec"});
        CurveSpec c;
        c.vec = parse_vec(require(jc, "curve", "vec"), "curve.vec");
        auto off = rat_parse(parse_string(require(jc, "curve", "offset"), "curve.offset"));
        if (!off) bad_input("curve.offset: expected a reduced \"p/q\" with q > 0");
        c.offset = *off;
        curves.push_back(std::move(c));
      }
      s.curves[cur.key()] = std::move(curves);
    }
    doc.equitable = std::move(s);
  }

  if (auto it = root.find("pairing"); it != root.end()) {
    ArcPairing p;
    if (!it->is_object()) bad_input("pairing: expected an object keyed by edge");
    for (auto cur = it->begin(); cur != it->end(); ++cur) {
      if (doc.group.edge_index(cur.key()) < 0)
        bad_input("pairing: unknown edge '" + cur.key() + "'");
      std::vector<std::pair<Slot, Slot>> arcs;
      if (!cur->is_array()) bad_input("pairing." + cur.key() + ": expected an array");
      for (const auto& jp : *cur) {
        if (!jp.is_array() || jp.size() != 2)
          bad_input("pairing entry: expected [[curve, point], [curve, point]]");
        auto slot = [&](const Json& js) -> Slot {
          if (!js.is_array() || js.size() != 2)
            bad_input("pairing slot: expected [curve, point]");
          return {parse_small_int(js[0], "slot.curve"), parse_int(js[1], "slot.point")};
        };
        arcs.emplace_back(slot(jp[0]), slot(jp[1]));
      }
      p.arcs[cur.key()] = std::move(arcs);
    }
    doc.pairing = std::move(p);
  }

  if (auto it = root.find("options"); it != root.end()) {
    check_keys(*it, "options",
               {"bound", "caps", "coset_window", "level_window", "radius"});
    if (auto f = it->find("radius"); f != it->end())
      doc.options.radius = parse_small_int(*f, "options.radius");
    if (auto f = it->find("coset_window"); f != it->end())
      doc.options.coset_window = parse_small_int(*f, "options.coset_window");
    if (auto f = it->find("level_window"); f != it->end())
      doc.options.level_window = parse_small_int(*f, "options.level_window");
    if (auto f = it->find("bound"); f != it->end())
      doc.options.bound = parse_small_int(*f, "options.bound");
    if (auto f = it->find("caps"); f != it->end()) {
      check_keys(*f, "options.caps",
                 {"clique_nodes", "lifted_walls", "max_candidates",
                  "max_curves_per_vertex", "tree_vertices", "wall_nodes"});
      auto cap = [&](const char* key, auto& target) {
        if (auto c = f->find(key); c != f->end()) {
          if (!c->is_number_integer() || c->get<long long>() <= 0)
            bad_input(std::string("options.caps.") + key + ": expected a positive integer");
          target = static_cast<std::decay_t<decltype(target)>>(c->get<long long>());
        }
      };
      cap("tree_vertices", doc.options.caps.tree_vertices);
      cap("wall_nodes", doc.options.caps.wall_nodes);
      cap("lifted_walls", doc.options.caps.lifted_walls);
      cap("clique_nodes", doc.options.caps.clique_nodes);
      cap("max_candidates", doc.options.search_caps.max_candidates);
      cap("max_curves_per_vertex", doc.options.search_caps.max_curves_per_vertex);
    }
  }
  return doc;
}

Json to_json(const ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues)
    issues.push_back({{"detail", i.detail}, {"kind", i.kind}, {"where", i.where}});
  return {{"connected", r.connected}, {"issues", issues}, {"valid", r.valid}};
}

Json to_json(const VerifyReport& r) {
  Json balance = Json::array();
  for (const auto& b : r.balance)
    balance.push_back({{"edge", b.edge},
                       {"minus_total", int_json(b.minus_total)},
                       {"ok", b.ok},
                       {"plus_total", int_json(b.plus_total)}});
  Json fin = Json::array();
  for (const auto& f : r.finite_index)
    fin.push_back({{"ok", f.ok}, {"vertex", f.vertex}});
  Json dis = Json::array();
  for (const auto& d : r.disjointness)
    dis.push_back({{"curve_a", d.curve_a},
                   {"curve_b", d.curve_b},
                   {"kind", d.kind},
                   {"vertex", d.vertex}});
  return {{"balance", balance}, {"disjointness", dis}, {"finite_index", fin}, {"ok", r.ok}};
}

Json to_json(const FortifiedReport& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges) {
    Json je{{"edge", e.edge}, {"ok", e.minus_witness && e.plus_witness}};
    je["minus_witness"] = e.minus_witness ? Json(*e.minus_witness) : Json(nullptr);
    je["plus_witness"] = e.plus_witness ? Json(*e.plus_witness) : Json(nullptr);
    edges.push_back(je);
  }
  return {{"edges", edges}, {"fortified", r.fortified}};
}

Json to_json(const PrimitiveReport& r) {
  Json offenders = Json::array();
  for (const auto& [v, i] : r.offenders)
    offenders.push_back({{"curve", i}, {"vertex", v}});
  return {{"offenders", offenders}, {"primitive", r.primitive}};
}

Json to_json(const EquitableSet& s) {
  Json j = Json::object();
  for (const auto& [v, curves] : s.curves) {
    Json arr = Json::array();
    for (const auto& c : curves)
      arr.push_back({{"offset", rat_str(c.offset)}, {"vec", vec_json(c.vec)}});
    j[v] = arr;
  }
  return j;
}

Json to_json(const ArcPairing& p) {
  Json j = Json::object();
  for (const auto& [e, arcs] : p.arcs) {
    Json arr = Json::array();
    for (const auto& [ms, ps] : arcs)
      arr.push_back(Json::array(
          {Json::array({Json(ms.curve), int_json(ms.point)}),
           Json::array({Json(ps.curve), int_json(ps.point)})}));
    j[e] = arr;
  }
  return j;
}

Json to_json(const WallSet& ws) {
  Json walls = Json::array();
  for (const auto& w : ws.walls) {
    Json arcs = Json::array();
    for (const auto& a : w.arcs)
      arcs.push_back({{"edge", a.edge},
                      {"minus_circle", a.minus_circle},
                      {"minus_slot", Json::array({Json(a.minus_slot.curve),
                                                  int_json(a.minus_slot.point)})},
                      {"pair_index", a.pair_index},
                      {"plus_circle", a.plus_circle},
                      {"plus_slot", Json::array({Json(a.plus_slot.curve),
                                                 int_json(a.plus_slot.point)})}});
    Json circles = Json::array();
    for (int c : w.circles)
      circles.push_back({{"curve", ws.circles[c].curve},
                         {"id", c},
                         {"vertex", ws.circles[c].vertex}});
    walls.push_back({{"arcs", arcs}, {"circles", circles}, {"id", w.id}});
  }
  return {{"walls", walls}};
}

Json to_json(const std::vector<WallDilation>& reports) {
  Json walls = Json::array();
  bool fin = true;
  for (const auto& r : reports) {
    Json weights = Json::array();
    for (const auto& a : r.arc_weights)
      weights.push_back({{"edge", a.edge},
                         {"pair_index", a.pair_index},
                         {"weight", rat_str(a.weight)}});
    Json cycles = Json::array();
    for (const auto& c : r.cycle_weights) cycles.push_back(rat_str(c));
    walls.push_back({{"arc_weights", weights},
                     {"cycle_weights", cycles},
                     {"dilated", r.dilated},
                     {"wall", r.wall}});
    fin = fin && !r.dilated;
  }
  return {{"finite_dimensional", fin}, {"walls", walls}};
}

Json to_json(const PrimitivizeResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"copies", int_json(t.factor)},
                     {"curve_index", t.curve_index},
                     {"primitive", vec_json(t.primitive)},
                     {"vertex", t.vertex}});
  return {{"equitable", to_json(r.set)}, {"pairing", to_json(r.pairing)}, {"trace", trace}};
}

Json to_json(const Verdict& v) {
  Json cert = Json::array();
  for (const auto& [claim, rule] : v.certificate)
    cert.push_back({{"by", rule}, {"claim", claim}});
  Json dilated = Json::array();
  for (int w : v.dilated_walls) dilated.push_back(w);
  return {{"auto_primitivized", v.auto_primitivized},
          {"certificate", cert},
          {"dilated_walls", dilated},
          {"equitable_ok", v.equitable_ok},
          {"finite_dimensional", v.finite_dimensional},
          {"fortified", v.fortified},
          {"locally_finite_claim", v.locally_finite_claim},
          {"primitive", v.primitive},
          {"virtually_special", to_string(v.virtually_special)}};
}

Json to_json(const ThreeDimCertificate& c) {
  Json aux = Json::array();
  for (const auto& a : c.construction.auxiliary_edges)
    aux.push_back({{"g_u", vec_json(a.g_u)},
                   {"g_v", vec_json(a.g_v)},
                   {"id", a.id},
                   {"u", a.u},
                   {"v", a.v}});
  return {{"auxiliary_edges", aux},
          {"dimension_estimate", c.dimension_estimate},
          {"equitable", to_json(c.construction.set)},
          {"pairing", to_json(c.construction.pairing)},
          {"verdict", to_json(c.verdict)}};
}

CoverReport run_cover(const TubularGraph& g, const EquitableSet& s, const ArcPairing& p,
                      const WallSet& ws, const CoverOptions& opt, bool parallel_matrix) {
  CoverReport r;
  CoverBall ball = build_cover(g, opt);
  auto walls = lift_walls(g, s, p, ball, ws, opt);
  auto matrix =
      parallel_matrix ? crossing_matrix_parallel(walls) : crossing_matrix_serial(walls);

  r.tree_vertices = static_cast<int>(ball.tree.vertices.size());
  r.tree_edges = static_cast<int>(ball.tree.edges.size());
  r.radius = opt.radius;
  for (const auto& w : walls) {
    if (w.kind == LiftedWall::Kind::horizontal) {
      ++r.horizontal;
      if (w.trace_conflict) ++r.trace_conflicts;
    } else {
      ++r.vertical;
    }
  }
  const std::size_t n = walls.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = static_cast<Cross>(matrix[i * n + j]);
      if (c == Cross::regular) ++r.regular_pairs;
      if (c == Cross::nonregular) ++r.nonregular_pairs;
    }
  r.dimension = dimension_estimate(walls, matrix, opt.caps.clique_nodes);
  r.partition = stable_partition(walls, ball);
  r.probe = local_finiteness_probe(g, ball, r.partition);
  return r;
}

Json to_json(const CoverReport& r) {
  Json families = Json::array();
  for (const auto& f : r.partition.families) {
    Json domain = Json::array();
    for (int tv : f.domain) domain.push_back(tv);
    Json members = Json::array();
    for (int m : f.members) members.push_back(m);
    int anchor = f.domain.front();
    families.push_back({{"anchor_flat", anchor},
                        {"domain", domain},
                        {"id", f.id},
                        {"members", members},
                        {"stride", rat_str(f.stride_at.at(anchor))},
                        {"wall_component", f.wall_component}});
  }
  Json fpf = Json::object();
  for (const auto& [tv, n] : r.partition.families_per_flat)
    fpf[std::to_string(tv)] = n;
  Json violations = Json::array();
  for (const auto& v : r.partition.violations) violations.push_back(v);

  Json groups = Json::array();
  for (const auto& pg : r.probe.groups)
    groups.push_back({{"edge_orbit", pg.edge_orbit},
                      {"flat", pg.flat},
                      {"group_size", int_json(pg.group_size)},
                      {"has_parallel_family", pg.has_parallel_family},
                      {"minus_side", pg.minus_side},
                      {"valid_flips", int_json(pg.valid_flips)}});
  Json probe{{"groups", groups},
             {"locally_finite_evidence", r.probe.locally_finite_evidence},
             {"max_count", int_json(r.probe.max_count)},
             {"witness", r.probe.witness}};

  return {{"crossings",
           Json{{"nonregular", r.nonregular_pairs}, {"regular", r.regular_pairs}}},
          {"dimension_estimate", r.dimension},
          {"families", families},
          {"families_per_flat", fpf},
          {"probe", probe},
          {"tree", Json{{"edges", r.tree_edges},
                        {"radius", r.radius},
                        {"vertices", r.tree_vertices}}},
          {"violations", violations},
          {"walls", Json{{"horizontal", r.horizontal},
                         {"trace_conflicts", r.trace_conflicts},
                         {"vertical", r.vertical}}}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tubular
