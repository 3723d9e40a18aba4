#include "tubular/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tubular/errors.hpp"
#include "tubular/io.hpp"

namespace tubular {

namespace {

Options env_defaults() {
  Options opt;
  auto cap = [](const char* name, auto& target) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      long long parsed = std::strtoll(v, &end, 10);
      if (end && *end == '\0' && parsed > 0)
        target = static_cast<std::decay_t<decltype(target)>>(parsed);
    }
  };
  cap("TUBULAR_CAP_TREE_VERTICES", opt.caps.tree_vertices);
  cap("TUBULAR_CAP_WALL_NODES", opt.caps.wall_nodes);
  cap("TUBULAR_CAP_LIFTED_WALLS", opt.caps.lifted_walls);
  cap("TUBULAR_CAP_CLIQUE_NODES", opt.caps.clique_nodes);
  cap("TUBULAR_CAP_MAX_CANDIDATES", opt.search_caps.max_candidates);
  cap("TUBULAR_CAP_MAX_CURVES_PER_VERTEX", opt.search_caps.max_curves_per_vertex);
  return opt;
}

InputDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InputError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str(), env_defaults());
}

const EquitableSet& need_equitable(const InputDocument& doc) {
  if (!doc.equitable)
    fail(ErrorCode::InputError, "this subcommand needs an \"equitable\" section");
  return *doc.equitable;
}

ArcPairing pairing_or_default(const InputDocument& doc) {
  if (doc.pairing) return *doc.pairing;
  return default_pairing(doc.group, need_equitable(doc));
}

std::string yn(bool b) { return b ? "yes" : "no"; }

void print_verdict_text(std::ostream& out, const Verdict& v) {
  out << "equitable: " << (v.equitable_ok ? "ok" : "failed") << "\n";
  if (!v.equitable_ok) return;
  out << "finite-dimensional: " << yn(v.finite_dimensional) << "\n";
  out << "primitive: " << yn(v.primitive)
      << (v.auto_primitivized ? " (after rewrite)" : "") << "\n";
  out << "fortified: " << yn(v.fortified) << "\n";
  out << "virtually special: " << to_string(v.virtually_special);
  if (v.virtually_special == VSpecial::unknown && !v.fortified)
    out << " (wallspace dual not locally finite)";
  out << "\n";
  for (const auto& [claim, rule] : v.certificate)
    out << "  - " << claim << " [" << rule << "]\n";
}

struct CommonArgs {
  std::string file;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("file", a.file, "input JSON document")->required();
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tubular group cubulation classifier"};
  app.require_subcommand(1);

  CommonArgs ca;
  int exit_code = 0;

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check the graph presentation");
  add_common(validate_cmd, ca);
  validate_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    ValidationReport r = validate(doc.group);
    if (ca.format == "json") {
      out << dump_canonical(to_json(r));
    } else {
      out << "valid: " << yn(r.valid) << "\n";
      for (const auto& i : r.issues)
        out << "  - " << i.kind << " " << i.where << ": " << i.detail << "\n";
    }
    exit_code = r.valid ? 0 : 1;
  });

  // equitable verify|search|from-homology
  auto* equitable_cmd = app.add_subcommand("equitable", "equitable set operations");
  equitable_cmd->require_subcommand(1);

  auto* verify_cmd = equitable_cmd->add_subcommand("verify", "check the given set");
  add_common(verify_cmd, ca);
  verify_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    VerifyReport r = verify_equitable(doc.group, need_equitable(doc));
    if (ca.format == "json") {
      out << dump_canonical(to_json(r));
    } else {
      out << "ok: " << yn(r.ok) << "\n";
      for (const auto& b : r.balance)
        out << "  edge " << b.edge << ": " << b.minus_total << " vs " << b.plus_total
            << (b.ok ? " ok" : " UNBALANCED") << "\n";
      for (const auto& f : r.finite_index)
        if (!f.ok) out << "  vertex " << f.vertex << ": not finite index\n";
      for (const auto& d : r.disjointness)
        out << "  vertex " << d.vertex << " curves " << d.curve_a << "," << d.curve_b
            << ": " << d.kind << "\n";
    }
    exit_code = r.ok ? 0 : 1;
  });

  int bound_flag = -1;
  bool parallel_flag = false;
  auto* search_cmd = equitable_cmd->add_subcommand("search", "bounded exhaustive search");
  add_common(search_cmd, ca);
  search_cmd->add_option("--bound", bound_flag, "coordinate bound");
  search_cmd->add_flag("--parallel", parallel_flag, "use the OpenMP search kernel");
  search_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    int bound = bound_flag > 0 ? bound_flag : doc.options.bound;
    SearchResult r =
        search_equitable(doc.group, bound, doc.options.search_caps, parallel_flag);
    if (ca.format == "json") {
      Json j{{"candidates_tried", r.candidates_tried},
             {"found", r.found ? to_json(*r.found) : Json(nullptr)},
             {"note", r.note}};
      out << dump_canonical(j);
    } else if (r.found) {
      out << "found:\n" << dump_canonical(to_json(*r.found));
    } else {
      out << "not found: " << r.note << "\n";
    }
    exit_code = r.found ? 0 : 1;
  });

  auto* homology_cmd =
      equitable_cmd->add_subcommand("from-homology", "two-curve construction");
  add_common(homology_cmd, ca);
  homology_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    ThreeDimResult r = three_dim_equitable(doc.group);
    Json j{{"equitable", to_json(r.set)}, {"pairing", to_json(r.pairing)}};
    out << dump_canonical(j);
    exit_code = 0;
  });

  // walls build|dilation
  auto* walls_cmd = app.add_subcommand("walls", "immersed wall operations");
  walls_cmd->require_subcommand(1);

  auto* build_cmd = walls_cmd->add_subcommand("build", "assemble immersed walls");
  add_common(build_cmd, ca);
  build_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    WallSet ws = build_walls(doc.group, need_equitable(doc), pairing_or_default(doc));
    if (ca.format == "json") {
      out << dump_canonical(to_json(ws));
    } else {
      out << ws.walls.size() << " wall(s)\n";
      for (const auto& w : ws.walls)
        out << "  wall " << w.id << ": " << w.circles.size() << " circle(s), "
            << w.arcs.size() << " arc(s)\n";
    }
    exit_code = 0;
  });

  auto* dilation_cmd = walls_cmd->add_subcommand("dilation", "cycle weights per wall");
  add_common(dilation_cmd, ca);
  dilation_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    const EquitableSet& s = need_equitable(doc);
    ArcPairing p = pairing_or_default(doc);
    WallSet ws = build_walls(doc.group, s, p);
    std::vector<WallDilation> reports;
    for (const auto& w : ws.walls) reports.push_back(dilation(w, doc.group, s, ws));
    bool any_dilated = false;
    for (const auto& r : reports) any_dilated = any_dilated || r.dilated;
    if (ca.format == "json") {
      out << dump_canonical(to_json(reports));
    } else {
      for (const auto& r : reports) {
        out << "wall " << r.wall << ": " << (r.dilated ? "dilated" : "non-dilated");
        if (!r.cycle_weights.empty()) {
          out << " cycle weights";
          for (const auto& c : r.cycle_weights) out << " " << rat_str(c);
        }
        out << "\n";
      }
    }
    exit_code = any_dilated ? 1 : 0;
  });

  // primitivize
  auto* prim_cmd = app.add_subcommand("primitivize", "rewrite to primitive curves");
  add_common(prim_cmd, ca);
  prim_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    PrimitivizeResult r =
        primitivize(doc.group, need_equitable(doc), pairing_or_default(doc));
    out << dump_canonical(to_json(r));
    exit_code = 0;
  });

  // cover
  int radius_flag = -1, window_flag = -1, level_window_flag = -1;
  bool cover_parallel = false;
  auto* cover_cmd = app.add_subcommand("cover", "desk-scale universal cover report");
  add_common(cover_cmd, ca);
  cover_cmd->add_option("--radius", radius_flag, "tree ball radius");
  cover_cmd->add_option("--window", window_flag, "coset window");
  cover_cmd->add_option("--level-window", level_window_flag, "seed level window");
  cover_cmd->add_flag("--parallel", cover_parallel, "use the OpenMP crossing kernel");
  cover_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    CoverOptions opt = doc.options.cover();
    if (radius_flag >= 0) opt.radius = radius_flag;
    if (window_flag >= 0) opt.coset_window = window_flag;
    if (level_window_flag >= 0) opt.level_window = level_window_flag;
    const EquitableSet& s = need_equitable(doc);
    ArcPairing p = pairing_or_default(doc);
    WallSet ws = build_walls(doc.group, s, p);
    CoverReport r = run_cover(doc.group, s, p, ws, opt, cover_parallel);
    if (ca.format == "json") {
      out << dump_canonical(to_json(r));
    } else {
      out << "tree: " << r.tree_vertices << " flats, " << r.tree_edges << " tubes\n"
          << "walls: " << r.horizontal << " horizontal, " << r.vertical << " vertical\n"
          << "dimension estimate: " << r.dimension << "\n"
          << "locally finite evidence: " << yn(r.probe.locally_finite_evidence) << "\n";
      for (const auto& v : r.partition.violations) out << "  violation: " << v << "\n";
    }
    exit_code = 0;
  });

  // classify
  bool assert_exhaustive = false;
  auto* classify_cmd = app.add_subcommand("classify", "full verdict chain");
  add_common(classify_cmd, ca);
  classify_cmd->add_flag("--assert-exhaustive", assert_exhaustive,
                         "treat this wallspace as the object under test");
  classify_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    Verdict v = classify(doc.group, need_equitable(doc), pairing_or_default(doc),
                         assert_exhaustive);
    if (ca.format == "json")
      out << dump_canonical(to_json(v));
    else
      print_verdict_text(out, v);
    exit_code = v.equitable_ok && v.virtually_special == VSpecial::yes ? 0 : 1;
  });

  // certify-3d
  auto* three_cmd = app.add_subcommand("certify-3d", "two-curve construction pipeline");
  add_common(three_cmd, ca);
  three_cmd->add_option("--radius", radius_flag, "tree ball radius");
  three_cmd->add_option("--window", window_flag, "coset window");
  three_cmd->callback([&] {
    InputDocument doc = load(ca.file);
    CoverOptions opt = doc.options.cover();
    if (radius_flag >= 0) opt.radius = radius_flag;
    if (window_flag >= 0) opt.coset_window = window_flag;
    ThreeDimCertificate cert = certify_three_dim(doc.group, opt);
    if (ca.format == "json") {
      out << dump_canonical(to_json(cert));
    } else {
      out << "dimension estimate: " << cert.dimension_estimate << " (<= 3)\n";
      print_verdict_text(out, cert.verdict);
    }
    exit_code = 0;
  });

  // Parse.
  std::vector<const char*> argv;
  argv.push_back("tubular");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ResourceLimit:
      case ErrorCode::RecursionLimit:
        return 3;
      case ErrorCode::SummandConditionFailed:
        return 1;
      default:
        return 2;
    }
  }
  return exit_code;
}

}  // namespace tubular
