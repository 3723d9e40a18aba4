// Timing comparison of the serial reference kernels against the OpenMP ones:
// pairwise crossing classification and the bounded equitable search.

#include <chrono>
#include <iostream>

#include "tubular/cover.hpp"
#include "tubular/io.hpp"

using namespace tubular;
namespace chrono = std::chrono;

namespace {

double ms_since(chrono::steady_clock::time_point t0) {
  return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

TubularGraph dilated_group() {
  TubularGraph g;
  g.vertices = {"v"};
  g.edges = {{"e", "v", "v", {1, 0}, {0, 1}}};
  return g;
}

EquitableSet dilated_set() {
  EquitableSet s;
  s.curves["v"] = with_default_offsets({{1, 2}, {2, 1}});
  return s;
}

}  // namespace

int main() {
  TubularGraph g = dilated_group();
  EquitableSet s = dilated_set();
  ArcPairing p = default_pairing(g, s);
  WallSet ws = build_walls(g, s, p);

  std::cout << "crossing matrix kernel (dilated fixture)\n";
  std::cout << "radius  walls     serial_ms   parallel_ms  equal\n";
  for (int radius = 1; radius <= 3; ++radius) {
    CoverOptions opt;
    opt.radius = radius;
    opt.coset_window = 2;
    opt.level_window = 2;
    CoverBall ball = build_cover(g, opt);
    auto walls = lift_walls(g, s, p, ball, ws, opt);

    auto t0 = chrono::steady_clock::now();
    auto serial = crossing_matrix_serial(walls);
    double serial_ms = ms_since(t0);

    t0 = chrono::steady_clock::now();
    auto par = crossing_matrix_parallel(walls);
    double par_ms = ms_since(t0);

    std::printf("%6d %6zu %12.2f %12.2f  %s\n", radius, walls.size(), serial_ms, par_ms,
                serial == par ? "yes" : "NO");
  }

  std::cout << "\nequitable search kernel (two-vertex amalgam, bound 2)\n";
  TubularGraph amalgam;
  amalgam.vertices = {"u", "v"};
  amalgam.edges = {{"e", "u", "v", {1, 0}, {1, 0}}};

  auto t0 = chrono::steady_clock::now();
  SearchResult serial = search_equitable(amalgam, 2, {}, false);
  double serial_ms = ms_since(t0);
  t0 = chrono::steady_clock::now();
  SearchResult par = search_equitable(amalgam, 2, {}, true);
  double par_ms = ms_since(t0);

  bool equal = serial.found.has_value() == par.found.has_value() &&
               (!serial.found || to_json(*serial.found) == to_json(*par.found));
  std::printf("serial %.2f ms, parallel %.2f ms, identical result: %s\n", serial_ms,
              par_ms, equal ? "yes" : "NO");
  return 0;
}
