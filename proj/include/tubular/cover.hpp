#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tubular/tree.hpp"
#include "tubular/walls.hpp"

namespace tubular {

struct Caps {
  std::uint64_t tree_vertices = 200000;
  std::uint64_t wall_nodes = 2000000;
  std::uint64_t lifted_walls = 100000;
  std::uint64_t clique_nodes = 50000000;
};

struct CoverOptions {
  int radius = 2;
  int coset_window = 2;
  int level_window = 2;
  Caps caps;
};

// One side of a tube: the attaching line in the endpoint flat and the data
// needed to parameterize the boundary line as ref + t * phi.
struct TubeSideGeom {
  int flat = -1;
  IntVec2 phi;       // attaching vector of this side's orbit
  IntVec2 dir;       // normalized primitive direction of phi
  IntVec2 ref_unit;  // det(dir, ref_unit) = 1
  Int level;         // integer coset level: line { det(dir, p) = level }

  RationalLine line() const { return {dir, Rat(level)}; }
};

struct TubeGeom {
  TubeSideGeom minus, plus;
};

struct CoverBall {
  TreeBall tree;
  std::vector<TubeGeom> tubes;  // indexed by tree edge id
};

CoverBall build_cover(const TubularGraph& g, const CoverOptions& opt);

// A wall line in one flat.
struct TraceLine {
  int curve;    // curve index at the flat's vertex orbit
  IntVec2 dir;  // normalized direction of the curve vector
  Rat level;    // det(dir, p) = level; always ≡ curve offset (mod 1)
};

struct TubeCrossing {
  int tree_edge;
  Rat t_minus;  // parameter on the minus boundary line
  Rat t_plus;
  int pair_index;  // arc: index into the pairing list of the edge orbit
};

struct LiftedWall {
  enum class Kind { horizontal, vertical };
  int id = -1;
  Kind kind = Kind::horizontal;
  int wall_component = -1;               // horizontal: immersed wall id
  int tree_edge = -1;                    // vertical: the tube
  int seed_tv = -1, seed_curve = -1;
  Int seed_translate;
  std::map<int, TraceLine> traces;       // flat -> line
  std::vector<TubeCrossing> crossings;
  std::map<int, std::vector<std::pair<Rat, Rat>>> crossings_by_edge;
  bool trace_conflict = false;  // a second line reached an already-traced flat

  bool crosses_edge(int te) const { return crossings_by_edge.count(te) > 0; }
};

std::vector<LiftedWall> lift_walls(const TubularGraph& g, const EquitableSet& s,
                                   const ArcPairing& p, const CoverBall& ball,
                                   const WallSet& ws, const CoverOptions& opt);

enum class Cross : std::uint8_t { disjoint = 0, regular = 1, nonregular = 2 };

Cross cross(const LiftedWall& a, const LiftedWall& b);

// Full symmetric n*n matrix of Cross values; the parallel variant distributes
// rows over OpenMP threads and must agree byte-for-byte with the serial one.
std::vector<std::uint8_t> crossing_matrix_serial(std::span<const LiftedWall> walls);
std::vector<std::uint8_t> crossing_matrix_parallel(std::span<const LiftedWall> walls);

// Maximum clique in the regular-crossing graph: exact branch and bound.
int dimension_estimate(std::span<const LiftedWall> walls,
                       const std::vector<std::uint8_t>& matrix,
                       std::uint64_t node_cap = Caps{}.clique_nodes);

int dimension_estimate(const TubularGraph& g, const EquitableSet& s, const ArcPairing& p,
                       const WallSet& ws, const CoverOptions& opt);

struct WallFamily {
  int id = -1;
  int wall_component = -1;
  std::vector<int> members;            // lifted wall ids, sorted by anchor level
  std::vector<int> domain;             // flats, sorted
  std::map<int, IntVec2> dir_at;       // flat -> direction
  std::map<int, Rat> base_level_at;    // flat -> level of the first member
  std::map<int, Rat> stride_at;        // flat -> progression stride (0: single member)
};

struct StablePartitionBall {
  std::vector<WallFamily> families;
  std::vector<std::string> violations;     // crossings or broken progressions
  std::map<int, int> families_per_flat;    // d_v per flat
};

StablePartitionBall stable_partition(std::span<const LiftedWall> walls,
                                     const CoverBall& ball);

// Facing-pair index of value `val` in the family's ideal progression at
// `flat`; nullopt when val sits on a member line.
std::optional<Int> family_bracket_index(const WallFamily& f, int flat, const Rat& val);

struct CubeCoords {
  int flat = -1;
  std::vector<std::pair<int, Int>> coords;  // (family id, index), family-ascending
};

CubeCoords zero_cube_coords(const StablePartitionBall& part, int flat, const RatPoint& p);

// Vertical-wall orientation data of a 0-cube: tree edge -> chosen endpoint.
struct ZeroCube {
  std::map<int, int> side;
};

ZeroCube canonical_cube(const TreeBall& tree, int flat);
void flip_vertical(ZeroCube& cube, const TreeBall& tree, int tree_edge);
int tree_projection(const TreeBall& tree, const ZeroCube& cube);

struct ProbeGroup {
  int flat = -1;
  int edge_orbit = -1;
  bool minus_side = true;  // the probed flat sits on this side of the orbit
  Int group_size;          // incident tree edges in the group
  Int valid_flips;
  bool has_parallel_family = false;
};

struct ProbeResult {
  bool locally_finite_evidence = false;  // every group is fenced by a parallel family
  Int max_count;                         // headline: max valid flips over groups
  std::vector<ProbeGroup> groups;
  std::string witness;  // first unfenced (flat, edge orbit, side), if any
  RatPoint sample;
};

ProbeResult local_finiteness_probe(const TubularGraph& g, const CoverBall& ball,
                                   const StablePartitionBall& part);

}  // namespace tubular
