#pragma once

#include <string>

#include <json.hpp>

#include "tubular/classify.hpp"

namespace tubular {

using Json = nlohmann::json;  // objects serialize with sorted keys: canonical

struct Options {
  int radius = 2;
  int coset_window = 2;
  int level_window = 2;
  int bound = 3;
  Caps caps;
  SearchCaps search_caps;

  CoverOptions cover() const { return {radius, coset_window, level_window, caps}; }
};

struct InputDocument {
  TubularGraph group;
  std::optional<EquitableSet> equitable;
  std::optional<ArcPairing> pairing;
  Options options;
};

// Strict parse: unknown fields rejected, rationals as reduced "p/q" strings.
InputDocument parse_input(const std::string& text, const Options& defaults = {});

Json to_json(const ValidationReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const FortifiedReport& r);
Json to_json(const PrimitiveReport& r);
Json to_json(const EquitableSet& s);
Json to_json(const ArcPairing& p);
Json to_json(const WallSet& ws);
Json to_json(const std::vector<WallDilation>& reports);
Json to_json(const PrimitivizeResult& r);
Json to_json(const Verdict& v);
Json to_json(const ThreeDimCertificate& c);

struct CoverReport {
  int tree_vertices = 0;
  int tree_edges = 0;
  int radius = 0;
  int horizontal = 0;
  int vertical = 0;
  int trace_conflicts = 0;
  std::size_t regular_pairs = 0;
  std::size_t nonregular_pairs = 0;
  int dimension = 0;
  StablePartitionBall partition;
  ProbeResult probe;
};

CoverReport run_cover(const TubularGraph& g, const EquitableSet& s, const ArcPairing& p,
                      const WallSet& ws, const CoverOptions& opt, bool parallel_matrix);
Json to_json(const CoverReport& r);

std::string dump_canonical(const Json& j);

}  // namespace tubular
