#pragma once

#include "tubular/cover.hpp"
#include "tubular/primitivize.hpp"
#include "tubular/three_dim.hpp"

namespace tubular {

enum class VSpecial { yes, no_not_locally_finite, unknown };

inline const char* to_string(VSpecial v) {
  switch (v) {
    case VSpecial::yes: return "yes";
    case VSpecial::no_not_locally_finite: return "no_not_locally_finite";
    default: return "unknown";
  }
}

struct Verdict {
  bool equitable_ok = false;
  std::vector<int> dilated_walls;
  bool finite_dimensional = false;
  bool primitive = false;
  bool fortified = false;
  bool locally_finite_claim = false;
  VSpecial virtually_special = VSpecial::unknown;
  bool auto_primitivized = false;

  EquitableSet final_set;      // after the optional rewrite
  ArcPairing final_pairing;
  VerifyReport verify;
  FortifiedReport fortified_report;
  PrimitiveReport primitive_report;
  std::vector<WallDilation> dilation_reports;

  // (claim, rule) pairs; rules are the mathematical implications used.
  std::vector<std::pair<std::string, std::string>> certificate;
};

// Chain: verify -> walls -> dilation -> primitivity (with automatic rewrite
// when it is lossless) -> fortification -> verdict. A single non-fortified
// wall set leaves the group verdict unknown unless the caller asserts the
// wallspace is the object under test.
Verdict classify(const TubularGraph& g, const EquitableSet& s, const ArcPairing& p,
                 bool assert_wallspace_exhaustive = false);

struct ThreeDimCertificate {
  ThreeDimResult construction;
  Verdict verdict;
  int dimension_estimate = 0;
};

// Theorem-C-style pipeline: build the two-curves-per-vertex set, classify it,
// and confirm the ball-restricted dual dimension stays at most 3.
ThreeDimCertificate certify_three_dim(const TubularGraph& g, const CoverOptions& opt);

}  // namespace tubular
