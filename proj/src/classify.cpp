#include "tubular/classify.hpp"

#include "tubular/errors.hpp"

namespace tubular {

Verdict classify(const TubularGraph& g, const EquitableSet& s, const ArcPairing& p,
                 bool assert_wallspace_exhaustive) {
  Verdict v;
  v.final_set = s;
  v.final_pairing = p;
  v.verify = verify_equitable(g, s);
  v.equitable_ok = v.verify.ok;
  if (!v.equitable_ok) {
    v.certificate.emplace_back("the given curve system is not an equitable set",
                               "balance, finite-index and disjointness checks");
    return v;
  }

  auto derive = [&](const EquitableSet& set, const ArcPairing& pairing) {
    WallSet ws = build_walls(g, set, pairing);
    std::vector<WallDilation> reports;
    for (const auto& w : ws.walls) reports.push_back(dilation(w, g, set, ws));
    return reports;
  };

  v.dilation_reports = derive(s, p);
  for (const auto& r : v.dilation_reports)
    if (r.dilated) v.dilated_walls.push_back(r.wall);
  v.finite_dimensional = v.dilated_walls.empty();

  v.primitive_report = is_primitive_set(s);
  v.fortified_report = is_fortified(g, s);

  if (!v.primitive_report.primitive && v.finite_dimensional &&
      v.fortified_report.fortified) {
    // The rewrite preserves balance, non-dilation and fortification, so the
    // verdict may be computed on the primitive system.
    PrimitivizeResult rw = primitivize(g, s, p);
    v.auto_primitivized = true;
    v.final_set = rw.set;
    v.final_pairing = rw.pairing;
    v.verify = verify_equitable(g, v.final_set);
    v.dilation_reports = derive(v.final_set, v.final_pairing);
    v.dilated_walls.clear();
    for (const auto& r : v.dilation_reports)
      if (r.dilated) v.dilated_walls.push_back(r.wall);
    v.finite_dimensional = v.dilated_walls.empty();
    v.primitive_report = is_primitive_set(v.final_set);
    v.fortified_report = is_fortified(g, v.final_set);
    v.certificate.emplace_back(
        "non-primitive curves were replaced by parallel primitive copies",
        "the rewrite preserves balance, fortification and non-dilation");
  }

  v.primitive = v.primitive_report.primitive;
  v.fortified = v.fortified_report.fortified;
  v.locally_finite_claim = v.fortified;

  v.certificate.emplace_back("balance holds across every edge",
                             "equitable set definition");
  if (v.finite_dimensional)
    v.certificate.emplace_back("every cycle weight of every wall equals 1",
                               "all walls non-dilated <=> dual cube complex "
                               "finite dimensional");
  else
    v.certificate.emplace_back("some wall carries a cycle weight different from 1",
                               "a dilated wall <=> dual cube complex infinite "
                               "dimensional");
  if (v.fortified)
    v.certificate.emplace_back(
        "every edge has curves parallel to both attaching maps",
        "fortified walls <=> locally finite dual cube complex");
  else
    v.certificate.emplace_back(
        "some edge side has no curve parallel to its attaching map",
        "non-fortified walls <=> dual cube complex not locally finite");

  if (v.primitive && v.fortified && v.finite_dimensional) {
    v.virtually_special = VSpecial::yes;
    v.certificate.emplace_back(
        "walls are primitive, fortified and non-dilated",
        "such a wall system certifies a virtually special group; the "
        "finite-index passage is guaranteed but not constructed here");
  } else if (!v.fortified && assert_wallspace_exhaustive) {
    v.virtually_special = VSpecial::no_not_locally_finite;
    v.certificate.emplace_back(
        "the asserted-exhaustive wallspace has a non-locally-finite dual",
        "no locally finite free cubulation <=> not virtually special");
  } else {
    v.virtually_special = VSpecial::unknown;
    if (!v.fortified)
      v.certificate.emplace_back(
          "this wallspace's dual is not locally finite; other wallspaces may "
          "still cubulate the group locally finitely",
          "a single non-fortified set does not decide the group-level verdict");
    if (!v.finite_dimensional)
      v.certificate.emplace_back(
          "this wallspace's dual is infinite dimensional",
          "a single dilated set does not decide the group-level verdict");
  }
  return v;
}

ThreeDimCertificate certify_three_dim(const TubularGraph& g, const CoverOptions& opt) {
  ThreeDimCertificate cert;
  cert.construction = three_dim_equitable(g);
  cert.verdict = classify(g, cert.construction.set, cert.construction.pairing);

  WallSet ws = build_walls(g, cert.construction.set, cert.construction.pairing);
  cert.dimension_estimate =
      dimension_estimate(g, cert.construction.set, cert.construction.pairing, ws, opt);
  if (cert.dimension_estimate > 3)
    fail(ErrorCode::DimensionExceeded,
         "ball-restricted dual dimension " + std::to_string(cert.dimension_estimate) +
             " exceeds 3 (construction bug)");

  cert.verdict.certificate.emplace_back(
      "every vertex carries exactly two curve classes; ball dual dimension " +
          std::to_string(cert.dimension_estimate) + " <= 3",
      "two-generator homology construction bounds the dual dimension by 3");
  return cert;
}

}  // namespace tubular
