#include "tubular/equitable.hpp"

#include <algorithm>

namespace tubular {

VerifyReport verify_equitable(const TubularGraph& g, const EquitableSet& s) {
  VerifyReport r;

  for (const auto& e : g.edges) {
    Int minus_total = 0, plus_total = 0;
    for (const auto& c : s.at(e.minus)) minus_total += intersection_number(e.phi_minus, c.vec);
    for (const auto& c : s.at(e.plus)) plus_total += intersection_number(e.phi_plus, c.vec);
    r.balance.push_back({e.id, minus_total, plus_total, minus_total == plus_total});
  }

  for (const auto& v : g.vertices) {
    const auto& cs = s.at(v);
    bool ok = false;
    for (std::size_t i = 0; i < cs.size() && !ok; ++i)
      for (std::size_t j = i + 1; j < cs.size() && !ok; ++j)
        if (det(cs[i].vec, cs[j].vec) != 0) ok = true;
    r.finite_index.push_back({v, ok});
  }

  for (const auto& v : g.vertices) {
    const auto& cs = s.at(v);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i].vec.is_zero()) {
        r.disjointness.push_back({v, static_cast<int>(i), -1, "ZeroVector"});
        continue;
      }
      if (!(cs[i].offset > 0 && cs[i].offset < 1))
        r.disjointness.push_back({v, static_cast<int>(i), -1, "OffsetOutOfRange"});
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        if (cs[j].vec.is_zero()) continue;
        if (parallel(cs[i].vec, cs[j].vec) && cs[i].offset == cs[j].offset)
          r.disjointness.push_back(
              {v, static_cast<int>(i), static_cast<int>(j), "ParallelSameOffset"});
      }
    }
  }

  r.ok = r.disjointness.empty() &&
         std::all_of(r.balance.begin(), r.balance.end(), [](auto& b) { return b.ok; }) &&
         std::all_of(r.finite_index.begin(), r.finite_index.end(), [](auto& f) { return f.ok; });
  return r;
}

FortifiedReport is_fortified(const TubularGraph& g, const EquitableSet& s) {
  FortifiedReport r;
  r.fortified = true;
  for (const auto& e : g.edges) {
    FortifiedEdge fe{e.id, std::nullopt, std::nullopt};
    const auto& minus_curves = s.at(e.minus);
    for (std::size_t i = 0; i < minus_curves.size(); ++i)
      if (parallel(e.phi_minus, minus_curves[i].vec)) {
        fe.minus_witness = static_cast<int>(i);
        break;
      }
    const auto& plus_curves = s.at(e.plus);
    for (std::size_t i = 0; i < plus_curves.size(); ++i)
      if (parallel(e.phi_plus, plus_curves[i].vec)) {
        fe.plus_witness = static_cast<int>(i);
        break;
      }
    if (!fe.minus_witness || !fe.plus_witness) r.fortified = false;
    r.edges.push_back(fe);
  }
  return r;
}

PrimitiveReport is_primitive_set(const EquitableSet& s) {
  PrimitiveReport r;
  for (const auto& [v, cs] : s.curves)
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (!cs[i].vec.is_zero() && !is_primitive_vec(cs[i].vec))
        r.offenders.push_back({v, static_cast<int>(i)});
  r.primitive = r.offenders.empty();
  return r;
}

std::vector<CurveSpec> with_default_offsets(const std::vector<IntVec2>& vecs) {
  // Count parallel classes in list order, then place the k-th member of an
  // n-member class at k/(n+1).
  std::vector<IntVec2> dirs;
  dirs.reserve(vecs.size());
  for (const auto& v : vecs) dirs.push_back(normalize_direction(v));

  std::vector<CurveSpec> out;
  out.reserve(vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    int class_size = 0, rank = 0;
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      if (dirs[j] == dirs[i]) {
        ++class_size;
        if (j < i) ++rank;
      }
    }
    out.push_back({vecs[i], Rat(rank + 1, class_size + 1)});
  }
  return out;
}

}  // namespace tubular
