#include <atomic>
#include <algorithm>

#include "tubular/equitable.hpp"
#include "tubular/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tubular {

namespace {

// Nonzero vectors with |x|,|y| <= bound, ordered by (max coordinate, lex).
std::vector<IntVec2> vector_pool(int bound) {
  std::vector<IntVec2> pool;
  for (long long x = -bound; x <= bound; ++x)
    for (long long y = -bound; y <= bound; ++y)
      if (x != 0 || y != 0) pool.push_back({Int(x), Int(y)});
  std::stable_sort(pool.begin(), pool.end(), [](const IntVec2& a, const IntVec2& b) {
    Int ma = std::max(abs(a.x), abs(a.y));
    Int mb = std::max(abs(b.x), abs(b.y));
    if (ma != mb) return ma < mb;
    return a < b;
  });
  return pool;
}

// Multisets as non-decreasing index tuples, ordered by (size, lex). Singleton
// sets are omitted: they can never generate a finite index subgroup, so they
// never contribute a first valid hit.
std::vector<std::vector<int>> multiset_pool(int pool_size, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < pool_size; ++i) {
      cur.push_back(i);
      self(self, i, remaining - 1);
      cur.pop_back();
    }
  };
  for (int size = 2; size <= max_size; ++size) rec(rec, 0, size);
  return out;
}

struct SearchSpace {
  std::vector<IntVec2> pool;
  std::vector<std::vector<int>> multisets;

  EquitableSet materialize(const TubularGraph& g, const std::vector<int>& choice) const {
    EquitableSet s;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      std::vector<IntVec2> vecs;
      for (int idx : multisets[choice[v]]) vecs.push_back(pool[idx]);
      s.curves[g.vertices[v]] = with_default_offsets(vecs);
    }
    return s;
  }
};

// Depth-first over vertices for one fixed total size; edges fully inside the
// assigned prefix are balance-checked as a prune.
bool complete(const TubularGraph& g, const SearchSpace& space, std::vector<int>& choice,
              std::size_t vertex, int remaining, std::uint64_t& tried,
              std::uint64_t cap, EquitableSet& out) {
  const std::size_t nv = g.vertices.size();
  if (vertex == nv) {
    if (remaining != 0) return false;
    ++tried;
    if (tried > cap) fail(ErrorCode::ResourceLimit, "search candidate cap exceeded");
    EquitableSet s = space.materialize(g, choice);
    if (verify_equitable(g, s).ok) {
      out = std::move(s);
      return true;
    }
    return false;
  }
  const int min_left = 2 * static_cast<int>(nv - vertex - 1);
  for (std::size_t m = 0; m < space.multisets.size(); ++m) {
    int size = static_cast<int>(space.multisets[m].size());
    if (size > remaining - min_left) break;  // pool is size-sorted
    choice[vertex] = static_cast<int>(m);

    bool prefix_ok = true;
    for (const auto& e : g.edges) {
      int a = g.vertex_index(e.minus), b = g.vertex_index(e.plus);
      if (a > static_cast<int>(vertex) || b > static_cast<int>(vertex)) continue;
      Int minus_total = 0, plus_total = 0;
      for (int idx : space.multisets[choice[a]])
        minus_total += intersection_number(e.phi_minus, space.pool[idx]);
      for (int idx : space.multisets[choice[b]])
        plus_total += intersection_number(e.phi_plus, space.pool[idx]);
      if (minus_total != plus_total) {
        prefix_ok = false;
        break;
      }
    }
    if (prefix_ok &&
        complete(g, space, choice, vertex + 1, remaining - size, tried, cap, out))
      return true;
  }
  choice[vertex] = -1;
  return false;
}

}  // namespace

SearchResult search_equitable(const TubularGraph& g, int bound, const SearchCaps& caps,
                              bool parallel) {
  SearchResult res;
  if (bound <= 0) {
    res.note = "no nonzero vectors within bound; absence of a hit at this bound "
               "does not prove no equitable set exists";
    return res;
  }
  SearchSpace space{vector_pool(bound),
                    multiset_pool(static_cast<int>(vector_pool(bound).size()),
                                  caps.max_curves_per_vertex)};
  const std::size_t nv = g.vertices.size();
  const int max_total = caps.max_curves_per_vertex * static_cast<int>(nv);

  for (int total = 2 * static_cast<int>(nv); total <= max_total; ++total) {
    if (!parallel || nv == 0) {
      std::vector<int> choice(nv, -1);
      EquitableSet found;
      if (complete(g, space, choice, 0, total, res.candidates_tried, caps.max_candidates,
                   found)) {
        res.found = std::move(found);
        return res;
      }
      continue;
    }

    // Parallel lane: distribute the first vertex's candidate and take the
    // minimum first-vertex index that completes; ranks below that index are
    // identical to the serial order, so the reduce is deterministic.
    const int m_count = static_cast<int>(space.multisets.size());
    std::atomic<int> best_first{m_count};
    std::vector<std::optional<EquitableSet>> hits(m_count);
    std::atomic<std::uint64_t> tried{0};
    std::atomic<bool> limit_hit{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int m0 = 0; m0 < m_count; ++m0) {
      if (m0 > best_first.load()) continue;
      int size0 = static_cast<int>(space.multisets[m0].size());
      if (size0 > total - 2 * static_cast<int>(nv - 1)) continue;
      std::vector<int> choice(nv, -1);
      choice[0] = m0;
      std::uint64_t local_tried = 0;
      EquitableSet found;
      bool ok = false;
      try {
        // Reuse the serial completion from vertex 1 onward.
        std::vector<int> sub(choice);
        ok = complete(g, space, sub, 1, total - size0, local_tried,
                      caps.max_candidates, found);
        if (ok) {
          // Re-check the edges touching vertex 0 (complete() assumed a prefix).
          EquitableSet full = found;
          ok = verify_equitable(g, full).ok;
          if (ok) found = std::move(full);
        }
      } catch (const Error&) {
        limit_hit.store(true);
      }
      tried.fetch_add(local_tried);
      if (ok) {
        hits[m0] = std::move(found);
        int cur = best_first.load();
        while (m0 < cur && !best_first.compare_exchange_weak(cur, m0)) {
        }
      }
    }
    res.candidates_tried += tried.load();
    if (limit_hit.load()) fail(ErrorCode::ResourceLimit, "search candidate cap exceeded");
    if (best_first.load() < m_count) {
      res.found = std::move(hits[best_first.load()]);
      return res;
    }
  }
  res.note = "bound " + std::to_string(bound) +
             " exhausted; this is not a proof that no equitable set exists";
  return res;
}

}  // namespace tubular
