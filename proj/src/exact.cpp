#include "diam/exact.hpp"

#include <algorithm>
#include <numeric>

namespace diam {

namespace {

constexpr std::size_t kParallelPairs = 1u << 14;

FarthestPair make_pair(double dist_sq, std::size_t a, std::size_t b) {
  return a <= b ? FarthestPair{dist_sq, a, b} : FarthestPair{dist_sq, b, a};
}

}  // namespace

FarthestPair brute_force_diameter(const PointSet& s) {
  if (s.empty()) throw UsageError("diameter of an empty point set");
  std::vector<std::size_t> all(s.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return brute_force_diameter(s, all);
}

FarthestPair brute_force_diameter(const PointSet& s, std::span<const std::size_t> subset) {
  if (subset.empty()) throw UsageError("diameter of an empty point set");
  const std::size_t m = subset.size();
  const std::size_t d = s.dim();
  if (m == 1) return make_pair(0.0, subset[0], subset[0]);
  FarthestPair best =
      make_pair(detail::sq_dist(s[subset[0]].data(), s[subset[1]].data(), d), subset[0], subset[1]);

#pragma omp parallel if (m * m / 2 > kParallelPairs)
  {
    FarthestPair local = best;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::size_t a = 0; a < m; ++a) {
      const double* p = s[subset[a]].data();
      for (std::size_t b = a + 1; b < m; ++b) {
        const double dsq = detail::sq_dist(p, s[subset[b]].data(), d);
        if (dsq < local.dist_sq) continue;
        const FarthestPair cand = make_pair(dsq, subset[a], subset[b]);
        if (better(cand, local)) local = cand;
      }
    }
#pragma omp critical(diam_brute_merge)
    if (better(local, best)) best = local;
  }
  return best;
}

std::int64_t lattice_dist_sq(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::int64_t t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

DiametricalPairList diametrical_pairs(const RoundedSet& r, std::size_t cap) {
  std::vector<std::size_t> all(r.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return diametrical_pairs(r, all, cap);
}

DiametricalPairList diametrical_pairs(const RoundedSet& r, std::span<const std::size_t> subset,
                                      std::size_t cap) {
  if (subset.empty()) throw UsageError("diametrical pairs of an empty set");
  if (cap == 0) throw UsageError("pair cap must be at least 1");
  const std::size_t m = subset.size();
  DiametricalPairList out;
  if (m == 1) {
    out.pairs.emplace_back(subset[0], subset[0]);
    return out;
  }
  const bool parallel = m * m / 2 > kParallelPairs;

  std::int64_t best = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best) if (parallel)
  for (std::size_t a = 0; a < m; ++a) {
    const auto la = r.lattice(subset[a]);
    for (std::size_t b = a + 1; b < m; ++b)
      best = std::max(best, lattice_dist_sq(la, r.lattice(subset[b])));
  }
  out.dist_sq_lattice = best;

  std::vector<std::vector<IndexPair>> rows(m);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::size_t a = 0; a < m; ++a) {
    const auto la = r.lattice(subset[a]);
    for (std::size_t b = a + 1; b < m; ++b) {
      if (lattice_dist_sq(la, r.lattice(subset[b])) != best) continue;
      rows[a].emplace_back(std::min(subset[a], subset[b]), std::max(subset[a], subset[b]));
    }
  }
  for (auto& row : rows) out.pairs.insert(out.pairs.end(), row.begin(), row.end());
  std::sort(out.pairs.begin(), out.pairs.end());
  out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
  if (out.pairs.size() > cap) {
    out.pairs.resize(cap);
    out.truncated = true;
  }
  return out;
}

}  // namespace diam
