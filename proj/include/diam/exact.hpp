#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "diam/geometry.hpp"
#include "diam/grid.hpp"

namespace diam {

inline constexpr std::size_t kDefaultPairCap = 4096;

/// A farthest pair with its exact squared distance. i <= j.
struct FarthestPair {
  double dist_sq = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// True when `a` should win a max-reduction against `b`: larger distance,
/// then the lexicographically smaller pair. A total order, so reductions are
/// schedule independent.
inline bool better(const FarthestPair& a, const FarthestPair& b) {
  if (a.dist_sq != b.dist_sq) return a.dist_sq > b.dist_sq;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

/// Exact diameter by checking every unordered pair. n == 1 gives (0, 0, 0).
FarthestPair brute_force_diameter(const PointSet& s);

/// Same, restricted to the points named by `subset`. The returned indices are
/// indices into `s`, ordered so that i <= j.
FarthestPair brute_force_diameter(const PointSet& s, std::span<const std::size_t> subset);

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Every pair attaining the largest squared lattice distance, as
/// lexicographically sorted index pairs with first < second.
struct DiametricalPairList {
  std::int64_t dist_sq_lattice = 0;
  std::vector<IndexPair> pairs;
  bool truncated = false;
};

std::int64_t lattice_dist_sq(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

DiametricalPairList diametrical_pairs(const RoundedSet& r, std::size_t cap = kDefaultPairCap);

/// Diametrical pairs of the subset of `r` named by `subset`; pair entries are
/// indices into `r`, so lists from different subsets can be merged.
DiametricalPairList diametrical_pairs(const RoundedSet& r, std::span<const std::size_t> subset,
                                      std::size_t cap = kDefaultPairCap);

}  // namespace diam
