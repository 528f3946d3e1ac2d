#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "diam/exact.hpp"
#include "diam/generate.hpp"

using namespace diam;

namespace {

RoundedSet lattice_set(std::size_t d, const std::vector<std::vector<std::int64_t>>& pts) {
  RoundedSet r(GridSpec{Point(d, 0.0), 1.0, GridMode::LatticePoint}, pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) r.push_back(pts[i], i, 1);
  return r;
}

}  // namespace

TEST_CASE("brute_force_diameter examples") {
  const FarthestPair a = brute_force_diameter(PointSet::from_points({{0, 0}, {3, 4}}));
  CHECK(a.dist_sq == 25.0);
  CHECK(a.i == 0);
  CHECK(a.j == 1);

  const FarthestPair sq = brute_force_diameter(PointSet::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(sq.dist_sq == 2.0);
  CHECK(sq.i == 0);
  CHECK(sq.j == 3);

  const FarthestPair one = brute_force_diameter(PointSet::from_points({{2, 2}}));
  CHECK(one.dist_sq == 0.0);
  CHECK(one.i == 0);
  CHECK(one.j == 0);

  CHECK_THROWS_AS(brute_force_diameter(PointSet()), UsageError);
}

TEST_CASE("brute_force_diameter matches a naive double loop bit for bit") {
  const PointSet s = oracle::uniform_cube(500, 5, -1.0, 1.0, 500);
  const FarthestPair got = brute_force_diameter(s);
  const oracle::Farthest want = oracle::naive_diameter(s);
  CHECK(got.dist_sq == want.dist_sq);
  CHECK(got.i == want.i);
  CHECK(got.j == want.j);
}

TEST_CASE("brute_force_diameter tie-breaks to the lowest pair") {
  // A regular grid has many diametrical ties.
  const PointSet s = generate(GeneratorKind::GridAligned, 400, 2, 1);
  const FarthestPair got = brute_force_diameter(s);
  const oracle::Farthest want = oracle::naive_diameter(s);
  CHECK(got.dist_sq == want.dist_sq);
  CHECK(got.i == want.i);
  CHECK(got.j == want.j);

  const PointSet same = PointSet::from_points({{1, 1}, {1, 1}, {1, 1}});
  const FarthestPair z = brute_force_diameter(same);
  CHECK(z.dist_sq == 0.0);
  CHECK(z.i == 0);
  CHECK(z.j == 1);
}

TEST_CASE("brute_force_diameter is invariant under permutation and duplication") {
  const PointSet s = generate(GeneratorKind::GaussianClusters, 300, 4, 9);
  const double d0 = brute_force_diameter(s).dist_sq;
  std::vector<std::size_t> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(4));
  std::vector<double> c;
  for (std::size_t p : perm) c.insert(c.end(), s[p].begin(), s[p].end());
  for (std::size_t p = 0; p < 50; ++p) c.insert(c.end(), s[p * 3].begin(), s[p * 3].end());
  const PointSet t(4, std::move(c));
  const FarthestPair w = brute_force_diameter(t);
  CHECK(w.dist_sq == d0);
  CHECK(distance_sq(t, w.i, w.j) == w.dist_sq);
}

TEST_CASE("brute_force_diameter over a subset reports parent indices") {
  const PointSet s = PointSet::from_points({{0}, {10}, {1}, {4}, {-3}});
  const std::vector<std::size_t> sub{0, 2, 3};
  const FarthestPair f = brute_force_diameter(s, sub);
  CHECK(f.dist_sq == 16.0);
  CHECK(f.i == 0);
  CHECK(f.j == 3);
  const std::vector<std::size_t> single{4};
  const FarthestPair g = brute_force_diameter(s, single);
  CHECK(g.dist_sq == 0.0);
  CHECK(g.i == 4);
  CHECK(g.j == 4);
  CHECK_THROWS_AS(brute_force_diameter(s, std::span<const std::size_t>{}), UsageError);
}

TEST_CASE("diametrical_pairs examples") {
  const DiametricalPairList two = diametrical_pairs(lattice_set(2, {{0, 0}, {3, 4}}));
  CHECK(two.dist_sq_lattice == 25);
  CHECK(two.pairs == std::vector<IndexPair>{{0, 1}});
  CHECK_FALSE(two.truncated);

  const DiametricalPairList square = diametrical_pairs(lattice_set(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(square.dist_sq_lattice == 2);
  CHECK(square.pairs == std::vector<IndexPair>{{0, 3}, {1, 2}});

  const DiametricalPairList one = diametrical_pairs(lattice_set(3, {{1, 2, 3}}));
  CHECK(one.dist_sq_lattice == 0);
  CHECK(one.pairs.size() == 1);

  CHECK_THROWS_AS(diametrical_pairs(RoundedSet(GridSpec{{0.0}, 1.0, GridMode::LatticePoint}, 0)), UsageError);
  CHECK_THROWS_AS(diametrical_pairs(lattice_set(1, {{0}, {1}}), 0), UsageError);
}

TEST_CASE("diametrical_pairs on a cube's corners and the cap") {
  std::vector<std::vector<std::int64_t>> corners;
  for (int m = 0; m < 16; ++m) corners.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1});
  const DiametricalPairList all = diametrical_pairs(lattice_set(4, corners));
  CHECK(all.dist_sq_lattice == 4);
  CHECK(all.pairs.size() == 8);
  CHECK_FALSE(all.truncated);
  for (const auto& [i, j] : all.pairs) CHECK(i < j);
  CHECK(std::is_sorted(all.pairs.begin(), all.pairs.end()));

  const DiametricalPairList capped = diametrical_pairs(lattice_set(4, corners), 3);
  CHECK(capped.truncated);
  CHECK(capped.pairs.size() == 3);
  CHECK(std::equal(capped.pairs.begin(), capped.pairs.end(), all.pairs.begin()));
}

TEST_CASE("diametrical_pairs matches independent enumeration") {
  for (auto kind : oracle::kAllKinds) {
    const RoundedSet r = oracle::random_rounded(kind, 6000, 3, 0.03, 55);
    const RoundedSet sub = r.subset([&] {
      std::vector<std::size_t> idx(std::min<std::size_t>(r.size(), 1500));
      std::iota(idx.begin(), idx.end(), 0);
      return idx;
    }());
    const DiametricalPairList got = diametrical_pairs(sub);
    const oracle::LatticePairs want = oracle::naive_lattice_pairs(sub);
    CHECK(got.dist_sq_lattice == want.dist_sq);
    CHECK(got.pairs == want.pairs);
    for (const auto& [i, j] : got.pairs)
      CHECK(lattice_dist_sq(sub.lattice(i), sub.lattice(j)) == got.dist_sq_lattice);
  }
}

TEST_CASE("diametrical_pairs is stable under permutation up to lattice tuples") {
  const RoundedSet r = lattice_set(2, {{0, 0}, {4, 0}, {0, 4}, {4, 4}, {2, 2}, {1, 3}});
  const RoundedSet p = r.subset(std::vector<std::size_t>{5, 3, 1, 4, 0, 2});
  auto tuples = [](const RoundedSet& s, const DiametricalPairList& l) {
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> out;
    for (const auto& [i, j] : l.pairs) {
      std::vector<std::int64_t> a(s.lattice(i).begin(), s.lattice(i).end());
      std::vector<std::int64_t> b(s.lattice(j).begin(), s.lattice(j).end());
      if (b < a) std::swap(a, b);
      out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto a = diametrical_pairs(r), b = diametrical_pairs(p);
  CHECK(a.dist_sq_lattice == b.dist_sq_lattice);
  CHECK(tuples(r, a) == tuples(p, b));
}

TEST_CASE("diametrical_pairs over a subset reports parent indices") {
  const RoundedSet r = lattice_set(1, {{0}, {9}, {2}, {5}, {-1}});
  const std::vector<std::size_t> sub{4, 2, 3};
  const DiametricalPairList l = diametrical_pairs(r, sub);
  CHECK(l.dist_sq_lattice == 36);
  CHECK(l.pairs == std::vector<IndexPair>{{3, 4}});
}
