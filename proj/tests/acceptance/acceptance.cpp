// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any gating criterion fails; the scaling check (8) is reported only.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "diam/directional.hpp"
#include "diam/exact.hpp"
#include "diam/generate.hpp"
#include "diam/grid.hpp"
#include "diam/harness.hpp"
#include "diam/pipeline.hpp"

using namespace diam;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;  // first few offending cases

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string describe(GeneratorKind kind, std::size_t n, std::size_t d, std::uint64_t seed) {
  return fmt("%s n=%zu d=%zu seed=%llu", std::string(generator_name(kind)).c_str(), n, d,
             static_cast<unsigned long long>(seed));
}

struct Instance {
  GeneratorKind kind;
  std::size_t n;
  std::size_t d;
  std::uint64_t seed;
  PointSet points;
  double oracle_sq = 0.0;
};

// Shared instance suite for criteria 2, 4 and 5: every generator, d = 2..8,
// a mid-size and a two-point instance per (generator, d) and 5000-point
// instances for even d.
std::vector<Instance> build_suite() {
  std::vector<Instance> out;
  std::uint64_t seed = 1000;
  for (auto kind : oracle::kAllKinds) {
    for (std::size_t d = 2; d <= 8; ++d) {
      std::vector<std::size_t> sizes{2, 1500};
      if (d % 2 == 0) sizes.push_back(5000);
      for (std::size_t n : sizes) {
        Instance in{kind, n, d, ++seed, generate(kind, n, d, seed), 0.0};
        in.oracle_sq = oracle::naive_diameter(in.points).dist_sq;
        out.push_back(std::move(in));
      }
    }
  }
  return out;
}

// 1. exact vs. an independent double loop on 200 random instances.
Outcome oracle_equivalence() {
  Outcome o;
  std::size_t count = 0;
  const auto start = Clock::now();
  for (std::size_t t = 0; t < 200; ++t) {
    const GeneratorKind kind = oracle::kAllKinds[t % 5];
    const std::size_t d = 2 + (t / 5) % 5;
    const std::size_t n = 2 + (t * 97) % 511;
    const PointSet s = generate(kind, n, d, 7000 + t);
    const FarthestPair got = brute_force_diameter(s);
    const oracle::Farthest want = oracle::naive_diameter(s);
    if (got.dist_sq != want.dist_sq || got.i != want.i || got.j != want.j)
      o.fail(describe(kind, n, d, 7000 + t) +
             fmt(": got (%.17g, %zu, %zu) want (%.17g, %zu, %zu)", got.dist_sq, got.i, got.j, want.dist_sq,
                 want.i, want.j));
    ++count;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 30.0) o.fail(fmt("runtime %.1f s exceeds 30 s", secs));
  o.detail = fmt("%zu instances, %.2f s", count, secs);
  return o;
}

// 2. every lower-bound method stays at or below the oracle.
Outcome lower_bounds(const std::vector<Instance>& suite) {
  Outcome o;
  std::size_t checks = 0;
  auto check = [&](const Instance& in, const DiameterEstimate& e, const char* label) {
    ++checks;
    if (e.value_sq != distance_sq(in.points, e.i, e.j))
      o.fail(describe(in.kind, in.n, in.d, in.seed) + ": " + label + " witness does not reproduce its value");
    if (!(e.value_sq <= in.oracle_sq))
      o.fail(describe(in.kind, in.n, in.d, in.seed) + ": " + label + fmt(" %.17g > oracle %.17g", e.value_sq, in.oracle_sq));
  };
  for (const Instance& in : suite) {
    const DiameterEstimate two = two_approx_baseline(in.points);
    check(in, two, "two-approx");
    ++checks;
    if (!(2.0 * two.value >= std::sqrt(in.oracle_sq)))
      o.fail(describe(in.kind, in.n, in.d, in.seed) + ": two-approx below D/2");
    for (double eps : {1.0, 0.5, 0.25, 0.1})
      check(in, approximate_diameter(in.points, eps).estimate, fmt("paper eps=%g", eps).c_str());
    if (in.d <= 5) {
      for (double eps : {0.5, 0.1}) check(in, agarwal_diameter(in.points, eps), fmt("agarwal eps=%g", eps).c_str());
    } else {
      check(in, agarwal_diameter(in.points, 0.5), "agarwal eps=0.5");
    }
    if (in.d <= 6) {
      for (double eps : {0.25, 0.1}) check(in, chan_diameter(in.points, eps), fmt("chan eps=%g", eps).c_str());
    } else {
      check(in, chan_diameter(in.points, 0.5), "chan eps=0.5");
    }
  }
  o.detail = fmt("%zu instances, %zu estimate checks", suite.size(), checks);
  return o;
}

// 3. agarwal ratio <= 1 + eps with no tolerance.
Outcome agarwal_guarantee() {
  Outcome o;
  std::size_t runs = 0;
  double worst = 1.0;
  std::uint64_t seed = 3000;
  for (auto kind : oracle::kAllKinds) {
    for (std::size_t d = 2; d <= 5; ++d) {
      for (std::size_t n : {2u, 2000u}) {
        const PointSet s = generate(kind, n, d, ++seed);
        const double dd = std::sqrt(oracle::naive_diameter(s).dist_sq);
        for (double eps : {0.5, 0.1, 0.02}) {
          const DiameterEstimate e = agarwal_diameter(s, eps);
          const double ratio = dd / e.value;
          worst = std::max(worst, ratio);
          ++runs;
          if (!(ratio <= 1.0 + eps) || e.value > dd)
            o.fail(describe(kind, n, d, seed) + fmt(" eps=%g: ratio %.17g", eps, ratio));
        }
      }
    }
  }
  o.detail = fmt("%zu runs, worst ratio %.6f", runs, worst);
  return o;
}

// 4. pipeline ratio <= 1 + 4 eps; two-point instances exact.
// 5. count bounds from the same runs.
void pipeline_checks(const std::vector<Instance>& suite, Outcome& guarantee, Outcome& counts) {
  std::size_t runs = 0;
  double worst_excess = 0.0;  // max (ratio - 1) / eps
  std::size_t over_s2 = 0, over_bp = 0, over_b = 0;
  double worst_s2 = 0.0, worst_bp = 0.0, worst_b = 0.0;  // max count / bound
  for (const Instance& in : suite) {
    const double dd = std::sqrt(in.oracle_sq);
    for (double eps : {1.0, 0.5, 0.25, 0.1}) {
      const PipelineResult r = approximate_diameter(in.points, eps);
      ++runs;
      const double ratio = dd / r.estimate.value;
      worst_excess = std::max(worst_excess, (ratio - 1.0) / eps);
      const std::string where = describe(in.kind, in.n, in.d, in.seed) + fmt(" eps=%g", eps);
      if (!(ratio <= 1.0 + 4.0 * eps)) guarantee.fail(where + fmt(": ratio %.6f", ratio));
      if (in.n == 2 && ratio != 1.0) guarantee.fail(where + fmt(": two-point ratio %.17g", ratio));

      const PhaseStats& st = r.stats;
      if (in.n == 2 || st.n_s_hat == 0) continue;  // short-circuited runs have no grid sets
      worst_s2 = std::max(worst_s2, double(st.n_s_hat2) / st.bound_s_hat2);
      worst_bp = std::max(worst_bp, double(std::max(st.max_b1_prime, st.max_b2_prime)) / st.bound_b_prime);
      worst_b = std::max(worst_b, double(std::max(st.max_b1, st.max_b2)) / st.bound_b);
      if (!st.s_hat2_within_bound()) {
        ++over_s2;
        counts.fail(where + fmt(": |S''| = %zu > %.2f", st.n_s_hat2, st.bound_s_hat2));
      }
      if (!st.b_prime_within_bound()) {
        ++over_bp;
        counts.fail(where + fmt(": |B'| = %zu > %.2f", std::max(st.max_b1_prime, st.max_b2_prime), st.bound_b_prime));
      }
      if (!st.b_within_bound()) {
        ++over_b;
        counts.fail(where + fmt(": |B| = %zu > %.2f", std::max(st.max_b1, st.max_b2), st.bound_b));
      }
    }
  }
  guarantee.detail = fmt("%zu runs, worst (ratio-1)/eps %.4f (limit 4)", runs, worst_excess);
  std::size_t grid_runs = 0;
  for (const Instance& in : suite) grid_runs += in.n > 2 ? 4 : 0;
  counts.detail = fmt("%zu runs; peak count/bound S'' %.3f, B' %.3f, B %.3f; violations %zu/%zu/%zu", grid_runs,
                      worst_s2, worst_bp, worst_b, over_s2, over_bp, over_b);
}

// 6. pruning preserves the lattice diameter exactly.
Outcome pruning_safety() {
  Outcome o;
  std::size_t total_points = 0, max_points = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    const GeneratorKind kind = oracle::kAllKinds[t % 5];
    const std::size_t d = 2 + (t / 5) % 5;
    const double frac = 0.01 + 0.03 * static_cast<double>((t / 25) % 4);
    RoundedSet r = oracle::random_rounded(kind, 4000, d, frac, 9000 + t);
    if (r.size() > 3000) {
      std::vector<std::size_t> first(3000);
      for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
      r = r.subset(first);
    }
    total_points += r.size();
    max_points = std::max(max_points, r.size());
    const std::size_t axis = t % d == 0 ? d - 1 : t % d;
    const RoundedSet p = prune_interior(r, axis);
    const std::int64_t before = oracle::naive_lattice_pairs(r).dist_sq;
    const std::int64_t after = oracle::naive_lattice_pairs(p).dist_sq;
    if (before != after)
      o.fail(describe(kind, 4000, d, 9000 + t) + fmt(": %lld before, %lld after pruning", (long long)before, (long long)after));
  }
  o.detail = fmt("100 sets, up to %zu lattice points, %zu total", max_points, total_points);
  return o;
}

// 7. recursion accuracy on rounded sets.
Outcome chan_accuracy() {
  Outcome o;
  std::size_t runs = 0;
  double worst_excess = 0.0;
  std::uint64_t seed = 11000;
  for (auto kind : oracle::kAllKinds) {
    for (std::size_t d = 2; d <= 6; ++d) {
      const PointSet s = generate(kind, 4096, d, ++seed);
      const BoundingBox b = bounding_box(s);
      for (double eps : {0.25, 0.1}) {
        const GridSizes g = make_grid_sizes(largest_side(b), eps, d);
        const RoundedSet r = round_to_cell_centers(s, {b.lo, g.xi, GridMode::CellCenter});
        std::vector<double> reps_coords;
        for (std::size_t i = 0; i < r.size(); ++i)
          reps_coords.insert(reps_coords.end(), s[r.rep(i)].begin(), s[r.rep(i)].end());
        const double dd = std::sqrt(oracle::naive_diameter(PointSet(d, std::move(reps_coords))).dist_sq);
        const std::vector<double> pos = r.positions();
        const ChanResult c = chan_recursive_diameter(s, pos, r.reps(), d, eps);
        const double est = std::sqrt(c.dist_sq);
        ++runs;
        worst_excess = std::max(worst_excess, (dd / est - 1.0) / eps);
        if (!(est <= dd) || !(dd <= (1.0 + 3.0 * eps) * est))
          o.fail(describe(kind, 4096, d, seed) + fmt(" eps=%g: estimate %.9g oracle %.9g", eps, est, dd));
      }
    }
  }
  o.detail = fmt("%zu runs, worst (ratio-1)/eps %.4f (limit 3)", runs, worst_excess);
  return o;
}

// 8. rounding front end: doubling n at most 2.5x the median time.
Outcome scaling() {
  Outcome o;
  auto median_ms = [](std::size_t n) {
    const PointSet s = generate(GeneratorKind::UniformBall, n, 6, 77);
    std::vector<double> ms;
    for (int rep = 0; rep < 5; ++rep) {
      PhaseStats st;
      build_hierarchy(s, 0.1, &st);
      ms.push_back(st.ms_rounding());
    }
    std::sort(ms.begin(), ms.end());
    return ms[2];
  };
  const double a = median_ms(100000);
  const double b = median_ms(200000);
  const double ratio = b / a;
  if (!(ratio <= 2.5)) o.fail(fmt("ratio %.2f", ratio));
  o.detail = fmt("median rounding %.1f ms at n=1e5, %.1f ms at n=2e5, ratio %.2f (limit 2.5)", a, b, ratio);
  return o;
}

// 9. identical config and seed give byte-identical masked reports, across
// thread counts.
Outcome determinism() {
  Outcome o;
  ExperimentConfig c;
  c.methods = {Method::Exact, Method::TwoApprox, Method::Agarwal, Method::Chan, Method::Paper};
  c.eps = {0.5, 0.1};
  c.oracle = true;
  std::size_t comparisons = 0;
  for (auto kind : oracle::kAllKinds) {
    c.generator = GeneratorSpec{kind, 2000, 4, 42};
    std::string reference;
    for (int threads : {1, 4, 4, 2}) {
      omp_set_num_threads(threads);
      const std::string text = mask_timing(run(c)).dump(2);
      if (reference.empty()) {
        reference = text;
      } else {
        ++comparisons;
        if (text != reference)
          o.fail(describe(kind, 2000, 4, 42) + fmt(": report differs with %d threads", threads));
      }
    }
  }
  omp_set_num_threads(omp_get_num_procs());
  o.detail = fmt("%zu report comparisons over thread counts 1, 2, 4", comparisons);
  return o;
}

bool report(int id, const char* name, const Outcome& o, bool gating = true) {
  const char* status = o.pass ? "PASS" : (gating ? "FAIL" : "FAIL (soft, not gating)");
  std::printf("[%s] criterion %d: %s: %s\n", status, id, name, o.detail.c_str());
  for (const std::string& f : o.failures) std::printf("         %s\n", f.c_str());
  std::fflush(stdout);
  return o.pass || !gating;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "exact matches naive double loop", oracle_equivalence());

  const auto t = Clock::now();
  const std::vector<Instance> suite = build_suite();
  std::printf("         suite: %zu instances, oracles in %.1f s\n", suite.size(),
              std::chrono::duration<double>(Clock::now() - t).count());

  ok &= report(2, "lower-bound certificates", lower_bounds(suite));
  ok &= report(3, "direction-net ratio <= 1+eps", agarwal_guarantee());
  Outcome guarantee, counts;
  pipeline_checks(suite, guarantee, counts);
  ok &= report(4, "pipeline ratio <= 1+4eps", guarantee);
  ok &= report(5, "grid count bounds", counts);
  ok &= report(6, "pruning preserves lattice diameter", pruning_safety());
  ok &= report(7, "recursion ratio <= 1+3eps", chan_accuracy());
  ok &= report(8, "linear rounding front end", scaling(), false);
  ok &= report(9, "deterministic reports", determinism());
  std::printf("%s\n", ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return ok ? 0 : 1;
}
