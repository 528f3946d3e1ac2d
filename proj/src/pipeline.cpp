#include "diam/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <string>

namespace diam {

namespace {

// pow() round-off on the bound formulas; counts are integers.
constexpr double kBoundRoundoff = 1e-12;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct PairOutcome {
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  bool empty_cube = false;
  DiametricalPairList local;  // brute
  ChanResult chan;            // chan
};

void fill_bounds(PhaseStats& st, double eps, std::size_t d) {
  const double dd = static_cast<double>(d);
  const double q = std::pow(eps, 0.25);
  st.bound_s_hat2 = std::pow(2.0 * std::sqrt(dd) / q + 1.0, dd);
  st.bound_b_prime = std::pow(2.0 / q + 1.0, dd);
  st.bound_b = std::pow(2.0 / std::sqrt(eps) + 1.0, dd);
}

bool within(std::size_t count, double bound) {
  return static_cast<double>(count) <= bound * (1.0 + kBoundRoundoff);
}

RoundedSet identity_step(const RoundedSet& r) {
  RoundedSet out(r.spec(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(r.lattice(i), r.rep(i), 1);
  return out;
}

}  // namespace

bool PhaseStats::s_hat2_within_bound() const { return within(n_s_hat2, bound_s_hat2); }
bool PhaseStats::b_prime_within_bound() const {
  return within(max_b1_prime, bound_b_prime) && within(max_b2_prime, bound_b_prime);
}
bool PhaseStats::b_within_bound() const {
  return within(max_b1, bound_b) && within(max_b2, bound_b);
}

GridHierarchy build_hierarchy(const PointSet& s, double eps, PhaseStats* stats) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("eps must lie in (0, 1]");
  if (s.empty()) throw UsageError("diameter of an empty point set");
  PhaseStats scratch;
  PhaseStats& st = stats ? *stats : scratch;
  GridHierarchy h;

  auto t = Clock::now();
  h.box = bounding_box(s);
  h.ell = largest_side(h.box);
  st.ms_bounding_box = ms_since(t);
  if (h.ell == 0.0) throw UsageError("grid hierarchy of a zero-extent point set");
  h.sizes = make_grid_sizes(h.ell, eps, s.dim());

  t = Clock::now();
  h.s_hat = round_to_cell_centers(s, {h.box.lo, h.sizes.xi, GridMode::CellCenter});
  st.ms_round_cells = ms_since(t);

  // With eps == 1 all three cells coincide and the later roundings are the
  // identity: same points, each standing for one parent point.
  t = Clock::now();
  h.s_hat1 = h.sizes.xi1 > h.sizes.xi
                 ? round_to_anchored_lattice(h.s_hat, h.sizes.xi1)
                 : identity_step(h.s_hat);
  st.ms_round_lattice1 = ms_since(t);

  t = Clock::now();
  h.s_hat2 = h.sizes.xi2 > h.sizes.xi1
                 ? round_to_anchored_lattice(h.s_hat1, h.sizes.xi2)
                 : identity_step(h.s_hat1);
  st.ms_round_lattice2 = ms_since(t);

  st.n_input = s.size();
  st.n_s_hat = h.s_hat.size();
  st.n_s_hat1 = h.s_hat1.size();
  st.n_s_hat2 = h.s_hat2.size();
  return h;
}

LevelResult refine_level(const DiametricalPairList& coarse_pairs, const RoundedSet& coarse,
                         const RoundedSet& finer, double side, LevelSolver solver, double eps,
                         const PointSet& original, const PipelineOptions& options) {
  if (coarse_pairs.pairs.empty()) throw UsageError("refinement needs at least one coarse pair");
  if (!(side > 0.0)) throw UsageError("cube side must be positive");
  if (coarse.dim() != finer.dim()) throw UsageError("coarse and finer grids differ in dimension");
  const std::size_t d = finer.dim();
  const std::size_t npairs = coarse_pairs.pairs.size();
  std::vector<PairOutcome> outcomes(npairs);

#pragma omp parallel for schedule(dynamic, 1) if (npairs > 1)
  for (std::size_t q = 0; q < npairs; ++q) {
    PairOutcome& out = outcomes[q];
    const auto [a, b] = coarse_pairs.pairs[q];
    const std::vector<std::size_t> first = points_in_cube(finer, coarse.position(a), side);
    const std::vector<std::size_t> second = points_in_cube(finer, coarse.position(b), side);
    out.first_size = first.size();
    out.second_size = second.size();
    if (first.empty() || second.empty()) {
      out.empty_cube = true;
      continue;
    }
    std::vector<std::size_t> both;
    std::set_union(first.begin(), first.end(), second.begin(), second.end(),
                   std::back_inserter(both));
    const std::vector<std::size_t> kept_local = prune_interior_indices(finer.subset(both), d - 1);
    std::vector<std::size_t> kept(kept_local.size());
    for (std::size_t k = 0; k < kept.size(); ++k) kept[k] = both[kept_local[k]];

    if (solver == LevelSolver::Brute) {
      out.local = diametrical_pairs(finer, kept, options.pair_cap);
    } else {
      std::vector<double> pos(kept.size() * d);
      std::vector<std::size_t> reps(kept.size());
      for (std::size_t k = 0; k < kept.size(); ++k) {
        finer.position_into(kept[k], pos.data() + k * d);
        reps[k] = finer.rep(kept[k]);
      }
      out.chan = chan_recursive_diameter(original, pos, reps, d, eps, options.chan);
    }
  }

  LevelResult result;
  for (std::size_t q = 0; q < npairs; ++q) {
    const PairOutcome& out = outcomes[q];
    if (out.empty_cube)
      throw InternalError("refinement cube around coarse pair " + std::to_string(q) +
                          " contains no finer points");
    result.max_cube_first = std::max(result.max_cube_first, out.first_size);
    result.max_cube_second = std::max(result.max_cube_second, out.second_size);
  }

  const auto branch = [](std::size_t q) { return static_cast<std::uint32_t>(q); };
  if (solver == LevelSolver::Chan) {
    FarthestPair best{-1.0, 0, 0};
    for (std::size_t q = 0; q < npairs; ++q) {
      const ChanResult& c = outcomes[q].chan;
      result.candidates.push_back({c.pair.i, c.pair.j, CandidateSource::Level0, branch(q)});
      const FarthestPair fp{c.dist_sq, c.pair.i, c.pair.j};
      if (better(fp, best)) best = fp;
    }
    result.best_sq = best.dist_sq;
    return result;
  }

  std::int64_t top = -1;
  for (const auto& out : outcomes) top = std::max(top, out.local.dist_sq_lattice);
  DiametricalPairList& merged = result.pairs;
  merged.dist_sq_lattice = top;
  for (std::size_t q = 0; q < npairs; ++q) {
    const DiametricalPairList& local = outcomes[q].local;
    const auto [wi, wj] = local.pairs.front();
    result.candidates.push_back({finer.rep(wi), finer.rep(wj), CandidateSource::Level1, branch(q)});
    if (local.dist_sq_lattice != top) continue;
    merged.truncated = merged.truncated || local.truncated;
    merged.pairs.insert(merged.pairs.end(), local.pairs.begin(), local.pairs.end());
  }
  std::sort(merged.pairs.begin(), merged.pairs.end());
  merged.pairs.erase(std::unique(merged.pairs.begin(), merged.pairs.end()), merged.pairs.end());
  if (merged.pairs.size() > options.pair_cap) {
    merged.pairs.resize(options.pair_cap);
    merged.truncated = true;
  }
  for (const auto& [pi, pj] : merged.pairs)
    result.candidates.push_back({finer.rep(pi), finer.rep(pj), CandidateSource::Level1, 0});
  result.best_sq = static_cast<double>(top) * finer.spec().cell * finer.spec().cell;
  return result;
}

PipelineResult approximate_diameter(const PointSet& s, double eps, const PipelineOptions& options) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("eps must lie in (0, 1]");
  if (s.empty()) throw UsageError("diameter of an empty point set");
  if (options.pair_cap == 0) throw UsageError("pair cap must be at least 1");
  const auto start = Clock::now();
  PipelineResult res;
  PhaseStats& st = res.stats;
  st.n_input = s.size();
  fill_bounds(st, eps, s.dim());

  if (s.size() == 1) {
    res.estimate = make_estimate(s, 0, 0, Method::Paper, eps);
    st.ms_total = ms_since(start);
    return res;
  }
  if (largest_side(bounding_box(s)) == 0.0) {
    res.estimate = make_estimate(s, 0, 1, Method::Paper, eps);
    st.ms_total = ms_since(start);
    return res;
  }

  const std::size_t d = s.dim();
  const GridHierarchy h = build_hierarchy(s, eps, &st);
  std::vector<CandidatePair> candidates;

  auto t = Clock::now();
  const RoundedSet top = prune_interior(h.s_hat2, d - 1);
  st.n_s_hat2_pruned = top.size();
  const DiametricalPairList level2 = diametrical_pairs(top, options.pair_cap);
  st.pairs_level2 = level2.pairs.size();
  st.truncated_level2 = level2.truncated;
  for (const auto& [a, b] : level2.pairs)
    candidates.push_back({top.rep(a), top.rep(b), CandidateSource::Level2, 0});
  st.ms_level2 = ms_since(t);

  t = Clock::now();
  const LevelResult level1 = refine_level(level2, top, h.s_hat1, 2.0 * h.sizes.xi2,
                                          LevelSolver::Brute, eps, s, options);
  st.pairs_level1 = level1.pairs.pairs.size();
  st.truncated_level1 = level1.pairs.truncated;
  st.max_b1_prime = level1.max_cube_first;
  st.max_b2_prime = level1.max_cube_second;
  candidates.insert(candidates.end(), level1.candidates.begin(), level1.candidates.end());
  st.ms_level1 = ms_since(t);

  t = Clock::now();
  const LevelResult level0 = refine_level(level1.pairs, h.s_hat1, h.s_hat, 2.0 * h.sizes.xi1,
                                          LevelSolver::Chan, eps, s, options);
  st.max_b1 = level0.max_cube_first;
  st.max_b2 = level0.max_cube_second;
  candidates.insert(candidates.end(), level0.candidates.begin(), level0.candidates.end());
  st.ms_level0 = ms_since(t);

  FarthestPair best{-1.0, 0, 0};
  for (const CandidatePair& c : candidates) {
    const std::size_t i = std::min(c.i, c.j);
    const std::size_t j = std::max(c.i, c.j);
    const FarthestPair fp{distance_sq(s, i, j), i, j};
    if (better(fp, best)) best = fp;
  }
  res.estimate = make_estimate(s, best.i, best.j, Method::Paper, eps);
  st.ms_total = ms_since(start);
  return res;
}

}  // namespace diam
