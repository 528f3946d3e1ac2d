#include <algorithm>
#include <cmath>
#include <limits>

#include "diam/directional.hpp"
#include "diam/grid.hpp"
#include "lattice_map.hpp"

namespace diam {

namespace {

struct Level {
  std::vector<double> pos;
  std::vector<std::size_t> reps;
};

class RecursiveSolver {
 public:
  RecursiveSolver(const PointSet& original, double eps, std::size_t cutoff)
      : original_(original), eps_(eps), cutoff_(cutoff) {
    for (double a : planar_angle_net(eps)) {
      cos_.push_back(std::cos(a));
      sin_.push_back(std::sin(a));
    }
  }

  std::size_t branches() const { return cos_.size(); }

  // Returns the best candidate and whether it came from the brute shortcut.
  FarthestPair solve(std::span<const double> pos, std::span<const std::size_t> reps,
                     std::size_t dim) const {
    const std::size_t m = reps.size();
    if (m == 1) return {0.0, reps[0], reps[0]};
    if (m <= cutoff_) return brute_force_diameter(original_, reps);
    if (dim == 1) return extremes(pos, reps);
    FarthestPair best{-1.0, 0, 0};
    Level next;
    for (std::size_t a = 0; a < branches(); ++a) {
      reduce(pos, reps, dim, a, next);
      const FarthestPair cand = solve(next.pos, next.reps, dim - 1);
      if (better(cand, best)) best = cand;
    }
    return best;
  }

  // Rotates the first two coordinates by angle `a`, keeps the first of them,
  // then snaps the (dim-1)-dimensional result to an eps-grid and merges
  // points sharing a cell.
  void reduce(std::span<const double> pos, std::span<const std::size_t> reps, std::size_t dim,
              std::size_t a, Level& out) const {
    const std::size_t m = reps.size();
    const std::size_t md = dim - 1;
    std::vector<double> mapped(m * md);
    for (std::size_t i = 0; i < m; ++i) {
      const double* p = pos.data() + i * dim;
      double* q = mapped.data() + i * md;
      q[0] = p[0] * cos_[a] + p[1] * sin_[a];
      for (std::size_t t = 2; t < dim; ++t) q[t - 1] = p[t];
    }

    std::vector<double> lo(mapped.begin(), mapped.begin() + static_cast<std::ptrdiff_t>(md));
    std::vector<double> hi = lo;
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t t = 0; t < md; ++t) {
        lo[t] = std::min(lo[t], mapped[i * md + t]);
        hi[t] = std::max(hi[t], mapped[i * md + t]);
      }
    double side = 0.0;
    for (std::size_t t = 0; t < md; ++t) side = std::max(side, hi[t] - lo[t]);

    out.pos.clear();
    out.reps.clear();
    if (side == 0.0) {
      out.pos = std::move(mapped);
      out.reps.assign(reps.begin(), reps.end());
      return;
    }

    const double cell = eps_ * side / (2.0 * std::sqrt(static_cast<double>(md)));
    detail::LatticeMap cells(md, m);
    std::vector<std::int64_t> key(md);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t t = 0; t < md; ++t)
        key[t] = static_cast<std::int64_t>(std::floor((mapped[i * md + t] - lo[t]) / cell + 0.5));
      auto [slot, inserted] = cells.insert(key);
      if (inserted) {
        out.reps.push_back(reps[i]);
        for (std::size_t t = 0; t < md; ++t)
          out.pos.push_back(lo[t] + static_cast<double>(key[t]) * cell);
      } else {
        out.reps[slot] = std::min(out.reps[slot], reps[i]);
      }
    }
  }

 private:
  FarthestPair extremes(std::span<const double> pos, std::span<const std::size_t> reps) const {
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 1; i < reps.size(); ++i) {
      if (pos[i] < pos[lo]) lo = i;
      if (pos[i] > pos[hi]) hi = i;
    }
    const std::size_t a = std::min(reps[lo], reps[hi]);
    const std::size_t b = std::max(reps[lo], reps[hi]);
    return {distance_sq(original_, a, b), a, b};
  }

  const PointSet& original_;
  double eps_;
  std::size_t cutoff_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

}  // namespace

ChanResult chan_recursive_diameter(const PointSet& original, std::span<const double> positions,
                                   std::span<const std::size_t> reps, std::size_t dim, double eps,
                                   const ChanOptions& options) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("eps must lie in (0, 1]");
  if (dim == 0) throw UsageError("dimension must be at least 1");
  if (reps.empty()) throw UsageError("recursion needs at least one point");
  if (positions.size() != reps.size() * dim)
    throw UsageError("position buffer does not match point count and dimension");
  for (std::size_t r : reps)
    if (r >= original.size()) throw UsageError("representative index out of range");

  const std::size_t branches = planar_angle_net(eps).size();
  const std::size_t cutoff = options.brute_cutoff == 0 ? 2 * branches : options.brute_cutoff;
  const RecursiveSolver solver(original, eps, cutoff);
  const std::size_t m = reps.size();

  auto result = [](const FarthestPair& p, CandidateSource src, std::size_t branch) {
    return ChanResult{p.dist_sq, {p.i, p.j, src, static_cast<std::uint32_t>(branch)}};
  };
  if (m <= cutoff || dim == 1 || m == 1)
    return result(solver.solve(positions, reps, dim),
                  m <= cutoff && m > 1 ? CandidateSource::Brute : CandidateSource::RecursionBranch, 0);

  FarthestPair best{-1.0, 0, 0};
  std::size_t best_branch = 0;
#pragma omp parallel if (options.parallel)
  {
    FarthestPair local{-1.0, 0, 0};
    std::size_t local_branch = 0;
    Level next;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::size_t a = 0; a < branches; ++a) {
      solver.reduce(positions, reps, dim, a, next);
      const FarthestPair cand = solver.solve(next.pos, next.reps, dim - 1);
      if (better(cand, local) || (!better(local, cand) && a < local_branch)) {
        local = cand;
        local_branch = a;
      }
    }
#pragma omp critical(diam_chan_merge)
    if (better(local, best) || (!better(best, local) && local_branch < best_branch)) {
      best = local;
      best_branch = local_branch;
    }
  }
  return result(best, CandidateSource::RecursionBranch, best_branch);
}

DiameterEstimate chan_diameter(const PointSet& s, double eps, const ChanOptions& options) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("eps must lie in (0, 1]");
  if (s.size() < 2) throw UsageError("recursive method needs at least 2 points");
  const BoundingBox box = bounding_box(s);
  const double ell = largest_side(box);
  if (ell == 0.0) return make_estimate(s, 0, 1, Method::Chan, eps);

  const GridSizes sizes = make_grid_sizes(ell, eps, s.dim());
  const RoundedSet rounded = round_to_cell_centers(s, {box.lo, sizes.xi, GridMode::CellCenter});
  const std::vector<double> pos = rounded.positions();
  const ChanResult r = chan_recursive_diameter(s, pos, rounded.reps(), s.dim(), eps, options);
  return make_estimate(s, r.pair.i, r.pair.j, Method::Chan, eps);
}

}  // namespace diam
