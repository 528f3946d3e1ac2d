#include "diam/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lattice_map.hpp"

namespace diam {

namespace {

constexpr double kCubeSlack = 0x1p-40;
constexpr std::size_t kParallelThreshold = 4096;

// Merges rows with equal lattice tuples in first-appearance order. The
// surviving rep is the smallest original index, multiplicities add up.
RoundedSet dedup_rows(GridSpec spec, std::size_t parent_size,
                      std::span<const std::int64_t> rows,
                      std::span<const std::size_t> reps,
                      std::span<const std::size_t> mults) {
  const std::size_t d = spec.dim();
  const std::size_t n = reps.size();
  detail::LatticeMap index(d, n);
  std::vector<std::size_t> out_rep;
  std::vector<std::size_t> out_mult;
  out_rep.reserve(n);
  out_mult.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [slot, inserted] = index.insert(rows.subspan(i * d, d));
    if (inserted) {
      out_rep.push_back(reps[i]);
      out_mult.push_back(mults[i]);
    } else {
      out_rep[slot] = std::min(out_rep[slot], reps[i]);
      out_mult[slot] += mults[i];
    }
  }
  RoundedSet out(std::move(spec), parent_size);
  for (std::size_t s = 0; s < out_rep.size(); ++s)
    out.push_back(index.key(s), out_rep[s], out_mult[s]);
  return out;
}

void check_spec(const GridSpec& spec, std::size_t d, GridMode mode) {
  if (spec.dim() != d)
    throw UsageError("grid origin has dimension " + std::to_string(spec.dim()) +
                     ", points have " + std::to_string(d));
  if (!(spec.cell > 0.0) || !std::isfinite(spec.cell))
    throw UsageError("grid cell must be positive and finite");
  if (spec.mode != mode) throw UsageError("grid mode does not match rounding operation");
}

void throw_if_overflowed(bool overflow, std::size_t d) {
  if (overflow)
    throw UsageError("grid too fine: lattice index exceeds " +
                     std::to_string(lattice_index_limit(d)) + " for dimension " +
                     std::to_string(d));
}

}  // namespace

GridSizes make_grid_sizes(double ell, double eps, std::size_t d) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("eps must lie in (0, 1]");
  if (!(ell > 0.0)) throw UsageError("largest box side must be positive");
  if (d == 0) throw UsageError("dimension must be at least 1");
  const double base = ell / (2.0 * std::sqrt(static_cast<double>(d)));
  return {eps * base, std::sqrt(eps) * base, std::sqrt(std::sqrt(eps)) * base};
}

Point RoundedSet::position(std::size_t i) const {
  Point p(dim());
  position_into(i, p.data());
  return p;
}

void RoundedSet::position_into(std::size_t i, double* out) const {
  const auto l = lattice(i);
  for (std::size_t k = 0; k < l.size(); ++k) out[k] = spec_.position(l[k], k);
}

std::vector<double> RoundedSet::positions() const {
  std::vector<double> out(size() * dim());
  for (std::size_t i = 0; i < size(); ++i) position_into(i, out.data() + i * dim());
  return out;
}

RoundedSet RoundedSet::subset(std::span<const std::size_t> indices) const {
  RoundedSet out(spec_, 0);
  for (std::size_t i : indices) {
    out.push_back(lattice(i), reps_[i], mults_[i]);
    out.parent_size_ += mults_[i];
  }
  return out;
}

void RoundedSet::push_back(std::span<const std::int64_t> lattice, std::size_t rep,
                           std::size_t mult) {
  if (lattice.size() != dim()) throw UsageError("lattice tuple has wrong dimension");
  lattice_.insert(lattice_.end(), lattice.begin(), lattice.end());
  reps_.push_back(rep);
  mults_.push_back(mult);
}

std::int64_t lattice_index_limit(std::size_t d) {
  // d * (2k)^2 <= 2^62
  const double k = std::sqrt(0x1p62 / static_cast<double>(std::max<std::size_t>(d, 1))) / 2.0;
  return static_cast<std::int64_t>(std::floor(k));
}

RoundedSet round_to_cell_centers(const PointSet& s, const GridSpec& spec) {
  check_spec(spec, s.dim(), GridMode::CellCenter);
  const std::size_t d = s.dim();
  const std::size_t n = s.size();
  const auto limit = static_cast<double>(lattice_index_limit(d));
  std::vector<std::int64_t> rows(n * d);
  bool overflow = false;

#pragma omp parallel for schedule(static) reduction(|| : overflow) if (n > kParallelThreshold)
  for (std::size_t i = 0; i < n; ++i) {
    const PointView p = s[i];
    for (std::size_t k = 0; k < d; ++k) {
      const double t = std::floor((p[k] - spec.origin[k]) / spec.cell);
      if (std::abs(t) > limit) {
        overflow = true;
        continue;
      }
      rows[i * d + k] = static_cast<std::int64_t>(t);
    }
  }
  throw_if_overflowed(overflow, d);

  std::vector<std::size_t> reps(n);
  for (std::size_t i = 0; i < n; ++i) reps[i] = i;
  const std::vector<std::size_t> ones(n, 1);
  return dedup_rows(spec, n, rows, reps, ones);
}

RoundedSet round_to_lattice(const RoundedSet& r, const GridSpec& spec) {
  check_spec(spec, r.dim(), GridMode::LatticePoint);
  if (!(spec.cell > r.spec().cell))
    throw UsageError("lattice rounding needs a coarser cell than the source grid");
  const std::size_t d = r.dim();
  const std::size_t n = r.size();
  const auto limit = static_cast<double>(lattice_index_limit(d));
  std::vector<std::int64_t> rows(n * d);
  bool overflow = false;

#pragma omp parallel for schedule(static) reduction(|| : overflow) if (n > kParallelThreshold)
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = r.lattice(i);
    for (std::size_t k = 0; k < d; ++k) {
      const double x = r.spec().position(src[k], k);
      // Nearest lattice point, exact halves go up.
      const double t = std::floor((x - spec.origin[k]) / spec.cell + 0.5);
      if (std::abs(t) > limit) {
        overflow = true;
        continue;
      }
      rows[i * d + k] = static_cast<std::int64_t>(t);
    }
  }
  throw_if_overflowed(overflow, d);
  // Multiplicities count merged parent grid points, not original points.
  const std::vector<std::size_t> ones(n, 1);
  return dedup_rows(spec, n, rows, r.reps(), ones);
}

std::vector<std::size_t> prune_interior_indices(const RoundedSet& r, std::size_t axis) {
  const std::size_t d = r.dim();
  if (axis >= d)
    throw UsageError("prune axis " + std::to_string(axis) + " out of range for dimension " +
                     std::to_string(d));
  const std::size_t n = r.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  detail::LatticeMap columns(d - 1, n);
  std::vector<std::size_t> lowest;
  std::vector<std::size_t> highest;
  std::vector<std::int64_t> key(d - 1);
  std::vector<std::size_t> column_of(n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const auto l = r.lattice(i);
    std::copy(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(axis), key.begin());
    std::copy(l.begin() + static_cast<std::ptrdiff_t>(axis) + 1, l.end(),
              key.begin() + static_cast<std::ptrdiff_t>(axis));
    auto [slot, inserted] = columns.insert(key);
    column_of[i] = slot;
    if (inserted) {
      lowest.push_back(i);
      highest.push_back(i);
    } else {
      if (l[axis] < r.lattice(lowest[slot])[axis]) lowest[slot] = i;
      if (l[axis] > r.lattice(highest[slot])[axis]) highest[slot] = i;
    }
  }

  std::vector<std::size_t> keep;
  keep.reserve(std::min(n, 2 * lowest.size()));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = column_of[i];
    if (lowest[c] == i || highest[c] == i) keep.push_back(i);
  }
  return keep;
}

GridSpec anchored_lattice_spec(const RoundedSet& r, double cell) {
  if (r.empty()) throw UsageError("cannot anchor a lattice on an empty set");
  const std::size_t d = r.dim();
  Point origin(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::int64_t lo = r.lattice(0)[k];
    for (std::size_t i = 1; i < r.size(); ++i) lo = std::min(lo, r.lattice(i)[k]);
    origin[k] = r.spec().position(lo, k) - cell / 2.0;
  }
  return {std::move(origin), cell, GridMode::LatticePoint};
}

RoundedSet round_to_anchored_lattice(const RoundedSet& r, double cell) {
  const GridSpec spec = anchored_lattice_spec(r, cell);
  if (!(cell > r.spec().cell) || !std::isfinite(cell))
    throw UsageError("lattice rounding needs a coarser cell than the source grid");
  const std::size_t d = r.dim();
  const std::size_t n = r.size();
  std::vector<std::int64_t> lo(d);
  for (std::size_t k = 0; k < d; ++k) {
    lo[k] = r.lattice(0)[k];
    for (std::size_t i = 1; i < n; ++i) lo[k] = std::min(lo[k], r.lattice(i)[k]);
  }
  const auto limit = static_cast<double>(lattice_index_limit(d));
  const double src_cell = r.spec().cell;
  std::vector<std::int64_t> rows(n * d);
  bool overflow = false;

#pragma omp parallel for schedule(static) reduction(|| : overflow) if (n > kParallelThreshold)
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = r.lattice(i);
    for (std::size_t k = 0; k < d; ++k) {
      // Offset from the lowest source position is exact at the minimum, so
      // the lowest points land on index 1 without round-off.
      const double offset = static_cast<double>(src[k] - lo[k]) * src_cell;
      const double t = std::floor(offset / cell) + 1.0;
      if (t > limit) {
        overflow = true;
        continue;
      }
      rows[i * d + k] = static_cast<std::int64_t>(t);
    }
  }
  throw_if_overflowed(overflow, d);
  const std::vector<std::size_t> ones(n, 1);
  return dedup_rows(spec, n, rows, r.reps(), ones);
}

RoundedSet prune_interior(const RoundedSet& r, std::size_t axis) {
  return r.subset(prune_interior_indices(r, axis));
}

std::vector<std::size_t> points_in_cube(const RoundedSet& r, PointView center, double side) {
  const std::size_t d = r.dim();
  if (center.size() != d) throw UsageError("cube center has wrong dimension");
  if (!(side > 0.0)) throw UsageError("cube side must be positive");
  const double reach = side / 2.0 + side * kCubeSlack;
  const std::size_t n = r.size();
  std::vector<unsigned char> inside(n, 0);

#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
  for (std::size_t i = 0; i < n; ++i) {
    const auto l = r.lattice(i);
    bool in = true;
    for (std::size_t k = 0; k < d && in; ++k)
      in = std::abs(r.spec().position(l[k], k) - center[k]) <= reach;
    inside[i] = in ? 1 : 0;
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (inside[i]) out.push_back(i);
  return out;
}

}  // namespace diam
