#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "diam/geometry.hpp"

namespace diam {

enum class GridMode {
  CellCenter,    // position = origin + (k + 1/2) * cell
  LatticePoint,  // position = origin + k * cell
};

struct GridSpec {
  Point origin;
  double cell = 0.0;
  GridMode mode = GridMode::CellCenter;

  std::size_t dim() const { return origin.size(); }

  double position(std::int64_t k, std::size_t axis) const {
    const double offset = mode == GridMode::CellCenter ? 0.5 : 0.0;
    return origin[axis] + (static_cast<double>(k) + offset) * cell;
  }
};

/// Cell sides of the three nested grids: xi1 / xi = eps^(-1/2) and
/// xi2 / xi1 = eps^(-1/4).
struct GridSizes {
  double xi = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
};

GridSizes make_grid_sizes(double ell, double eps, std::size_t d);

/// Read-only view of one point of a RoundedSet.
struct GridPoint {
  std::span<const std::int64_t> lattice;
  std::size_t rep = 0;   // original point index
  std::size_t mult = 0;  // number of parent points merged here
};

/// Deduplicated points on one grid. Each point remembers the lowest original
/// index whose rounding chain lands on it and how many parent points merged.
class RoundedSet {
 public:
  RoundedSet() = default;
  RoundedSet(GridSpec spec, std::size_t parent_size)
      : spec_(std::move(spec)), parent_size_(parent_size) {}

  const GridSpec& spec() const { return spec_; }
  std::size_t dim() const { return spec_.dim(); }
  std::size_t size() const { return reps_.size(); }
  bool empty() const { return reps_.empty(); }
  std::size_t parent_size() const { return parent_size_; }

  std::span<const std::int64_t> lattice(std::size_t i) const {
    return {lattice_.data() + i * dim(), dim()};
  }
  std::span<const std::int64_t> lattice_data() const { return lattice_; }
  std::size_t rep(std::size_t i) const { return reps_[i]; }
  std::size_t mult(std::size_t i) const { return mults_[i]; }
  std::span<const std::size_t> reps() const { return reps_; }

  GridPoint operator[](std::size_t i) const { return {lattice(i), reps_[i], mults_[i]}; }

  Point position(std::size_t i) const;
  void position_into(std::size_t i, double* out) const;
  /// Row-major real positions of all points.
  std::vector<double> positions() const;

  /// Points at the given indices, in that order. Multiplicities are kept;
  /// parent_size becomes their sum.
  RoundedSet subset(std::span<const std::size_t> indices) const;

  void push_back(std::span<const std::int64_t> lattice, std::size_t rep, std::size_t mult);

 private:
  GridSpec spec_;
  std::size_t parent_size_ = 0;
  std::vector<std::int64_t> lattice_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> mults_;
};

/// Largest lattice index magnitude for which d * (2k)^2 still fits in int64.
std::int64_t lattice_index_limit(std::size_t d);

RoundedSet round_to_cell_centers(const PointSet& s, const GridSpec& spec);

RoundedSet round_to_lattice(const RoundedSet& r, const GridSpec& spec);

/// Lattice of side `cell` whose origin sits half a cell below the lowest
/// position of `r` on every axis, so the lowest points of `r` round to index
/// 1 and the rounded positions never span more than `r`'s positions do.
GridSpec anchored_lattice_spec(const RoundedSet& r, double cell);

/// Nearest-point rounding onto anchored_lattice_spec(r, cell). Along each
/// axis the result occupies at most floor(span / cell) + 1 lattice values,
/// where span is the extent of r's positions.
RoundedSet round_to_anchored_lattice(const RoundedSet& r, double cell);

/// Keeps only the lowest and highest point along `axis` among points that
/// agree on every other lattice coordinate. Order of survivors is preserved.
RoundedSet prune_interior(const RoundedSet& r, std::size_t axis);

/// Indices (ascending) of the points prune_interior keeps.
std::vector<std::size_t> prune_interior_indices(const RoundedSet& r, std::size_t axis);

/// Indices of points whose real position lies in the closed axis-aligned cube
/// of the given side around `center`, widened by side * 2^-40 per axis.
std::vector<std::size_t> points_in_cube(const RoundedSet& r, PointView center, double side);

}  // namespace diam
