#pragma once

#include <cstddef>
#include <vector>

#include "diam/directional.hpp"
#include "diam/estimate.hpp"
#include "diam/exact.hpp"
#include "diam/grid.hpp"

namespace diam {

/// Per-phase counts, pair-list sizes, count-bound checks and timings of one
/// approximate_diameter run.
struct PhaseStats {
  std::size_t n_input = 0;
  std::size_t n_s_hat = 0;    // cell-centre set
  std::size_t n_s_hat1 = 0;   // first lattice set
  std::size_t n_s_hat2 = 0;   // second lattice set, before pruning
  std::size_t n_s_hat2_pruned = 0;
  std::size_t pairs_level2 = 0;
  std::size_t pairs_level1 = 0;
  std::size_t max_b1_prime = 0;  // cube queries into the first lattice set
  std::size_t max_b2_prime = 0;
  std::size_t max_b1 = 0;        // cube queries into the cell-centre set
  std::size_t max_b2 = 0;
  bool truncated_level2 = false;
  bool truncated_level1 = false;

  // (2 sqrt(d) / eps^(1/4) + 1)^d, (2 / eps^(1/4) + 1)^d, (2 / eps^(1/2) + 1)^d
  double bound_s_hat2 = 0.0;
  double bound_b_prime = 0.0;
  double bound_b = 0.0;

  bool s_hat2_within_bound() const;
  bool b_prime_within_bound() const;
  bool b_within_bound() const;

  double ms_bounding_box = 0.0;
  double ms_round_cells = 0.0;
  double ms_round_lattice1 = 0.0;
  double ms_round_lattice2 = 0.0;
  double ms_level2 = 0.0;
  double ms_level1 = 0.0;
  double ms_level0 = 0.0;
  double ms_total = 0.0;

  /// Lines 1-6 of the pipeline: bounding box plus the three roundings.
  double ms_rounding() const {
    return ms_bounding_box + ms_round_cells + ms_round_lattice1 + ms_round_lattice2;
  }
};

struct PipelineResult {
  DiameterEstimate estimate;
  PhaseStats stats;
};

struct PipelineOptions {
  std::size_t pair_cap = kDefaultPairCap;
  ChanOptions chan;
};

/// The three nested roundings of a point set. The cell-centre grid starts at
/// the bounding box's lower corner; each lattice is anchored half a cell
/// below the lowest position of the set it rounds.
struct GridHierarchy {
  BoundingBox box;
  double ell = 0.0;
  GridSizes sizes;
  RoundedSet s_hat;   // cell centres, cell xi
  RoundedSet s_hat1;  // anchored lattice, cell xi1
  RoundedSet s_hat2;  // anchored lattice, cell xi2
};

/// Requires a non-degenerate set (largest side > 0). Fills the timing and
/// count fields of `stats` when given.
GridHierarchy build_hierarchy(const PointSet& s, double eps, PhaseStats* stats = nullptr);

enum class LevelSolver { Brute, Chan };

struct LevelResult {
  /// Brute: squared lattice diameter of the best union, in real units.
  /// Chan: best true squared distance over the original points.
  double best_sq = 0.0;
  /// Brute only: every finer-set pair attaining the level maximum, merged
  /// across all coarse pairs.
  DiametricalPairList pairs;
  std::vector<CandidatePair> candidates;
  std::size_t max_cube_first = 0;
  std::size_t max_cube_second = 0;
};

/// For each coarse pair, gathers the finer points inside cubes of side
/// `side` around both coarse positions, prunes interior points of the
/// union and solves it. Throws InternalError if a cube comes back empty.
LevelResult refine_level(const DiametricalPairList& coarse_pairs, const RoundedSet& coarse,
                         const RoundedSet& finer, double side, LevelSolver solver, double eps,
                         const PointSet& original, const PipelineOptions& options = {});

PipelineResult approximate_diameter(const PointSet& s, double eps,
                                    const PipelineOptions& options = {});

inline PipelineResult approximate_diameter(const PointSet& s, double eps, std::size_t cap) {
  PipelineOptions options;
  options.pair_cap = cap;
  return approximate_diameter(s, eps, options);
}

}  // namespace diam
