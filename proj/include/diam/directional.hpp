#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diam/estimate.hpp"
#include "diam/exact.hpp"
#include "diam/geometry.hpp"

namespace diam {

/// Unit directions such that every unit vector x has some net direction u
/// with angle(x, u) <= max_angle or angle(-x, u) <= max_angle.
struct DirectionNet {
  std::size_t dim = 0;
  std::vector<double> directions;  // row-major, dim per direction
  double max_angle = 0.0;

  std::size_t size() const { return dim == 0 ? 0 : directions.size() / dim; }
  PointView operator[](std::size_t i) const { return {directions.data() + i * dim, dim}; }
};

/// Covering angle targeted by the nets for a given eps: cos(angle) = 1/(1+eps),
/// which keeps every projected width within a factor 1+eps of the segment.
double net_covering_angle(double eps);

/// Grids every facet of [-1,1]^d, pushes the nodes onto the sphere and drops
/// antipodal duplicates. Facet centres (the axis directions) always belong
/// to the net.
DirectionNet sphere_direction_net(std::size_t d, double eps);

struct Extent {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t argmin = 0;
  std::size_t argmax = 0;

  double width() const { return hi - lo; }
};

Extent project_extent(const PointSet& s, PointView dir);

/// Angles i * sqrt(2 eps) for i = 0 .. ceil(pi / sqrt(2 eps)) - 1.
std::vector<double> planar_angle_net(double eps);

enum class CandidateSource : std::uint8_t {
  Direction,
  RecursionBranch,
  Brute,
  Level2,
  Level1,
  Level0,
};

struct CandidatePair {
  std::size_t i = 0;
  std::size_t j = 0;
  CandidateSource source = CandidateSource::Brute;
  std::uint32_t branch = 0;  // direction / top-level angle / coarse pair index
};

/// Max-width direction search over sphere_direction_net. Each direction's
/// extreme pair is scored by its true distance; the best one is returned.
DiameterEstimate agarwal_diameter(const PointSet& s, double eps);

/// The same search over an arbitrary set of unit directions.
DiameterEstimate agarwal_over_net(const PointSet& s, const DirectionNet& net, double eps);

/// Farthest point from point 0.
DiameterEstimate two_approx_baseline(const PointSet& s);

struct ChanOptions {
  /// Node sizes at or below this are finished by checking every
  /// representative pair. 0 picks twice the number of planar angles;
  /// 2 effectively disables the shortcut.
  std::size_t brute_cutoff = 0;
  bool parallel = true;
};

struct ChanResult {
  double dist_sq = 0.0;  // true squared distance of the candidate in `original`
  CandidatePair pair;
};

/// Recursive planar-angle reduction. `positions` holds `reps.size()` points of
/// dimension `dim` (row-major); `reps[k]` is the original index standing
/// behind position k. Candidates are always scored on `original`, never on
/// projected coordinates.
ChanResult chan_recursive_diameter(const PointSet& original, std::span<const double> positions,
                                   std::span<const std::size_t> reps, std::size_t dim, double eps,
                                   const ChanOptions& options = {});

/// Full grid + recursion baseline: rounds `s` to the eps*l/(2 sqrt d)
/// cell-centre grid, then runs the recursion on the rounded set.
DiameterEstimate chan_diameter(const PointSet& s, double eps, const ChanOptions& options = {});

}  // namespace diam
