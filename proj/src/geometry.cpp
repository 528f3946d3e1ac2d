#include "diam/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace diam {

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw UsageError("point dimension must be at least 1");
  if (coords_.size() % dim_ != 0)
    throw UsageError("coordinate count " + std::to_string(coords_.size()) +
                     " is not a multiple of dimension " + std::to_string(dim_));
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!std::isfinite(coords_[k]))
      throw UsageError("non-finite coordinate in point " +
                       std::to_string(k / dim_) + ", axis " +
                       std::to_string(k % dim_));
  }
}

PointSet PointSet::from_points(const std::vector<Point>& points) {
  if (points.empty()) throw UsageError("cannot infer dimension of an empty point list");
  const std::size_t d = points.front().size();
  std::vector<double> coords;
  coords.reserve(points.size() * d);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d)
      throw UsageError("point " + std::to_string(i) + " has " +
                       std::to_string(points[i].size()) +
                       " coordinates, expected " + std::to_string(d));
    coords.insert(coords.end(), points[i].begin(), points[i].end());
  }
  return PointSet(d, std::move(coords));
}

double distance_sq(PointView p, PointView q) {
  if (p.size() != q.size())
    throw UsageError("dimension mismatch: " + std::to_string(p.size()) +
                     " vs " + std::to_string(q.size()));
  return detail::sq_dist(p.data(), q.data(), p.size());
}

BoundingBox bounding_box(const PointSet& s) {
  if (s.empty()) throw UsageError("bounding box of an empty point set");
  BoundingBox b{Point(s[0].begin(), s[0].end()), Point(s[0].begin(), s[0].end())};
  const std::size_t d = s.dim();
  for (std::size_t i = 1; i < s.size(); ++i) {
    const PointView p = s[i];
    for (std::size_t k = 0; k < d; ++k) {
      b.lo[k] = std::min(b.lo[k], p[k]);
      b.hi[k] = std::max(b.hi[k], p[k]);
    }
  }
  return b;
}

double largest_side(const BoundingBox& b) {
  double ell = 0.0;
  for (std::size_t k = 0; k < b.lo.size(); ++k) ell = std::max(ell, b.hi[k] - b.lo[k]);
  return ell;
}

}  // namespace diam
