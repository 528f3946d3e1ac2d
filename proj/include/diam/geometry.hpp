#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diam {

/// Bad caller input: wrong dimension, empty set, eps out of range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A broken internal invariant. Seeing one of these is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Point = std::vector<double>;
using PointView = std::span<const double>;

/// n points in R^d stored row-major. Indices are stable for the lifetime of
/// the set and every coordinate is finite.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, std::vector<double> coords);

  static PointSet from_points(const std::vector<Point>& points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }

  PointView operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const double* data() const { return coords_.data(); }
  std::span<const double> coords() const { return coords_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

struct BoundingBox {
  Point lo;
  Point hi;
};

namespace detail {

// Accumulates in axis order so every caller gets the same bits.
inline double sq_dist(const double* p, const double* q, std::size_t d) {
  double s = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double t = p[k] - q[k];
    s += t * t;
  }
  return s;
}

}  // namespace detail

double distance_sq(PointView p, PointView q);

inline double distance_sq(const PointSet& s, std::size_t i, std::size_t j) {
  return detail::sq_dist(s[i].data(), s[j].data(), s.dim());
}

BoundingBox bounding_box(const PointSet& s);

double largest_side(const BoundingBox& b);

}  // namespace diam
