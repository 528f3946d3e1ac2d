#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>

#include "diam/geometry.hpp"

namespace diam {

enum class Method { Exact, TwoApprox, Agarwal, Chan, Paper };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Methods whose result depends on eps.
inline bool uses_eps(Method m) { return m == Method::Agarwal || m == Method::Chan || m == Method::Paper; }

/// A diameter estimate certified by a witness pair of original points:
/// value_sq is the witness's squared distance, so value never exceeds the
/// true diameter.
struct DiameterEstimate {
  double value = 0.0;
  double value_sq = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  Method method = Method::Exact;
  double eps = 0.0;
};

inline DiameterEstimate make_estimate(const PointSet& s, std::size_t i, std::size_t j, Method m,
                                      double eps) {
  const double sq = distance_sq(s, i, j);
  return {std::sqrt(sq), sq, i < j ? i : j, i < j ? j : i, m, eps};
}

}  // namespace diam
