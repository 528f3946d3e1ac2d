#include "diam/directional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lattice_map.hpp"

namespace diam {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("eps must lie in (0, 1]");
}

// Odometer over {-k..k}^width, last coordinate fastest.
bool next_node(std::vector<std::int64_t>& v, std::int64_t k) {
  for (std::size_t t = v.size(); t-- > 0;) {
    if (v[t] < k) {
      ++v[t];
      return true;
    }
    v[t] = -k;
  }
  return false;
}

}  // namespace

double net_covering_angle(double eps) {
  check_eps(eps);
  return std::acos(1.0 / (1.0 + eps));
}

DirectionNet sphere_direction_net(std::size_t d, double eps) {
  check_eps(eps);
  if (d < 2) throw UsageError("direction nets need dimension >= 2");
  const double facet_dims = std::sqrt(static_cast<double>(d - 1));
  // The inverse gnomonic map is 1-Lipschitz, so a node offset of at most
  // theta on the facet keeps the angular offset below theta as well.
  const double step = std::min(2.0, 2.0 * net_covering_angle(eps) / facet_dims);
  const auto k = static_cast<std::int64_t>(std::max(1.0, std::ceil(1.0 / step)));

  detail::LatticeMap nodes(d, 0);
  std::vector<std::int64_t> facet(d - 1);
  std::vector<std::int64_t> node(d);
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::fill(facet.begin(), facet.end(), -k);
    do {
      for (std::size_t t = 0, f = 0; t < d; ++t) node[t] = t == axis ? k : facet[f++];
      // Antipodes share one representative: first nonzero coordinate > 0.
      const auto lead = std::find_if(node.begin(), node.end(), [](std::int64_t c) { return c != 0; });
      if (*lead < 0)
        for (auto& c : node) c = -c;
      nodes.insert(node);
    } while (next_node(facet, k));
  }

  DirectionNet net;
  net.dim = d;
  net.max_angle = 0.5 / static_cast<double>(k) * facet_dims;
  net.directions.reserve(nodes.size() * d);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    const auto key = nodes.key(s);
    double norm_sq = 0.0;
    for (std::int64_t c : key) norm_sq += static_cast<double>(c) * static_cast<double>(c);
    const double norm = std::sqrt(norm_sq);
    for (std::int64_t c : key) net.directions.push_back(static_cast<double>(c) / norm);
  }
  return net;
}

Extent project_extent(const PointSet& s, PointView dir) {
  if (s.empty()) throw UsageError("extent of an empty point set");
  if (dir.size() != s.dim()) throw UsageError("direction has wrong dimension");
  const std::size_t d = s.dim();
  auto dot = [&](std::size_t i) {
    const double* p = s[i].data();
    double acc = 0.0;
    for (std::size_t t = 0; t < d; ++t) acc += p[t] * dir[t];
    return acc;
  };
  Extent e;
  e.lo = e.hi = dot(0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double v = dot(i);
    if (v < e.lo) {
      e.lo = v;
      e.argmin = i;
    }
    if (v > e.hi) {
      e.hi = v;
      e.argmax = i;
    }
  }
  return e;
}

std::vector<double> planar_angle_net(double eps) {
  check_eps(eps);
  const double delta = std::sqrt(2.0 * eps);
  const auto count = static_cast<std::size_t>(std::ceil(std::numbers::pi / delta));
  std::vector<double> angles(count);
  for (std::size_t i = 0; i < count; ++i) angles[i] = static_cast<double>(i) * delta;
  return angles;
}

DiameterEstimate agarwal_diameter(const PointSet& s, double eps) {
  check_eps(eps);
  if (s.size() < 2) throw UsageError("agarwal method needs at least 2 points");
  if (s.dim() == 1) {
    const Extent e = project_extent(s, std::vector<double>{1.0});
    return make_estimate(s, e.argmin, e.argmax, Method::Agarwal, eps);
  }
  return agarwal_over_net(s, sphere_direction_net(s.dim(), eps), eps);
}

DiameterEstimate agarwal_over_net(const PointSet& s, const DirectionNet& net, double eps) {
  if (s.size() < 2) throw UsageError("agarwal method needs at least 2 points");
  if (net.dim != s.dim() || net.size() == 0) throw UsageError("direction net does not match points");
  const std::size_t m = net.size();
  FarthestPair best{-1.0, 0, 0};

#pragma omp parallel
  {
    FarthestPair local = best;
#pragma omp for schedule(static) nowait
    for (std::size_t u = 0; u < m; ++u) {
      const Extent e = project_extent(s, net[u]);
      const std::size_t a = std::min(e.argmin, e.argmax);
      const std::size_t b = std::max(e.argmin, e.argmax);
      const FarthestPair cand{distance_sq(s, a, b), a, b};
      if (better(cand, local)) local = cand;
    }
#pragma omp critical(diam_agarwal_merge)
    if (better(local, best)) best = local;
  }
  return make_estimate(s, best.i, best.j, Method::Agarwal, eps);
}

DiameterEstimate two_approx_baseline(const PointSet& s) {
  if (s.size() < 2) throw UsageError("two-approximation needs at least 2 points");
  const std::size_t n = s.size();
  FarthestPair best{distance_sq(s, 0, 1), 0, 1};

#pragma omp parallel if (n > 8192)
  {
    FarthestPair local = best;
#pragma omp for schedule(static) nowait
    for (std::size_t j = 2; j < n; ++j) {
      const FarthestPair cand{distance_sq(s, 0, j), 0, j};
      if (better(cand, local)) local = cand;
    }
#pragma omp critical(diam_two_approx_merge)
    if (better(local, best)) best = local;
  }
  return make_estimate(s, best.i, best.j, Method::TwoApprox, 0.0);
}

}  // namespace diam
