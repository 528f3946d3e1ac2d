#include "diam/serial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace diam::serial {

namespace {

using Key = std::vector<std::int64_t>;

struct Merged {
  std::size_t rep;
  std::size_t mult;
};

RoundedSet collect(const GridSpec& spec, std::size_t parent_size, const std::vector<Key>& keys,
                   const std::vector<std::size_t>& reps, const std::vector<std::size_t>& mults) {
  std::map<Key, std::size_t> slot_of;
  std::vector<Key> order;
  std::vector<Merged> merged;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto it = slot_of.find(keys[i]);
    if (it == slot_of.end()) {
      slot_of.emplace(keys[i], merged.size());
      order.push_back(keys[i]);
      merged.push_back({reps[i], mults[i]});
    } else {
      Merged& m = merged[it->second];
      if (reps[i] < m.rep) m.rep = reps[i];
      m.mult += mults[i];
    }
  }
  RoundedSet out(spec, parent_size);
  for (std::size_t s = 0; s < order.size(); ++s) out.push_back(order[s], merged[s].rep, merged[s].mult);
  return out;
}

}  // namespace

FarthestPair brute_force_diameter(const PointSet& s) {
  if (s.empty()) throw UsageError("diameter of an empty point set");
  FarthestPair best{0.0, 0, 0};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double dsq = distance_sq(s, i, j);
      if (dsq > best.dist_sq) best = {dsq, i, j};
    }
  if (best.dist_sq == 0.0 && s.size() > 1) best = {0.0, 0, 1};
  return best;
}

DiametricalPairList diametrical_pairs(const RoundedSet& r, std::size_t cap) {
  if (r.empty()) throw UsageError("diametrical pairs of an empty set");
  DiametricalPairList out;
  if (r.size() == 1) {
    out.pairs.emplace_back(0, 0);
    return out;
  }
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const std::int64_t dsq = lattice_dist_sq(r.lattice(i), r.lattice(j));
      if (dsq > out.dist_sq_lattice) {
        out.dist_sq_lattice = dsq;
        out.pairs.clear();
      }
      if (dsq == out.dist_sq_lattice) out.pairs.emplace_back(i, j);
    }
  if (out.pairs.size() > cap) {
    out.pairs.resize(cap);
    out.truncated = true;
  }
  return out;
}

RoundedSet round_to_cell_centers(const PointSet& s, const GridSpec& spec) {
  std::vector<Key> keys(s.size(), Key(s.dim()));
  std::vector<std::size_t> reps(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = 0; k < s.dim(); ++k)
      keys[i][k] = static_cast<std::int64_t>(std::floor((s[i][k] - spec.origin[k]) / spec.cell));
    reps[i] = i;
  }
  return collect(spec, s.size(), keys, reps, std::vector<std::size_t>(s.size(), 1));
}

RoundedSet round_to_lattice(const RoundedSet& r, const GridSpec& spec) {
  std::vector<Key> keys(r.size(), Key(r.dim()));
  std::vector<std::size_t> reps(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Point x = r.position(i);
    for (std::size_t k = 0; k < r.dim(); ++k)
      keys[i][k] = static_cast<std::int64_t>(std::floor((x[k] - spec.origin[k]) / spec.cell + 0.5));
    reps[i] = r.rep(i);
  }
  return collect(spec, r.size(), keys, reps, std::vector<std::size_t>(r.size(), 1));
}

RoundedSet round_to_anchored_lattice(const RoundedSet& r, double cell) {
  const GridSpec spec = anchored_lattice_spec(r, cell);
  Key lo(r.lattice(0).begin(), r.lattice(0).end());
  for (std::size_t i = 1; i < r.size(); ++i)
    for (std::size_t k = 0; k < r.dim(); ++k) lo[k] = std::min(lo[k], r.lattice(i)[k]);
  std::vector<Key> keys(r.size(), Key(r.dim()));
  std::vector<std::size_t> reps(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t k = 0; k < r.dim(); ++k) {
      const double offset = static_cast<double>(r.lattice(i)[k] - lo[k]) * r.spec().cell;
      keys[i][k] = static_cast<std::int64_t>(std::floor(offset / cell)) + 1;
    }
    reps[i] = r.rep(i);
  }
  return collect(spec, r.size(), keys, reps, std::vector<std::size_t>(r.size(), 1));
}

DiameterEstimate agarwal_diameter(const PointSet& s, double eps) {
  if (s.size() < 2) throw UsageError("agarwal method needs at least 2 points");
  const DirectionNet net = sphere_direction_net(s.dim(), eps);
  FarthestPair best{-1.0, 0, 0};
  for (std::size_t u = 0; u < net.size(); ++u) {
    const Extent e = project_extent(s, net[u]);
    const std::size_t a = e.argmin < e.argmax ? e.argmin : e.argmax;
    const std::size_t b = e.argmin < e.argmax ? e.argmax : e.argmin;
    const double dsq = distance_sq(s, a, b);
    if (dsq > best.dist_sq || (dsq == best.dist_sq && (a < best.i || (a == best.i && b < best.j))))
      best = {dsq, a, b};
  }
  return make_estimate(s, best.i, best.j, Method::Agarwal, eps);
}

}  // namespace diam::serial
