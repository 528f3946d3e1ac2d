#pragma once

// Single-threaded reference versions of the OpenMP kernels. They share no
// code with the parallel paths beyond the distance primitive and exist so
// tests and benchmarks can compare the two.

#include <cstddef>

#include "diam/directional.hpp"
#include "diam/exact.hpp"
#include "diam/grid.hpp"

namespace diam::serial {

FarthestPair brute_force_diameter(const PointSet& s);

DiametricalPairList diametrical_pairs(const RoundedSet& r, std::size_t cap = kDefaultPairCap);

RoundedSet round_to_cell_centers(const PointSet& s, const GridSpec& spec);

RoundedSet round_to_lattice(const RoundedSet& r, const GridSpec& spec);
RoundedSet round_to_anchored_lattice(const RoundedSet& r, double cell);

DiameterEstimate agarwal_diameter(const PointSet& s, double eps);

}  // namespace diam::serial
