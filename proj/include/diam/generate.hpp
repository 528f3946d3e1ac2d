#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "diam/geometry.hpp"

namespace diam {

enum class GeneratorKind { UniformBall, SphereShell, GaussianClusters, GridAligned, Collinear };

std::string_view generator_name(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator(std::string_view name);

/// Deterministic in (kind, n, d, seed).
///   uniform-ball       uniform in the unit ball
///   sphere-shell       uniform on the unit sphere
///   gaussian-clusters  unit-variance blobs around up to 4 centres in [-10,10]^d
///   grid-aligned       integer coordinates in {0..15}, duplicates allowed
///   collinear          a + t v for t uniform in [-1,1] on one random line
PointSet generate(GeneratorKind kind, std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace diam
