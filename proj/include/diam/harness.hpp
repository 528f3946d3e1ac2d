#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "diam/estimate.hpp"
#include "diam/generate.hpp"
#include "diam/geometry.hpp"

namespace diam {

using Report = nlohmann::ordered_json;

inline constexpr std::size_t kDefaultOracleCeiling = 5000;

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::UniformBall;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  std::vector<Method> methods;
  std::vector<double> eps;
  std::optional<std::string> input_path;
  std::optional<GeneratorSpec> generator;
  std::string output_path;
  std::size_t pair_cap = 4096;
  bool oracle = false;
  std::size_t oracle_ceiling = kDefaultOracleCeiling;

  /// Throws UsageError on an inconsistent configuration.
  void validate() const;
};

/// Loads or generates the configured point set.
PointSet load_points(const ExperimentConfig& config);

/// Runs every (method, eps) combination on `points`. Methods that ignore eps
/// run once. Records are ordered by method list, then eps list; everything
/// that depends on wall-clock time lives under "timing" keys.
Report run(const ExperimentConfig& config, const PointSet& points);

Report run(const ExperimentConfig& config);

/// Copy of `report` with every "timing" subtree removed.
Report mask_timing(const Report& report);

void write_report(const Report& report, const std::string& path);

}  // namespace diam
