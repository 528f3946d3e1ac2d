#include "diam/generate.hpp"

#include <array>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace diam {

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 5> kNames{{
    {GeneratorKind::UniformBall, "uniform-ball"},
    {GeneratorKind::SphereShell, "sphere-shell"},
    {GeneratorKind::GaussianClusters, "gaussian-clusters"},
    {GeneratorKind::GridAligned, "grid-aligned"},
    {GeneratorKind::Collinear, "collinear"},
}};

constexpr std::size_t kClusters = 4;
constexpr int kGridSpan = 16;

// Gaussian direction, rejecting the (practically impossible) zero vector.
void random_unit(std::mt19937_64& rng, double* out, std::size_t d) {
  std::normal_distribution<double> normal(0.0, 1.0);
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      out[k] = normal(rng);
      norm_sq += out[k] * out[k];
    }
  } while (norm_sq == 0.0);
  const double norm = std::sqrt(norm_sq);
  for (std::size_t k = 0; k < d; ++k) out[k] /= norm;
}

}  // namespace

std::string_view generator_name(GeneratorKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<GeneratorKind> parse_generator(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

PointSet generate(GeneratorKind kind, std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0) throw UsageError("generator needs n >= 1");
  if (d == 0) throw UsageError("generator needs d >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> coords(n * d);

  switch (kind) {
    case GeneratorKind::UniformBall:
      for (std::size_t i = 0; i < n; ++i) {
        double* p = coords.data() + i * d;
        random_unit(rng, p, d);
        const double r = std::pow(unit(rng), 1.0 / static_cast<double>(d));
        for (std::size_t k = 0; k < d; ++k) p[k] *= r;
      }
      break;
    case GeneratorKind::SphereShell:
      for (std::size_t i = 0; i < n; ++i) random_unit(rng, coords.data() + i * d, d);
      break;
    case GeneratorKind::GaussianClusters: {
      std::uniform_real_distribution<double> box(-10.0, 10.0);
      std::vector<double> centres(kClusters * d);
      for (double& c : centres) c = box(rng);
      std::uniform_int_distribution<std::size_t> pick(0, kClusters - 1);
      for (std::size_t i = 0; i < n; ++i) {
        const double* c = centres.data() + pick(rng) * d;
        for (std::size_t k = 0; k < d; ++k) coords[i * d + k] = c[k] + normal(rng);
      }
      break;
    }
    case GeneratorKind::GridAligned: {
      std::uniform_int_distribution<int> cell(0, kGridSpan - 1);
      for (double& x : coords) x = static_cast<double>(cell(rng));
      break;
    }
    case GeneratorKind::Collinear: {
      std::uniform_real_distribution<double> box(-5.0, 5.0);
      std::uniform_real_distribution<double> param(-1.0, 1.0);
      std::vector<double> base(d);
      std::vector<double> dir(d);
      for (double& b : base) b = box(rng);
      for (double& v : dir) v = normal(rng);
      for (std::size_t i = 0; i < n; ++i) {
        const double t = param(rng);
        for (std::size_t k = 0; k < d; ++k) coords[i * d + k] = base[k] + t * dir[k];
      }
      break;
    }
  }
  return PointSet(d, std::move(coords));
}

}  // namespace diam
