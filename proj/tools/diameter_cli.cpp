// diameter: generate point clouds and compare diameter estimators.
//
//   diameter gen --kind uniform-ball --n 1000 --d 4 --seed 1 --out pts.csv
//   diameter run --method paper --eps 0.25,0.1 --input pts.csv --oracle --out report.json
//   diameter compare --methods exact,agarwal,paper --eps 0.1 --input pts.csv --out cmp.json

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diam/csv.hpp"
#include "diam/generate.hpp"
#include "diam/harness.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct SourceOptions {
  std::string input;
  std::string kind;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
};

std::vector<diam::Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<diam::Method> out;
  for (const auto& name : names) {
    const auto m = diam::parse_method(name);
    if (!m) throw diam::UsageError("unknown method '" + name + "'");
    out.push_back(*m);
  }
  return out;
}

diam::GeneratorKind parse_kind(const std::string& name) {
  const auto k = diam::parse_generator(name);
  if (!k) throw diam::UsageError("unknown generator kind '" + name + "'");
  return *k;
}

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  auto* input = cmd->add_option("--input", src.input, "CSV point file");
  auto* kind = cmd->add_option("--kind", src.kind, "generate instead of reading a file");
  cmd->add_option("--n", src.n, "generated point count")->needs(kind);
  cmd->add_option("--d", src.d, "generated dimension")->needs(kind);
  cmd->add_option("--seed", src.seed, "generator seed")->needs(kind);
  input->excludes(kind);
}

void apply_source(const SourceOptions& src, diam::ExperimentConfig& config) {
  if (!src.input.empty()) {
    config.input_path = src.input;
  } else if (!src.kind.empty()) {
    config.generator = diam::GeneratorSpec{parse_kind(src.kind), src.n, src.d, src.seed};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate point-set diameter: generators, estimators and reports"};
  app.require_subcommand(1);

  SourceOptions gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a point cloud as CSV");
  gen->add_option("--kind", gen_src.kind,
                  "uniform-ball | sphere-shell | gaussian-clusters | grid-aligned | collinear")
      ->required();
  gen->add_option("--n", gen_src.n, "number of points")->required();
  gen->add_option("--d", gen_src.d, "dimension")->required();
  gen->add_option("--seed", gen_src.seed, "64-bit seed")->required();
  gen->add_option("--out", gen_out, "output CSV path")->required();

  SourceOptions run_src;
  std::vector<std::string> run_methods;
  diam::ExperimentConfig run_config;
  auto* run = app.add_subcommand("run", "Run one or more estimators and write a JSON report");
  run->add_option("--method", run_methods, "exact | two-approx | agarwal | chan | paper")
      ->required()
      ->delimiter(',');
  run->add_option("--eps", run_config.eps, "comma-separated eps values in (0,1]")->delimiter(',');
  add_source_options(run, run_src);
  run->add_flag("--oracle", run_config.oracle, "also compute the exact diameter");
  run->add_option("--oracle-ceiling", run_config.oracle_ceiling, "largest n for the oracle");
  run->add_option("--cap", run_config.pair_cap, "diametrical pair list cap");
  run->add_option("--out", run_config.output_path, "report path")->required();

  SourceOptions cmp_src;
  std::vector<std::string> cmp_methods;
  diam::ExperimentConfig cmp_config;
  bool cmp_no_oracle = false;
  auto* compare = app.add_subcommand("compare", "Run several methods against the exact oracle");
  compare->add_option("--methods", cmp_methods, "comma-separated method list")
      ->required()
      ->delimiter(',');
  compare->add_option("--eps", cmp_config.eps, "comma-separated eps values")->delimiter(',');
  add_source_options(compare, cmp_src);
  compare->add_flag("--no-oracle", cmp_no_oracle, "skip the exact oracle");
  compare->add_option("--oracle-ceiling", cmp_config.oracle_ceiling, "largest n for the oracle");
  compare->add_option("--cap", cmp_config.pair_cap, "diametrical pair list cap");
  compare->add_option("--out", cmp_config.output_path, "report path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      const auto points = diam::generate(parse_kind(gen_src.kind), gen_src.n, gen_src.d, gen_src.seed);
      diam::write_points_csv(points, gen_out);
      return 0;
    }
    diam::ExperimentConfig* config = *run ? &run_config : &cmp_config;
    if (*run) {
      config->methods = parse_methods(run_methods);
      apply_source(run_src, *config);
    } else {
      config->methods = parse_methods(cmp_methods);
      config->oracle = !cmp_no_oracle;
      apply_source(cmp_src, *config);
    }
    config->validate();
    diam::run(*config);
    return 0;
  } catch (const diam::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
