#include "diam/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include "diam/csv.hpp"
#include "diam/directional.hpp"
#include "diam/exact.hpp"
#include "diam/pipeline.hpp"

#ifndef DIAM_VERSION
#define DIAM_VERSION "dev"
#endif

namespace diam {

namespace {

using Clock = std::chrono::steady_clock;

Report config_json(const ExperimentConfig& c) {
  Report j;
  Report methods = Report::array();
  for (Method m : c.methods) methods.push_back(std::string(method_name(m)));
  j["methods"] = methods;
  j["eps"] = c.eps;
  if (c.input_path) j["input"] = *c.input_path;
  if (c.generator) {
    j["generator"] = {{"kind", std::string(generator_name(c.generator->kind))},
                      {"n", c.generator->n},
                      {"d", c.generator->d},
                      {"seed", c.generator->seed}};
  }
  j["output"] = c.output_path;
  j["pair_cap"] = c.pair_cap;
  j["oracle"] = c.oracle;
  j["oracle_ceiling"] = c.oracle_ceiling;
  return j;
}

Report stats_json(const PhaseStats& st) {
  Report counts = {{"n_input", st.n_input},
                   {"n_s_hat", st.n_s_hat},
                   {"n_s_hat1", st.n_s_hat1},
                   {"n_s_hat2", st.n_s_hat2},
                   {"n_s_hat2_pruned", st.n_s_hat2_pruned},
                   {"pairs_level2", st.pairs_level2},
                   {"pairs_level1", st.pairs_level1},
                   {"max_b1_prime", st.max_b1_prime},
                   {"max_b2_prime", st.max_b2_prime},
                   {"max_b1", st.max_b1},
                   {"max_b2", st.max_b2}};
  Report bounds = {{"s_hat2", st.bound_s_hat2},
                   {"b_prime", st.bound_b_prime},
                   {"b", st.bound_b},
                   {"s_hat2_ok", st.s_hat2_within_bound()},
                   {"b_prime_ok", st.b_prime_within_bound()},
                   {"b_ok", st.b_within_bound()}};
  return {{"counts", counts},
          {"bounds", bounds},
          {"truncated", {{"level2", st.truncated_level2}, {"level1", st.truncated_level1}}}};
}

Report timing_json(const PhaseStats& st) {
  return {{"bounding_box_ms", st.ms_bounding_box}, {"round_cells_ms", st.ms_round_cells},
          {"round_lattice1_ms", st.ms_round_lattice1}, {"round_lattice2_ms", st.ms_round_lattice2},
          {"level2_ms", st.ms_level2},           {"level1_ms", st.ms_level1},
          {"level0_ms", st.ms_level0},           {"total_ms", st.ms_total}};
}

void strip_timing(Report& j) {
  if (j.is_object()) {
    j.erase("timing");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timing(value);
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (methods.empty()) throw UsageError("no methods selected");
  if (input_path.has_value() == generator.has_value())
    throw UsageError("exactly one of an input file and a generator must be given");
  bool needs_eps = false;
  for (Method m : methods) needs_eps = needs_eps || uses_eps(m);
  if (needs_eps && eps.empty()) throw UsageError("selected methods need at least one eps");
  for (double e : eps)
    if (!(e > 0.0 && e <= 1.0)) throw UsageError("eps values must lie in (0, 1]");
  if (pair_cap == 0) throw UsageError("pair cap must be at least 1");
  if (generator && (generator->n == 0 || generator->d == 0))
    throw UsageError("generator needs n >= 1 and d >= 1");
}

PointSet load_points(const ExperimentConfig& config) {
  config.validate();
  if (config.input_path) return read_points_csv(*config.input_path);
  const GeneratorSpec& g = *config.generator;
  return generate(g.kind, g.n, g.d, g.seed);
}

Report run(const ExperimentConfig& config, const PointSet& points) {
  config.validate();
  Report report;
  report["tool"] = {{"name", "diameter"}, {"version", DIAM_VERSION}};
  report["config"] = config_json(config);
  report["input"] = {{"n", points.size()}, {"d", points.dim()}};
  Report warnings = Report::array();

  std::optional<FarthestPair> exact;
  double oracle_ms = 0.0;
  if (config.oracle) {
    if (points.size() > config.oracle_ceiling) {
      const std::string msg = "oracle skipped: n=" + std::to_string(points.size()) +
                              " exceeds ceiling " + std::to_string(config.oracle_ceiling);
      std::cerr << "warning: " << msg << '\n';
      warnings.push_back(msg);
    } else {
      const auto t = Clock::now();
      exact = brute_force_diameter(points);
      oracle_ms = std::chrono::duration<double, std::milli>(Clock::now() - t).count();
    }
  }
  if (exact) {
    report["oracle"] = {{"exact", std::sqrt(exact->dist_sq)},
                        {"exact_sq", exact->dist_sq},
                        {"witness", {exact->i, exact->j}},
                        {"timing", {{"wall_ms", oracle_ms}}}};
  }

  PipelineOptions pipeline_options;
  pipeline_options.pair_cap = config.pair_cap;

  Report records = Report::array();
  for (Method m : config.methods) {
    const std::vector<double> eps_list = uses_eps(m) ? config.eps : std::vector<double>{0.0};
    for (double eps : eps_list) {
      Report rec;
      rec["method"] = std::string(method_name(m));
      rec["eps"] = uses_eps(m) ? Report(eps) : Report(nullptr);
      rec["n"] = points.size();
      rec["d"] = points.dim();

      const auto t = Clock::now();
      DiameterEstimate est;
      std::optional<PhaseStats> stats;
      switch (m) {
        case Method::Exact: {
          const FarthestPair fp = brute_force_diameter(points);
          est = make_estimate(points, fp.i, fp.j, Method::Exact, 0.0);
          break;
        }
        case Method::TwoApprox:
          est = two_approx_baseline(points);
          break;
        case Method::Agarwal:
          est = agarwal_diameter(points, eps);
          break;
        case Method::Chan:
          est = chan_diameter(points, eps);
          break;
        case Method::Paper: {
          PipelineResult r = approximate_diameter(points, eps, pipeline_options);
          est = r.estimate;
          stats = r.stats;
          break;
        }
      }
      const double wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t).count();

      rec["estimate"] = est.value;
      rec["estimate_sq"] = est.value_sq;
      rec["witness"] = {est.i, est.j};
      if (exact) {
        const double ex = std::sqrt(exact->dist_sq);
        rec["exact"] = ex;
        if (est.value > 0.0) {
          rec["ratio"] = ex / est.value;
        } else if (ex == 0.0) {
          rec["ratio"] = 1.0;
        } else {
          rec["ratio"] = nullptr;
          warnings.push_back(std::string(method_name(m)) + " returned 0 on a set of positive diameter");
        }
      }
      if (stats) rec["stats"] = stats_json(*stats);
      Report timing = {{"wall_ms", wall_ms}};
      if (stats) timing["phases"] = timing_json(*stats);
      rec["timing"] = timing;
      records.push_back(rec);
    }
  }
  report["records"] = records;
  report["warnings"] = warnings;
  return report;
}

Report run(const ExperimentConfig& config) {
  const PointSet points = load_points(config);
  Report report = run(config, points);
  if (!config.output_path.empty()) write_report(report, config.output_path);
  return report;
}

Report mask_timing(const Report& report) {
  Report copy = report;
  strip_timing(copy);
  return copy;
}

void write_report(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << report.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace diam
