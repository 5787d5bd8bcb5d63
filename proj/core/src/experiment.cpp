#include "critga/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga {

RunSummary summarize(std::size_t replica, const RunResult& run, const FitnessLandscape& landscape,
                     const GAParams& params, std::size_t budget) {
  const FitnessComparator comparator(params, landscape);
  RunSummary summary;
  summary.replica = replica;
  summary.first_hit_generation = budget;
  for (const auto& record : run.records) {
    summary.total_evaluations += record.population_size;
    if (!summary.hit && comparator.compare(landscape.max_fitness(), record.best_fitness) != Trend::Decreased) {
      summary.hit = true;
      summary.first_hit_generation = record.generation;
    }
  }
  const auto& last = run.records.back();
  summary.final_best_fitness = last.best_fitness;
  summary.final_mutation_rate = last.mutation_rate;
  summary.final_population_size = last.population_size;
  summary.termination = run.termination;
  return summary;
}

std::vector<ReplicaResult> run_experiment(const ExperimentConfig& config, std::size_t threads) {
  config.validate();
  const FitnessLandscape landscape = config.landscape.build();
  const RunOptions options = config.run_options();

  std::vector<ReplicaResult> results(config.replicas);
  std::vector<std::exception_ptr> errors(config.replicas);
  auto run_one = [&](std::size_t r) {
    try {
      Rng rng = Rng::for_stream(config.seed, r);
      RunResult run = run_controlled_ga(config.control, landscape, config.ga, config.size_policy, options, rng);
      results[r].summary = summarize(r, run, landscape, config.ga, config.budget);
      results[r].records = std::move(run.records);
    } catch (...) {
      errors[r] = std::current_exception();
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, config.replicas);
  if (workers == 1) {
    for (std::size_t r = 0; r < config.replicas; ++r) run_one(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < config.replicas; r = next++) run_one(r);
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

AggregateRow aggregate(std::string label, double value, std::span<const ReplicaResult> results) {
  AggregateRow row;
  row.label = std::move(label);
  row.value = value;
  row.replicas = results.size();
  if (results.empty()) return row;

  std::vector<double> hits;
  double evaluations = 0.0;
  std::size_t hit_count = 0;
  for (const auto& result : results) {
    hits.push_back(static_cast<double>(result.summary.first_hit_generation));
    evaluations += static_cast<double>(result.summary.total_evaluations);
    hit_count += result.summary.hit ? 1 : 0;
  }
  std::sort(hits.begin(), hits.end());
  const std::size_t mid = hits.size() / 2;
  row.median_first_hit = hits.size() % 2 == 1 ? hits[mid] : 0.5 * (hits[mid - 1] + hits[mid]);
  row.hit_rate = static_cast<double>(hit_count) / static_cast<double>(results.size());
  row.mean_evaluations = evaluations / static_cast<double>(results.size());
  return row;
}

ExperimentConfig with_axis_value(const ExperimentConfig& config, SweepAxis axis, double value) {
  ExperimentConfig out = config;
  out.sweep.reset();
  auto as_count = [&](std::string_view field) {
    if (!(value >= 0.0) || value != std::floor(value)) {
      throw ConfigError(fmt::format("axis value {} is not a non-negative integer", value), std::string(field));
    }
    return static_cast<std::size_t>(value);
  };
  switch (axis) {
    case SweepAxis::MutationRate:
      if (!std::holds_alternative<FixedMutation>(config.control)) {
        throw ConfigError("the p_m axis needs a FixedMutation controller", "sweep.axis");
      }
      out.control = FixedMutation{value};
      break;
    case SweepAxis::PopulationSize:
      if (config.control == MutationControl{ControllerKind::ElitistWithSize}) {
        throw ConfigError("ElitistWithSize controls the population size itself", "sweep.axis");
      }
      out.population_size = as_count("population_size");
      break;
    case SweepAxis::Sigma:
      if (config.landscape.kind != LandscapeKind::SharpPeak) {
        throw ConfigError("the sigma axis needs a SharpPeak landscape", "sweep.axis");
      }
      out.landscape.sigma = value;
      break;
    case SweepAxis::Length:
      if (config.landscape.kind == LandscapeKind::Custom) {
        throw ConfigError("a custom landscape has a fixed length", "sweep.axis");
      }
      out.landscape.n = as_count("landscape.n");
      break;
  }
  out.validate();
  return out;
}

std::vector<AggregateRow> sweep(const ExperimentConfig& config, SweepAxis axis, std::span<const double> values,
                                std::size_t threads) {
  if (values.empty()) throw ConfigError("needs at least one value", "sweep.values");
  std::vector<ExperimentConfig> points;
  for (double v : values) points.push_back(with_axis_value(config, axis, v));

  std::vector<AggregateRow> rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto results = run_experiment(points[i], threads);
    rows.push_back(aggregate(fmt::format("{}={}", to_string(axis), values[i]), values[i], results));
  }
  return rows;
}

std::vector<AggregateRow> compare(std::span<const ExperimentConfig> configs, std::size_t threads) {
  if (configs.empty()) throw ConfigError("needs at least one config", "compare");
  const auto& reference = configs.front();
  std::vector<AggregateRow> rows;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (!(configs[i].landscape == reference.landscape)) {
      throw ConfigError(fmt::format("config {} uses a different landscape than config 0", i), "landscape");
    }
    if (configs[i].budget != reference.budget) {
      throw ConfigError(fmt::format("config {} uses a different budget than config 0", i), "budget");
    }
  }
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ExperimentConfig config = configs[i];
    config.replicas = reference.replicas;
    const auto results = run_experiment(config, threads);
    rows.push_back(aggregate(describe(config.control), static_cast<double>(i), results));
  }
  return rows;
}

}  // namespace critga
