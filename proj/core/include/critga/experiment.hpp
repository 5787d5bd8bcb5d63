#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "critga/config.hpp"
#include "critga/controller.hpp"
#include "critga/record.hpp"

namespace critga {

struct RunSummary {
  std::size_t replica = 0;
  bool hit = false;
  /// Generation at which the optimum first appeared, or the budget when it never did.
  std::size_t first_hit_generation = 0;
  double final_best_fitness = 0.0;
  /// Sum of the recorded population sizes, generation 0 included.
  std::uint64_t total_evaluations = 0;
  double final_mutation_rate = 0.0;
  std::size_t final_population_size = 0;
  Termination termination = Termination::Budget;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct ReplicaResult {
  RunSummary summary;
  std::vector<GenerationRecord> records;

  friend bool operator==(const ReplicaResult&, const ReplicaResult&) = default;
};

RunSummary summarize(std::size_t replica, const RunResult& run, const FitnessLandscape& landscape,
                     const GAParams& params, std::size_t budget);

/// Runs every replica of `config`. Replica r draws from Rng::for_stream(config.seed, r), so the
/// results do not depend on `threads` or on execution order.
std::vector<ReplicaResult> run_experiment(const ExperimentConfig& config, std::size_t threads = 1);

/// One line of a sweep or comparison table.
struct AggregateRow {
  std::string label;
  double value = 0.0;
  std::size_t replicas = 0;
  double hit_rate = 0.0;
  /// Median over replicas of the first-hit generation (budget for replicas that never hit).
  double median_first_hit = 0.0;
  double mean_evaluations = 0.0;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

AggregateRow aggregate(std::string label, double value, std::span<const ReplicaResult> results);

/// `config` with the axis parameter replaced by `value`. Throws ConfigError when the axis does
/// not apply to the configured controller or landscape.
ExperimentConfig with_axis_value(const ExperimentConfig& config, SweepAxis axis, double value);

std::vector<AggregateRow> sweep(const ExperimentConfig& config, SweepAxis axis, std::span<const double> values,
                                std::size_t threads = 1);

/// One row per config. All configs must share landscape and budget; every config is run with
/// the replica count of the first one.
std::vector<AggregateRow> compare(std::span<const ExperimentConfig> configs, std::size_t threads = 1);

}  // namespace critga
