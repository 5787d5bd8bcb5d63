#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "critga/controller.hpp"
#include "critga/dichotomy.hpp"
#include "critga/landscape.hpp"
#include "critga/operators.hpp"

namespace critga {

enum class OutputFormat { Csv, Json };

std::string_view to_string(OutputFormat format) noexcept;
OutputFormat parse_output_format(std::string_view text);

struct LandscapeSpec {
  LandscapeKind kind = LandscapeKind::SharpPeak;
  std::size_t n = 12;
  double sigma = 8.0;
  std::size_t block = 4;
  /// Path to a custom landscape file (Custom only).
  std::string file;
  double safety_factor = FitnessLandscape::kDefaultSafetyFactor;

  FitnessLandscape build() const;

  friend bool operator==(const LandscapeSpec&, const LandscapeSpec&) = default;
};

enum class SweepAxis { MutationRate, PopulationSize, Sigma, Length };

std::string_view to_string(SweepAxis axis) noexcept;
SweepAxis parse_sweep_axis(std::string_view text);

struct SweepSpec {
  SweepAxis axis = SweepAxis::MutationRate;
  std::vector<double> values;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

/// Everything that determines the output of an experiment. Thread count is deliberately absent.
struct ExperimentConfig {
  LandscapeSpec landscape;
  MutationControl control = ControllerKind::Elitist;
  GAParams ga;
  SizePolicy size_policy;
  std::size_t population_size = 64;
  std::size_t budget = 1000;
  std::size_t replicas = 1;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Csv;
  bool stop_at_optimum = true;
  std::size_t master_copies = 0;
  std::optional<SweepSpec> sweep;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
  RunOptions run_options() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Strict parse: unknown keys and wrongly typed values are ConfigErrors naming the field.
/// A relative custom landscape path is resolved against `base_dir` when it is given.
ExperimentConfig config_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
nlohmann::json to_json(const ExperimentConfig& config);
nlohmann::json to_json(const LandscapeSpec& spec);

ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace critga
