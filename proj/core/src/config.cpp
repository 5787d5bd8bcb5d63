#include "critga/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga {

using nlohmann::json;

std::string_view to_string(OutputFormat format) noexcept { return format == OutputFormat::Json ? "json" : "csv"; }

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ConfigError(fmt::format("unknown format '{}' (expected csv or json)", text), "format");
}

std::string_view to_string(SweepAxis axis) noexcept {
  switch (axis) {
    case SweepAxis::MutationRate: return "p_m";
    case SweepAxis::PopulationSize: return "m";
    case SweepAxis::Sigma: return "sigma";
    case SweepAxis::Length: return "n";
  }
  return "?";
}

SweepAxis parse_sweep_axis(std::string_view text) {
  for (auto axis : {SweepAxis::MutationRate, SweepAxis::PopulationSize, SweepAxis::Sigma, SweepAxis::Length}) {
    if (text == to_string(axis)) return axis;
  }
  throw ConfigError(fmt::format("unknown sweep axis '{}' (expected p_m, m, sigma or n)", text), "sweep.axis");
}

FitnessLandscape LandscapeSpec::build() const {
  switch (kind) {
    case LandscapeKind::SharpPeak: return FitnessLandscape::sharp_peak(n, sigma);
    case LandscapeKind::RoyalRoad: return FitnessLandscape::royal_road(n, block);
    case LandscapeKind::DeceptiveTrap: return FitnessLandscape::deceptive_trap(n, block);
    case LandscapeKind::Custom:
      if (file.empty()) throw ConfigError("custom landscape needs a file", "landscape.file");
      return FitnessLandscape::load_custom(file);
  }
  throw ConfigError("unknown landscape kind", "landscape.kind");
}

void ExperimentConfig::validate() const {
  if (landscape.kind != LandscapeKind::Custom) {
    // Building checks n, sigma and block; custom files are checked when loaded.
    landscape.build().fitness_ratio_bound(landscape.safety_factor);
  } else if (landscape.file.empty()) {
    throw ConfigError("custom landscape needs a file", "landscape.file");
  }
  const bool sized = std::holds_alternative<ControllerKind>(control) &&
                     std::get<ControllerKind>(control) == ControllerKind::ElitistWithSize;
  if (population_size < 2) throw ConfigError("must be >= 2", "population_size");
  if (budget < 1) throw ConfigError("must be >= 1", "budget");
  if (replicas < 1) throw ConfigError("must be >= 1", "replicas");
  if (const auto* fixed = std::get_if<FixedMutation>(&control)) {
    if (!(fixed->rate >= 0.0 && fixed->rate <= 1.0)) throw ConfigError("must be in [0, 1]", "controller.p_m");
  }
  ga.validate(sized ? 2 : population_size);
  size_policy.validate();
  if (master_copies > 0 && landscape.kind == LandscapeKind::Custom) {
    throw ConfigError("custom landscapes have no master genotype to seed", "master_copies");
  }
  if (sweep && sweep->values.empty()) throw ConfigError("needs at least one value", "sweep.values");
}

RunOptions ExperimentConfig::run_options() const {
  RunOptions options;
  options.population_size = population_size;
  options.budget = budget;
  options.stop_at_optimum = stop_at_optimum;
  options.master_copies = master_copies;
  options.safety_factor = landscape.safety_factor;
  return options;
}

namespace {

void expect_keys(const json& object, std::string_view section, std::initializer_list<std::string_view> allowed) {
  const std::string where = section.empty() ? std::string("config") : std::string(section);
  if (!object.is_object()) throw ConfigError("expected an object", where);
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(fmt::format("unknown key '{}'", key), section.empty() ? key : where + "." + key);
    }
  }
}

template <typename T>
T read(const json& object, const std::string& key, const std::string& field, T fallback) {
  const auto it = object.find(key);
  if (it == object.end()) return fallback;
  try {
    if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
      if (!it->is_number_unsigned()) throw ConfigError("expected a non-negative integer", field);
    } else if constexpr (std::is_same_v<T, double>) {
      if (!it->is_number()) throw ConfigError("expected a number", field);
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!it->is_boolean()) throw ConfigError("expected true or false", field);
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!it->is_string()) throw ConfigError("expected a string", field);
    }
    return it->template get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(e.what(), field);
  }
}

LandscapeSpec parse_landscape(const json& doc, const std::filesystem::path& base_dir) {
  expect_keys(doc, "landscape", {"kind", "n", "sigma", "block", "file", "safety_factor"});
  LandscapeSpec spec;
  spec.kind = parse_landscape_kind(read<std::string>(doc, "kind", "landscape.kind", "SharpPeak"));
  spec.n = read<std::size_t>(doc, "n", "landscape.n", spec.n);
  spec.sigma = read<double>(doc, "sigma", "landscape.sigma", spec.sigma);
  spec.block = read<std::size_t>(doc, "block", "landscape.block", spec.block);
  spec.file = read<std::string>(doc, "file", "landscape.file", "");
  spec.safety_factor = read<double>(doc, "safety_factor", "landscape.safety_factor", spec.safety_factor);
  if (!spec.file.empty() && !base_dir.empty() && std::filesystem::path(spec.file).is_relative()) {
    spec.file = (base_dir / spec.file).lexically_normal().string();
  }
  return spec;
}

MutationControl parse_controller(const json& doc) {
  expect_keys(doc, "controller", {"kind", "p_m"});
  const std::string kind = read<std::string>(doc, "kind", "controller.kind", "Elitist");
  if (kind == "FixedMutation") {
    if (!doc.contains("p_m")) throw ConfigError("FixedMutation needs p_m", "controller.p_m");
    return FixedMutation{read<double>(doc, "p_m", "controller.p_m", 0.0)};
  }
  if (doc.contains("p_m")) throw ConfigError("only FixedMutation takes p_m", "controller.p_m");
  return parse_controller_kind(kind);
}

GAParams parse_ga(const json& doc) {
  expect_keys(doc, "ga", {"crossover_rate", "crossover", "selection", "fitness_tolerance"});
  GAParams params;
  params.crossover_rate = read<double>(doc, "crossover_rate", "ga.crossover_rate", params.crossover_rate);
  params.crossover = parse_crossover_kind(read<std::string>(doc, "crossover", "ga.crossover", "OnePoint"));
  params.fitness_tolerance = read<double>(doc, "fitness_tolerance", "ga.fitness_tolerance", params.fitness_tolerance);
  if (const auto it = doc.find("selection"); it != doc.end()) {
    expect_keys(*it, "ga.selection", {"kind", "k"});
    params.selection.kind =
        parse_selection_kind(read<std::string>(*it, "kind", "ga.selection.kind", "FitnessProportional"));
    params.selection.tournament_size = read<std::size_t>(*it, "k", "ga.selection.k", params.selection.tournament_size);
  }
  return params;
}

SizePolicy parse_size_policy(const json& doc) {
  expect_keys(doc, "size_policy", {"growth", "max_size", "convergence_threshold"});
  SizePolicy policy;
  policy.growth = read<double>(doc, "growth", "size_policy.growth", policy.growth);
  policy.max_size = read<std::size_t>(doc, "max_size", "size_policy.max_size", policy.max_size);
  if (const auto it = doc.find("convergence_threshold"); it != doc.end() && !it->is_null()) {
    policy.convergence_threshold = read<double>(doc, "convergence_threshold", "size_policy.convergence_threshold", 0.0);
  }
  return policy;
}

SweepSpec parse_sweep(const json& doc) {
  expect_keys(doc, "sweep", {"axis", "values"});
  SweepSpec spec;
  spec.axis = parse_sweep_axis(read<std::string>(doc, "axis", "sweep.axis", "p_m"));
  const auto it = doc.find("values");
  if (it == doc.end() || !it->is_array()) throw ConfigError("expected an array of numbers", "sweep.values");
  for (const auto& v : *it) {
    if (!v.is_number()) throw ConfigError("expected an array of numbers", "sweep.values");
    spec.values.push_back(v.get<double>());
  }
  return spec;
}

}  // namespace

ExperimentConfig config_from_json(const json& doc, const std::filesystem::path& base_dir) {
  expect_keys(doc, "", {"landscape", "controller", "ga", "size_policy", "population_size", "budget", "replicas",
                        "seed", "format", "stop_at_optimum", "master_copies", "sweep"});
  ExperimentConfig config;
  if (doc.contains("landscape")) config.landscape = parse_landscape(doc["landscape"], base_dir);
  if (doc.contains("controller")) config.control = parse_controller(doc["controller"]);
  if (doc.contains("ga")) config.ga = parse_ga(doc["ga"]);
  if (doc.contains("size_policy")) config.size_policy = parse_size_policy(doc["size_policy"]);
  if (doc.contains("sweep")) config.sweep = parse_sweep(doc["sweep"]);
  config.population_size = read<std::size_t>(doc, "population_size", "population_size", config.population_size);
  config.budget = read<std::size_t>(doc, "budget", "budget", config.budget);
  config.replicas = read<std::size_t>(doc, "replicas", "replicas", config.replicas);
  config.seed = read<std::uint64_t>(doc, "seed", "seed", config.seed);
  config.format = parse_output_format(read<std::string>(doc, "format", "format", "csv"));
  config.stop_at_optimum = read<bool>(doc, "stop_at_optimum", "stop_at_optimum", config.stop_at_optimum);
  config.master_copies = read<std::size_t>(doc, "master_copies", "master_copies", config.master_copies);
  config.validate();
  return config;
}

json to_json(const LandscapeSpec& spec) {
  json out{{"kind", to_string(spec.kind)}};
  switch (spec.kind) {
    case LandscapeKind::SharpPeak:
      out["n"] = spec.n;
      out["sigma"] = spec.sigma;
      break;
    case LandscapeKind::RoyalRoad:
    case LandscapeKind::DeceptiveTrap:
      out["n"] = spec.n;
      out["block"] = spec.block;
      break;
    case LandscapeKind::Custom:
      out["file"] = spec.file;
      break;
  }
  out["safety_factor"] = spec.safety_factor;
  return out;
}

json to_json(const ExperimentConfig& config) {
  json controller;
  if (const auto* fixed = std::get_if<FixedMutation>(&config.control)) {
    controller = {{"kind", "FixedMutation"}, {"p_m", fixed->rate}};
  } else {
    controller = {{"kind", to_string(std::get<ControllerKind>(config.control))}};
  }
  json selection{{"kind", to_string(config.ga.selection.kind)}};
  if (config.ga.selection.kind == SelectionKind::Tournament) selection["k"] = config.ga.selection.tournament_size;

  json out{
      {"landscape", to_json(config.landscape)},
      {"controller", controller},
      {"ga",
       {{"crossover_rate", config.ga.crossover_rate},
        {"crossover", to_string(config.ga.crossover)},
        {"selection", selection},
        {"fitness_tolerance", config.ga.fitness_tolerance}}},
      {"size_policy",
       {{"growth", config.size_policy.growth},
        {"max_size", config.size_policy.max_size},
        {"convergence_threshold", config.size_policy.convergence_threshold
                                      ? json(*config.size_policy.convergence_threshold)
                                      : json(nullptr)}}},
      {"population_size", config.population_size},
      {"budget", config.budget},
      {"replicas", config.replicas},
      {"seed", config.seed},
      {"format", to_string(config.format)},
      {"stop_at_optimum", config.stop_at_optimum},
      {"master_copies", config.master_copies},
  };
  if (config.sweep) out["sweep"] = {{"axis", to_string(config.sweep->axis)}, {"values", config.sweep->values}};
  return out;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(e.what(), path.string());
  }
  return config_from_json(doc, path.parent_path());
}

}  // namespace critga
