// critga: run, sweep and compare controlled genetic algorithms; locate the error threshold.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime/convergence error, 3 I/O error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "critga/config.hpp"
#include "critga/emit.hpp"
#include "critga/error.hpp"
#include "critga/experiment.hpp"
#include "critga/quasispecies.hpp"
#include "critga/version.hpp"

namespace {

using namespace critga;
namespace qs = critga::quasispecies;

enum ExitCode : int { kOk = 0, kConfig = 1, kRuntime = 2, kIo = 3 };

struct CommonOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> replicas;
  std::string format;
  std::string out;
  std::size_t threads = 1;
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--seed", opts.seed, "Master seed (overrides the config)");
  cmd.add_option("--replicas", opts.replicas, "Replica count (overrides the config)")->check(CLI::PositiveNumber);
  cmd.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--out", opts.out, "Output file (default: stdout)");
  cmd.add_option("--threads", opts.threads, "Worker threads for replicas")->check(CLI::PositiveNumber);
}

ExperimentConfig apply(ExperimentConfig config, const CommonOptions& opts) {
  if (opts.seed) config.seed = *opts.seed;
  if (opts.replicas) config.replicas = *opts.replicas;
  if (!opts.format.empty()) config.format = parse_output_format(opts.format);
  config.validate();
  return config;
}

void write_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
  } else {
    write_file(path, write);
  }
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    char* stop = nullptr;
    const double v = std::strtod(item.c_str(), &stop);
    if (item.empty() || *stop != '\0') throw ConfigError("bad number '" + item + "'", "--values");
    values.push_back(v);
    start = end + 1;
  }
  return values;
}

int run_command(const std::string& config_path, const CommonOptions& opts) {
  const ExperimentConfig config = apply(load_config(config_path), opts);
  const auto results = run_experiment(config, opts.threads);
  write_output(opts.out, [&](std::ostream& out) { write_run(out, config, results, config.format); });
  return kOk;
}

int sweep_command(const std::string& config_path, const std::string& axis_text, const std::string& values_text,
                  const CommonOptions& opts) {
  const ExperimentConfig config = apply(load_config(config_path), opts);
  SweepSpec spec = config.sweep.value_or(SweepSpec{});
  if (!axis_text.empty()) spec.axis = parse_sweep_axis(axis_text);
  if (!values_text.empty()) spec.values = parse_values(values_text);
  if (spec.values.empty()) throw ConfigError("no sweep values given (use --values or a 'sweep' section)", "sweep");

  const auto rows = sweep(config, spec.axis, spec.values, opts.threads);
  nlohmann::json header = make_header(config);
  header["axis"] = to_string(spec.axis);
  header["values"] = spec.values;
  write_output(opts.out, [&](std::ostream& out) { write_table(out, rows, config.format, header); });
  return kOk;
}

int compare_command(const std::vector<std::string>& config_paths, const CommonOptions& opts) {
  std::vector<ExperimentConfig> configs;
  for (const auto& path : config_paths) configs.push_back(apply(load_config(path), opts));
  const auto rows = compare(configs, opts.threads);
  nlohmann::json header = make_header(configs.front());
  header["configs"] = nlohmann::json::array();
  for (const auto& c : configs) header["configs"].push_back(to_json(c));
  write_output(opts.out, [&](std::ostream& out) { write_table(out, rows, configs.front().format, header); });
  return kOk;
}

struct ThresholdArgs {
  std::size_t n = 20;
  double sigma = 2.0;
  double tol = 1e-7;
  std::string criterion = "survival";
  double crossing = 2.0;
  std::size_t points = 50;
  double p_max = 0.0;
  std::string format = "csv";
  std::string out;
};

int threshold_command(const ThresholdArgs& args) {
  qs::ThresholdOptions options;
  options.tolerance = args.tol;
  options.crossing = args.crossing;
  options.criterion =
      args.criterion == "ratio" ? qs::ThresholdCriterion::NeutralRatio : qs::ThresholdCriterion::MasterSurvival;

  const double detected = qs::detect_error_threshold(args.n, args.sigma, options);
  const double exact = qs::exact_threshold(args.n, args.sigma);
  const double first_order = qs::first_order_threshold(args.n, args.sigma);
  const double p_max = args.p_max > 0.0 ? args.p_max : std::min(0.5, 2.0 * first_order);
  const auto samples = qs::scan_master_frequency(args.n, args.sigma, p_max, args.points, options.stationary);

  const nlohmann::json header{{"artifact", kArtifactName}, {"version", kVersion},  {"n", args.n},
                              {"sigma", args.sigma},       {"tol", args.tol},       {"criterion", args.criterion},
                              {"crossing", args.crossing}, {"detected", detected}, {"exact", exact},
                              {"first_order", first_order}};
  write_output(args.out, [&](std::ostream& out) {
    if (args.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& s : samples) rows.push_back({{"p", s.p}, {"freq0", s.master_frequency}, {"ratio", s.ratio}});
      out << nlohmann::json{{"header", header}, {"samples", rows}}.dump(2) << '\n';
    } else {
      out << "# " << header.dump() << "\np,freq0,ratio\n";
      for (const auto& s : samples) out << fmt::format("{},{},{}\n", s.p, s.master_frequency, s.ratio);
    }
  });
  std::cerr << fmt::format("n={} sigma={} detected={:.6g} exact={:.6g} ln(sigma)/n={:.6g}\n", args.n, args.sigma,
                           detected, exact, first_order);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genetic algorithm with critical control of mutation and population size"};
  app.set_version_flag("--version", std::string(critga::kVersion));
  app.require_subcommand(1);

  CommonOptions common;
  std::string config_path;
  std::vector<std::string> config_paths;
  std::string axis;
  std::string values;
  ThresholdArgs threshold;

  auto* run = app.add_subcommand("run", "Run replicas of one experiment and write per-generation records");
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  add_common(*run, common);

  auto* sweep_cmd = app.add_subcommand("sweep", "Aggregate replicas over one parameter axis");
  sweep_cmd->add_option("--config", config_path, "Experiment config (JSON)")->required();
  sweep_cmd->add_option("--axis", axis, "Axis: p_m, m, sigma or n")->check(CLI::IsMember({"p_m", "m", "sigma", "n"}));
  sweep_cmd->add_option("--values", values, "Comma-separated axis values");
  add_common(*sweep_cmd, common);

  auto* compare_cmd = app.add_subcommand("compare", "Aggregate several configs on a shared landscape");
  compare_cmd->add_option("--config", config_paths, "Experiment configs (repeat)")
      ->required();
  add_common(*compare_cmd, common);

  auto* threshold_cmd = app.add_subcommand("threshold", "Locate the quasispecies error threshold");
  threshold_cmd->add_option("--n", threshold.n, "Genotype length")->required()->check(CLI::PositiveNumber);
  threshold_cmd->add_option("--sigma", threshold.sigma, "Peak height (> 1)")->required();
  threshold_cmd->add_option("--tol", threshold.tol, "Absolute tolerance on p")->check(CLI::PositiveNumber);
  threshold_cmd->add_option("--criterion", threshold.criterion, "survival or ratio")
      ->check(CLI::IsMember({"survival", "ratio"}));
  threshold_cmd->add_option("--crossing", threshold.crossing, "Crossing level for the ratio criterion");
  threshold_cmd->add_option("--points", threshold.points, "Grid points in the scan")->check(CLI::PositiveNumber);
  threshold_cmd->add_option("--p-max", threshold.p_max, "Upper end of the scan (default min(0.5, 2 ln(sigma)/n))");
  threshold_cmd->add_option("--format", threshold.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  threshold_cmd->add_option("--out", threshold.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*run) return run_command(config_path, common);
    if (*sweep_cmd) return sweep_command(config_path, axis, values, common);
    if (*compare_cmd) return compare_command(config_paths, common);
    if (*threshold_cmd) return threshold_command(threshold);
  } catch (const critga::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const critga::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const critga::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const critga::UnsupportedQuery& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kOk;
}
