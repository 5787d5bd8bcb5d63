#include "critga/emit.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "critga/error.hpp"
#include "critga/rng.hpp"
#include "critga/version.hpp"

namespace critga {

using nlohmann::json;

namespace {

constexpr std::size_t kRecordFieldCount = 9;

std::string csv_row(const GenerationRecord& r) {
  // {} prints the shortest representation that parses back to the same double.
  return fmt::format("{},{},{},{},{},{},{},{},{}", r.generation, r.best_fitness, r.mean_fitness, r.mutation_rate,
                     r.alpha, r.beta, r.population_size, r.diversity, format_actions(r.actions, r.generation == 0));
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    parts.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

double to_double(std::string_view text) {
  // strtod rather than from_chars: GCC 11's from_chars<double> is not reliable everywhere.
  const std::string owned(text);
  char* end = nullptr;
  const double v = std::strtod(owned.c_str(), &end);
  if (end == owned.c_str() || *end != '\0') throw ConfigError(fmt::format("bad number '{}'", text), "csv");
  return v;
}

std::size_t to_size(std::string_view text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("bad integer '{}'", text), "csv");
  }
  return v;
}

GenerationRecord parse_csv_row(std::string_view line) {
  const auto fields = split(line, ',');
  if (fields.size() != kRecordFieldCount) {
    throw ConfigError(fmt::format("expected {} columns, got {}", kRecordFieldCount, fields.size()), "csv");
  }
  GenerationRecord r;
  r.generation = to_size(fields[0]);
  r.best_fitness = to_double(fields[1]);
  r.mean_fitness = to_double(fields[2]);
  r.mutation_rate = to_double(fields[3]);
  r.alpha = to_double(fields[4]);
  r.beta = to_double(fields[5]);
  r.population_size = to_size(fields[6]);
  r.diversity = to_double(fields[7]);
  r.actions = parse_actions(fields[8]);
  return r;
}

json record_to_json(const GenerationRecord& r) {
  return {{"generation", r.generation},
          {"best_fitness", r.best_fitness},
          {"mean_fitness", r.mean_fitness},
          {"p_m", r.mutation_rate},
          {"alpha", r.alpha},
          {"beta", r.beta},
          {"population_size", r.population_size},
          {"diversity", r.diversity},
          {"action", format_actions(r.actions, r.generation == 0)},
          {"best_genotype", r.best_genotype.size() == 0 ? std::string() : r.best_genotype.to_string()}};
}

GenerationRecord record_from_json(const json& j) {
  GenerationRecord r;
  r.generation = j.at("generation").get<std::size_t>();
  r.best_fitness = j.at("best_fitness").get<double>();
  r.mean_fitness = j.at("mean_fitness").get<double>();
  r.mutation_rate = j.at("p_m").get<double>();
  r.alpha = j.at("alpha").get<double>();
  r.beta = j.at("beta").get<double>();
  r.population_size = j.at("population_size").get<std::size_t>();
  r.diversity = j.at("diversity").get<double>();
  r.actions = parse_actions(j.at("action").get<std::string>());
  const auto genotype = j.value("best_genotype", std::string());
  if (!genotype.empty()) r.best_genotype = Genotype::parse(genotype);
  return r;
}

json records_to_json(std::span<const GenerationRecord> records) {
  json out = json::array();
  for (const auto& r : records) out.push_back(record_to_json(r));
  return out;
}

json parse_json_document(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(e.what(), "json");
  }
}

}  // namespace

json make_header(const ExperimentConfig& config) {
  return {{"artifact", kArtifactName}, {"version", kVersion}, {"rng", Rng::kAlgorithm},
          {"seed", config.seed},       {"config", to_json(config)}};
}

void emit_records(std::ostream& out, std::span<const GenerationRecord> records, OutputFormat format,
                  const json& header) {
  if (format == OutputFormat::Json) {
    out << json{{"header", header}, {"records", records_to_json(records)}}.dump(2) << '\n';
    return;
  }
  out << "# " << header.dump() << '\n' << kRecordColumns << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

ParsedRecords parse_records(std::istream& in, OutputFormat format) {
  ParsedRecords parsed;
  if (format == OutputFormat::Json) {
    const json doc = parse_json_document(in);
    parsed.header = doc.at("header");
    for (const auto& r : doc.at("records")) parsed.records.push_back(record_from_json(r));
    return parsed;
  }
  std::string line;
  bool columns_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      parsed.header = json::parse(line.substr(2));
    } else if (!columns_seen) {
      if (line != kRecordColumns) throw ConfigError("unexpected column header '" + line + "'", "csv");
      columns_seen = true;
    } else {
      parsed.records.push_back(parse_csv_row(line));
    }
  }
  return parsed;
}

json to_json(const RunSummary& s) {
  return {{"replica", s.replica},
          {"hit", s.hit},
          {"first_hit_generation", s.first_hit_generation},
          {"final_best_fitness", s.final_best_fitness},
          {"total_evaluations", s.total_evaluations},
          {"final_p_m", s.final_mutation_rate},
          {"final_population_size", s.final_population_size},
          {"terminated", to_string(s.termination)}};
}

RunSummary summary_from_json(const json& j) {
  RunSummary s;
  s.replica = j.at("replica").get<std::size_t>();
  s.hit = j.at("hit").get<bool>();
  s.first_hit_generation = j.at("first_hit_generation").get<std::size_t>();
  s.final_best_fitness = j.at("final_best_fitness").get<double>();
  s.total_evaluations = j.at("total_evaluations").get<std::uint64_t>();
  s.final_mutation_rate = j.at("final_p_m").get<double>();
  s.final_population_size = j.at("final_population_size").get<std::size_t>();
  s.termination = j.at("terminated").get<std::string>() == "optimum" ? Termination::Optimum : Termination::Budget;
  return s;
}

void write_run(std::ostream& out, const ExperimentConfig& config, std::span<const ReplicaResult> results,
               OutputFormat format) {
  const json header = make_header(config);
  if (format == OutputFormat::Json) {
    json replicas = json::array();
    for (const auto& r : results) {
      replicas.push_back({{"summary", to_json(r.summary)}, {"records", records_to_json(r.records)}});
    }
    out << json{{"header", header}, {"replicas", replicas}}.dump(2) << '\n';
    return;
  }
  out << "# " << header.dump() << '\n' << kRecordColumns << '\n';
  for (const auto& r : results) {
    out << "# replica " << to_json(r.summary).dump() << '\n';
    for (const auto& record : r.records) out << csv_row(record) << '\n';
  }
}

ParsedRun parse_run(std::istream& in, OutputFormat format) {
  ParsedRun parsed;
  if (format == OutputFormat::Json) {
    const json doc = parse_json_document(in);
    parsed.header = doc.at("header");
    for (const auto& r : doc.at("replicas")) {
      ReplicaResult result;
      result.summary = summary_from_json(r.at("summary"));
      for (const auto& record : r.at("records")) result.records.push_back(record_from_json(record));
      parsed.replicas.push_back(std::move(result));
    }
    return parsed;
  }
  std::string line;
  bool columns_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# replica ", 0) == 0) {
      parsed.replicas.push_back({summary_from_json(json::parse(line.substr(10))), {}});
    } else if (line.rfind("# ", 0) == 0) {
      parsed.header = json::parse(line.substr(2));
    } else if (!columns_seen) {
      if (line != kRecordColumns) throw ConfigError("unexpected column header '" + line + "'", "csv");
      columns_seen = true;
    } else {
      if (parsed.replicas.empty()) throw ConfigError("record row before any replica line", "csv");
      parsed.replicas.back().records.push_back(parse_csv_row(line));
    }
  }
  return parsed;
}

void write_table(std::ostream& out, std::span<const AggregateRow> rows, OutputFormat format, const json& header) {
  if (format == OutputFormat::Json) {
    json table = json::array();
    for (const auto& r : rows) {
      table.push_back({{"label", r.label},
                       {"value", r.value},
                       {"replicas", r.replicas},
                       {"hit_rate", r.hit_rate},
                       {"median_first_hit", r.median_first_hit},
                       {"mean_evaluations", r.mean_evaluations}});
    }
    out << json{{"header", header}, {"rows", table}}.dump(2) << '\n';
    return;
  }
  out << "# " << header.dump() << '\n' << "label,value,replicas,hit_rate,median_first_hit,mean_evaluations\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{},{},{}\n", r.label, r.value, r.replicas, r.hit_rate, r.median_first_hit,
                       r.mean_evaluations);
  }
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace critga
