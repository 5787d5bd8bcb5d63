#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "critga/config.hpp"
#include "critga/experiment.hpp"
#include "critga/record.hpp"

namespace critga {

/// CSV column order for generation records.
inline constexpr std::string_view kRecordColumns =
    "generation,best_fitness,mean_fitness,p_m,alpha,beta,population_size,diversity,action";

/// Provenance object written at the top of every output: artifact, version, RNG, seed, config.
nlohmann::json make_header(const ExperimentConfig& config);

/// Writes one record list. CSV: a '# <header json>' line, the column line, one row per record.
/// JSON: {"header": ..., "records": [...]}.
void emit_records(std::ostream& out, std::span<const GenerationRecord> records, OutputFormat format,
                  const nlohmann::json& header);

struct ParsedRecords {
  nlohmann::json header;
  std::vector<GenerationRecord> records;
};

/// Inverse of emit_records. CSV carries no genotype column, so best_genotype stays empty there.
ParsedRecords parse_records(std::istream& in, OutputFormat format);

/// Multi-replica run output. CSV adds a '# replica <summary json>' line before each replica's rows.
void write_run(std::ostream& out, const ExperimentConfig& config, std::span<const ReplicaResult> results,
               OutputFormat format);

struct ParsedRun {
  nlohmann::json header;
  std::vector<ReplicaResult> replicas;
};

ParsedRun parse_run(std::istream& in, OutputFormat format);

/// Aggregate table for sweep/compare: label, value, replicas, hit_rate, median_first_hit, mean_evaluations.
void write_table(std::ostream& out, std::span<const AggregateRow> rows, OutputFormat format,
                 const nlohmann::json& header);

nlohmann::json to_json(const RunSummary& summary);
RunSummary summary_from_json(const nlohmann::json& doc);

/// Opens `path` for writing and hands the stream to `write`. Throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& write);

}  // namespace critga
