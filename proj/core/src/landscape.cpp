#include "critga/landscape.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga {

namespace {

void check_length(std::size_t n) {
  if (n == 0 || n > Genotype::kMaxLength) {
    throw ConfigError(fmt::format("genotype length must be in [1, 64], got {}", n), "landscape.n");
  }
}

void check_blocks(std::size_t n, std::size_t block) {
  check_length(n);
  if (block == 0 || n % block != 0) {
    throw ConfigError(fmt::format("block size {} must be positive and divide n = {}", block, n),
                      "landscape.block");
  }
}

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

}  // namespace

std::string_view to_string(LandscapeKind kind) noexcept {
  switch (kind) {
    case LandscapeKind::SharpPeak: return "SharpPeak";
    case LandscapeKind::RoyalRoad: return "RoyalRoad";
    case LandscapeKind::DeceptiveTrap: return "DeceptiveTrap";
    case LandscapeKind::Custom: return "Custom";
  }
  return "?";
}

LandscapeKind parse_landscape_kind(std::string_view text) {
  for (auto kind : {LandscapeKind::SharpPeak, LandscapeKind::RoyalRoad, LandscapeKind::DeceptiveTrap,
                    LandscapeKind::Custom}) {
    if (text == to_string(kind)) return kind;
  }
  throw ConfigError(fmt::format("unknown landscape kind '{}'", text), "landscape.kind");
}

FitnessLandscape FitnessLandscape::sharp_peak(std::size_t n, double sigma) {
  check_length(n);
  if (!(sigma > 1.0) || !std::isfinite(sigma)) {
    throw ConfigError(fmt::format("peak height must be finite and > 1, got {}", sigma), "landscape.sigma");
  }
  FitnessLandscape l;
  l.kind_ = LandscapeKind::SharpPeak;
  l.n_ = n;
  l.sigma_ = sigma;
  l.max_ = sigma;
  l.min_ = 1.0;
  l.integer_valued_ = is_integer(sigma);
  return l;
}

FitnessLandscape FitnessLandscape::royal_road(std::size_t n, std::size_t block) {
  check_blocks(n, block);
  FitnessLandscape l;
  l.kind_ = LandscapeKind::RoyalRoad;
  l.n_ = n;
  l.block_ = block;
  l.max_ = 1.0 + static_cast<double>(n / block);
  l.min_ = 1.0;
  return l;
}

FitnessLandscape FitnessLandscape::deceptive_trap(std::size_t n, std::size_t block) {
  check_blocks(n, block);
  FitnessLandscape l;
  l.kind_ = LandscapeKind::DeceptiveTrap;
  l.n_ = n;
  l.block_ = block;
  const auto blocks = static_cast<double>(n / block);
  // Per block: b+1 when complete, otherwise b - ones, whose least value is 1 at ones = b-1.
  l.max_ = blocks * static_cast<double>(block + 1);
  l.min_ = blocks;
  return l;
}

FitnessLandscape FitnessLandscape::custom(std::size_t n, std::vector<double> table, double ratio_bound) {
  if (n == 0 || n > kMaxCustomLength) {
    throw ConfigError(fmt::format("custom landscapes support 1 <= n <= {}, got {}", kMaxCustomLength, n),
                      "landscape.n");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw ConfigError(fmt::format("custom table needs {} entries, got {}", std::size_t{1} << n, table.size()),
                      "landscape.table");
  }
  FitnessLandscape l;
  l.kind_ = LandscapeKind::Custom;
  l.n_ = n;
  l.max_ = table.front();
  l.min_ = table.front();
  for (double f : table) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw ConfigError(fmt::format("fitness must be finite and > 0, got {}", f), "landscape.table");
    }
    l.max_ = std::max(l.max_, f);
    l.min_ = std::min(l.min_, f);
    l.integer_valued_ = l.integer_valued_ && is_integer(f);
  }
  if (!(ratio_bound > l.max_ / l.min_) || !std::isfinite(ratio_bound)) {
    throw ConfigError(fmt::format("ratio_bound {} must exceed max/min = {}", ratio_bound, l.max_ / l.min_),
                      "landscape.ratio_bound");
  }
  l.ratio_bound_ = ratio_bound;
  l.table_ = std::make_shared<const std::vector<double>>(std::move(table));
  return l;
}

FitnessLandscape FitnessLandscape::parse_custom(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::vector<double> table;
  std::vector<bool> seen;
  std::optional<double> ratio_bound;

  auto fail = [&](const std::string& what) {
    throw ConfigError(fmt::format("line {}: {}", line_no, what), "landscape.file");
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (ratio_bound) fail("'ratio_bound' must be the final line");

    if (n == 0) {
      if (head != "n") fail("first line must be 'n <int>'");
      long long value = 0;
      if (!(fields >> value) || value <= 0 || value > static_cast<long long>(kMaxCustomLength)) {
        fail(fmt::format("n must be an integer in [1, {}]", kMaxCustomLength));
      }
      n = static_cast<std::size_t>(value);
      table.assign(std::size_t{1} << n, 1.0);
      seen.assign(table.size(), false);
    } else if (head == "ratio_bound") {
      double value = 0.0;
      if (!(fields >> value)) fail("ratio_bound needs a real value");
      ratio_bound = value;
    } else {
      if (head.size() != n) fail(fmt::format("bitstring '{}' does not have length {}", head, n));
      const Genotype g = Genotype::parse(head);
      double value = 0.0;
      if (!(fields >> value)) fail("entry needs '<bitstring> <fitness>'");
      if (seen[g.word()]) fail(fmt::format("duplicate entry for {}", head));
      seen[g.word()] = true;
      table[g.word()] = value;
    }
    std::string extra;
    if (fields >> extra) fail(fmt::format("unexpected trailing token '{}'", extra));
  }
  if (n == 0) fail("missing 'n <int>' header");
  if (!ratio_bound) fail("missing mandatory 'ratio_bound <real>' line");
  return custom(n, std::move(table), *ratio_bound);
}

FitnessLandscape FitnessLandscape::load_custom(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open landscape file " + path.string());
  return parse_custom(in);
}

double FitnessLandscape::evaluate(const Genotype& g) const {
  if (g.size() != n_) {
    throw ConfigError(fmt::format("genotype length {} does not match landscape length {}", g.size(), n_),
                      "genotype");
  }
  return evaluate_word(g.word());
}

double FitnessLandscape::evaluate_word(std::uint64_t word) const noexcept {
  switch (kind_) {
    case LandscapeKind::SharpPeak:
      return word == Genotype::mask_for(n_) ? sigma_ : 1.0;
    case LandscapeKind::RoyalRoad: {
      const std::uint64_t block_mask = Genotype::mask_for(block_);
      double f = 1.0;
      for (std::size_t start = 0; start < n_; start += block_) {
        if (((word >> start) & block_mask) == block_mask) f += 1.0;
      }
      return f;
    }
    case LandscapeKind::DeceptiveTrap: {
      const std::uint64_t block_mask = Genotype::mask_for(block_);
      std::size_t total = 0;
      for (std::size_t start = 0; start < n_; start += block_) {
        const auto ones = static_cast<std::size_t>(std::popcount((word >> start) & block_mask));
        total += ones == block_ ? block_ + 1 : block_ - ones;
      }
      return static_cast<double>(total);
    }
    case LandscapeKind::Custom:
      return (*table_)[word];
  }
  return 1.0;
}

double FitnessLandscape::fitness_ratio_bound(double safety) const {
  if (kind_ == LandscapeKind::Custom) return ratio_bound_;
  if (!(safety >= 1.0) || !std::isfinite(safety)) {
    throw ConfigError(fmt::format("safety factor must be >= 1, got {}", safety), "landscape.safety_factor");
  }
  return max_ / min_ * safety;
}

Genotype FitnessLandscape::master_genotype() const {
  if (kind_ == LandscapeKind::Custom) {
    throw UnsupportedQuery("custom landscapes have no designated master genotype");
  }
  return Genotype::ones(n_);
}

std::vector<double> FitnessLandscape::class_fitness() const {
  if (!class_symmetric()) {
    throw UnsupportedQuery(fmt::format("{} landscape is not class-symmetric", to_string(kind_)));
  }
  std::vector<double> profile(n_ + 1, 1.0);
  profile[0] = sigma_;
  return profile;
}

std::string FitnessLandscape::describe() const {
  switch (kind_) {
    case LandscapeKind::SharpPeak: return fmt::format("SharpPeak(n={}, sigma={})", n_, sigma_);
    case LandscapeKind::RoyalRoad: return fmt::format("RoyalRoad(n={}, block={})", n_, block_);
    case LandscapeKind::DeceptiveTrap: return fmt::format("DeceptiveTrap(n={}, block={})", n_, block_);
    case LandscapeKind::Custom: return fmt::format("Custom(n={})", n_);
  }
  return "?";
}

}  // namespace critga
