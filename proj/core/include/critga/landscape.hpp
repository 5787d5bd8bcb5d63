#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "critga/genotype.hpp"

namespace critga {

enum class LandscapeKind { SharpPeak, RoyalRoad, DeceptiveTrap, Custom };

std::string_view to_string(LandscapeKind kind) noexcept;
LandscapeKind parse_landscape_kind(std::string_view text);

/// Immutable map from genotypes of length n to strictly positive fitness.
///
/// Built-in kinds have their optimum at the all-ones genotype:
///  - SharpPeak: sigma at the master, 1 elsewhere.
///  - RoyalRoad: 1 + number of complete all-ones blocks of width `block`.
///  - DeceptiveTrap: sum over blocks of (block - ones) for a partial block, block + 1 for a full one.
///  - Custom: tabulated values for n <= 20, with a caller-supplied max/min ratio bound.
///
/// Copies share the custom table, so a landscape can be handed to many concurrent runs.
class FitnessLandscape {
 public:
  static constexpr std::size_t kMaxCustomLength = 20;
  static constexpr double kDefaultSafetyFactor = 2.0;

  static FitnessLandscape sharp_peak(std::size_t n, double sigma);
  static FitnessLandscape royal_road(std::size_t n, std::size_t block);
  static FitnessLandscape deceptive_trap(std::size_t n, std::size_t block);
  /// `table` is indexed by Genotype::word() and must hold 2^n entries.
  static FitnessLandscape custom(std::size_t n, std::vector<double> table, double ratio_bound);

  /// Reads the line-oriented custom format:
  ///   n <int>
  ///   <bitstring> <fitness>     (any number; absent genotypes score 1.0)
  ///   ratio_bound <real>        (mandatory, last)
  static FitnessLandscape parse_custom(std::istream& in);
  static FitnessLandscape load_custom(const std::filesystem::path& path);

  LandscapeKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  double sigma() const noexcept { return sigma_; }
  std::size_t block() const noexcept { return block_; }

  /// True when fitness depends only on the Hamming distance to the master (SharpPeak).
  bool class_symmetric() const noexcept { return kind_ == LandscapeKind::SharpPeak; }
  /// True when every attainable fitness is an integer, so fitness comparisons can be exact.
  bool integer_valued() const noexcept { return integer_valued_; }

  double evaluate(const Genotype& g) const;

  double max_fitness() const noexcept { return max_; }
  double min_fitness() const noexcept { return min_; }

  /// A value c with c >= max/min: (max/min) * safety for built-ins, the supplied bound for Custom.
  double fitness_ratio_bound(double safety = kDefaultSafetyFactor) const;

  /// All-ones for built-ins; throws UnsupportedQuery for Custom.
  Genotype master_genotype() const;

  /// Fitness of each error class k = 0..n (distance from the master). Class-symmetric kinds only.
  std::vector<double> class_fitness() const;

  std::string describe() const;

 private:
  FitnessLandscape() = default;

  double evaluate_word(std::uint64_t word) const noexcept;

  LandscapeKind kind_ = LandscapeKind::SharpPeak;
  std::size_t n_ = 0;
  double sigma_ = 0.0;
  std::size_t block_ = 0;
  double max_ = 1.0;
  double min_ = 1.0;
  double ratio_bound_ = 0.0;
  bool integer_valued_ = true;
  std::shared_ptr<const std::vector<double>> table_;
};

}  // namespace critga
