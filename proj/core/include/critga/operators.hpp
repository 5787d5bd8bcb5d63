#pragma once

#include <cstddef>
#include <string_view>

#include "critga/landscape.hpp"
#include "critga/population.hpp"
#include "critga/record.hpp"
#include "critga/rng.hpp"

namespace critga {

enum class SelectionKind { FitnessProportional, Tournament };
enum class CrossoverKind { OnePoint, Uniform };

std::string_view to_string(SelectionKind kind) noexcept;
std::string_view to_string(CrossoverKind kind) noexcept;
SelectionKind parse_selection_kind(std::string_view text);
CrossoverKind parse_crossover_kind(std::string_view text);

struct Selection {
  SelectionKind kind = SelectionKind::FitnessProportional;
  std::size_t tournament_size = 2;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct GAParams {
  double mutation_rate = 0.0;
  double crossover_rate = 0.7;
  Selection selection;
  CrossoverKind crossover = CrossoverKind::OnePoint;
  /// Relative tolerance for fitness comparisons on real-valued landscapes.
  double fitness_tolerance = 1e-9;

  /// Throws ConfigError. Tournament size is checked against `population_size` when it is non-zero.
  void validate(std::size_t population_size = 0) const;

  friend bool operator==(const GAParams&, const GAParams&) = default;
};

enum class Trend { Decreased, Equal, Increased };

/// Three-way fitness comparison: exact on integer-valued landscapes, relative tolerance otherwise.
class FitnessComparator {
 public:
  FitnessComparator(double tolerance, bool exact) : tolerance_(tolerance), exact_(exact) {}
  FitnessComparator(const GAParams& params, const FitnessLandscape& landscape)
      : FitnessComparator(params.fitness_tolerance, landscape.integer_valued()) {}

  /// Trend going from `before` to `after`.
  Trend compare(double before, double after) const noexcept;

 private:
  double tolerance_;
  bool exact_;
};

/// m genotypes uniform over {0,1}^n. Throws ConfigError for m < 2.
Population init_population(std::size_t m, const FitnessLandscape& landscape, Rng& rng);

/// New population of the same size, drawn by fitness-proportional or tournament selection.
Population select(const Population& population, const GAParams& params, Rng& rng);

/// Flips each bit of each member independently with probability `rate`.
Population mutate(Population population, double rate, const FitnessLandscape& landscape, Rng& rng);

/// Recombines consecutive pairs (0,1), (2,3), ... each with probability params.crossover_rate.
/// An odd last member is left untouched.
Population crossover(Population population, const GAParams& params, const FitnessLandscape& landscape, Rng& rng);

/// One-point recombination of a pair at `cut` in [1, n-1]: suffixes from `cut` on are swapped.
void one_point_crossover(Genotype& a, Genotype& b, std::size_t cut) noexcept;

/// Index of the fittest member; the lowest index wins ties.
std::size_t best_index(const Population& population) noexcept;
Member best_individual(const Population& population);

struct StepResult {
  Population population;
  GenerationRecord record;
};

/// select -> mutate -> crossover, then the record of the resulting population.
/// Controller-related record fields (alpha, beta, actions) are left for the caller.
StepResult generation_step(const Population& population, const GAParams& params,
                           const FitnessLandscape& landscape, Rng& rng);

/// Fills the population-level observables of a record.
GenerationRecord observe(const Population& population, std::size_t generation, double mutation_rate);

}  // namespace critga
