#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "critga/dichotomy.hpp"
#include "critga/landscape.hpp"
#include "critga/operators.hpp"
#include "critga/population.hpp"
#include "critga/record.hpp"
#include "critga/rng.hpp"

namespace critga {

/// Basic: mutation control only. Elitist: also reintroduces a lost best.
/// ElitistWithSize: elitist mutation control plus population-size control starting from two.
enum class ControllerKind { Basic, Elitist, ElitistWithSize };

std::string_view to_string(ControllerKind kind) noexcept;
ControllerKind parse_controller_kind(std::string_view text);

/// Uncontrolled baseline: constant per-bit mutation probability.
struct FixedMutation {
  double rate = 0.0;

  friend bool operator==(const FixedMutation&, const FixedMutation&) = default;
};

using MutationControl = std::variant<ControllerKind, FixedMutation>;

std::string describe(const MutationControl& control);

/// What the controller needs besides the observations themselves.
struct ControlContext {
  double ratio_bound = 0.0;
  std::size_t n = 0;
  FitnessComparator comparator{1e-9, false};
};

struct ControlOutcome {
  DichotomyState state;
  Population population;
  /// Best member of `population`; becomes the reference best of the next generation.
  Member best;
  std::vector<ControlAction> actions;
};

/// One pass through the branch logic of the selected controller.
///
/// `previous_best` is the best of the previous generation, `current_best` the best of
/// `population` as produced by the generation step. Random members for population growth
/// are drawn from `rng` and evaluated on `landscape`.
ControlOutcome controller_step(ControllerKind kind, const Member& previous_best, const Member& current_best,
                               const DichotomyState& state, Population population, const SizePolicy& policy,
                               const ControlContext& context, const FitnessLandscape& landscape, Rng& rng);

/// Replaces the worst member (lowest index on ties) with `elite`.
void reintroduce(Population& population, const Member& elite);

enum class Termination { Budget, Optimum };

std::string_view to_string(Termination termination) noexcept;

struct RunOptions {
  /// Initial size for Basic, Elitist and fixed-mutation runs. ElitistWithSize always starts at two.
  std::size_t population_size = 64;
  /// Maximum number of generations after the initial one.
  std::size_t budget = 1000;
  bool stop_at_optimum = true;
  /// Number of initial members replaced by the master genotype.
  std::size_t master_copies = 0;
  /// Safety factor applied to max/min when computing the ratio bound c.
  double safety_factor = FitnessLandscape::kDefaultSafetyFactor;
};

struct RunResult {
  /// Record 0 is the initial population, record g the population after generation g.
  std::vector<GenerationRecord> records;
  Termination termination = Termination::Budget;
};

RunResult run_controlled_ga(const MutationControl& control, const FitnessLandscape& landscape,
                            const GAParams& params, const SizePolicy& policy, const RunOptions& options, Rng& rng);

RunResult run_controlled_ga(const MutationControl& control, const FitnessLandscape& landscape,
                            const GAParams& params, const SizePolicy& policy, const RunOptions& options,
                            std::uint64_t seed);

}  // namespace critga
