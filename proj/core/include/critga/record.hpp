#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "critga/genotype.hpp"

namespace critga {

/// What a controller did in one step. A step may emit several actions.
enum class ControlAction {
  IncreaseMutation,
  DecreaseMutation,
  ReinitMutation,
  ReintroduceElite,
  GrowPopulation,
  ResetPopulationToTwo,
};

std::string_view to_string(ControlAction action) noexcept;
ControlAction parse_control_action(std::string_view text);

/// Actions joined with '+'; "init" for the initial generation, "none" for an empty step.
std::string format_actions(const std::vector<ControlAction>& actions, bool initial = false);
std::vector<ControlAction> parse_actions(std::string_view text);

/// Observables of one generation, taken after the controller has acted.
struct GenerationRecord {
  std::size_t generation = 0;
  double best_fitness = 0.0;
  Genotype best_genotype;
  double mean_fitness = 0.0;
  double mutation_rate = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t population_size = 0;
  double diversity = 0.0;
  std::vector<ControlAction> actions;

  friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

}  // namespace critga
