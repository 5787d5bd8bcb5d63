#include "critga/controller.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga {

std::string_view to_string(ControllerKind kind) noexcept {
  switch (kind) {
    case ControllerKind::Basic: return "Basic";
    case ControllerKind::Elitist: return "Elitist";
    case ControllerKind::ElitistWithSize: return "ElitistWithSize";
  }
  return "?";
}

ControllerKind parse_controller_kind(std::string_view text) {
  for (auto kind : {ControllerKind::Basic, ControllerKind::Elitist, ControllerKind::ElitistWithSize}) {
    if (text == to_string(kind)) return kind;
  }
  throw ConfigError(fmt::format("unknown controller kind '{}'", text), "controller.kind");
}

std::string describe(const MutationControl& control) {
  if (const auto* fixed = std::get_if<FixedMutation>(&control)) {
    return fmt::format("FixedMutation(p_m={})", fixed->rate);
  }
  return std::string(to_string(std::get<ControllerKind>(control)));
}

void reintroduce(Population& population, const Member& elite) {
  if (population.empty()) throw ConfigError("cannot reintroduce into an empty population", "population");
  std::size_t worst = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness < population[worst].fitness) worst = i;
  }
  population[worst] = elite;
}

namespace {

void grow(Population& population, const SizePolicy& policy, const FitnessLandscape& landscape, Rng& rng) {
  const auto scaled = static_cast<std::size_t>(std::ceil(static_cast<double>(population.size()) * policy.growth));
  const std::size_t target = std::min(policy.max_size, std::max(scaled, population.size()));
  while (population.size() < target) {
    Genotype g(landscape.n(), rng.bits(landscape.n()));
    const double f = landscape.evaluate(g);
    population.push_back({g, f});
  }
}

}  // namespace

ControlOutcome controller_step(ControllerKind kind, const Member& previous_best, const Member& current_best,
                               const DichotomyState& state, Population population, const SizePolicy& policy,
                               const ControlContext& context, const FitnessLandscape& landscape, Rng& rng) {
  const Trend trend = context.comparator.compare(previous_best.fitness, current_best.fitness);
  ControlOutcome out{state, std::move(population), current_best, {}};

  auto reinit = [&] {
    out.state = dichotomy_init(context.ratio_bound, context.n);
    out.actions.push_back(ControlAction::ReinitMutation);
  };
  auto increase = [&] {
    out.state = dichotomy_increase(out.state);
    out.actions.push_back(ControlAction::IncreaseMutation);
  };
  auto restore_elite = [&] {
    reintroduce(out.population, previous_best);
    out.best = previous_best;
    out.actions.push_back(ControlAction::ReintroduceElite);
  };
  auto decrease = [&] {
    out.state = dichotomy_decrease(out.state);
    out.actions.push_back(ControlAction::DecreaseMutation);
  };

  switch (kind) {
    case ControllerKind::Basic:
    case ControllerKind::Elitist:
      if (trend == Trend::Equal) {
        increase();
      } else if (trend == Trend::Decreased) {
        decrease();
        if (kind == ControllerKind::Elitist) restore_elite();
      } else {
        reinit();
      }
      return out;

    case ControllerKind::ElitistWithSize:
      if (trend == Trend::Increased) {
        reinit();
        out.population = Population({current_best, current_best});
        out.best = current_best;
        out.actions.push_back(ControlAction::ResetPopulationToTwo);
      } else if (has_converged(state, policy)) {
        // Keep the elite even when growth preempts the decrease branch.
        if (trend == Trend::Decreased) restore_elite();
        grow(out.population, policy, landscape, rng);
        out.actions.push_back(ControlAction::GrowPopulation);
        reinit();
        out.best = best_individual(out.population);
      } else if (trend == Trend::Equal) {
        increase();
      } else {
        decrease();
        restore_elite();
      }
      return out;
  }
  throw ConfigError("unknown controller kind", "controller.kind");
}

std::string_view to_string(Termination termination) noexcept {
  return termination == Termination::Optimum ? "optimum" : "budget";
}

}  // namespace critga
