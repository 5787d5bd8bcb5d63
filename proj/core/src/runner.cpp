#include "critga/controller.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga {

RunResult run_controlled_ga(const MutationControl& control, const FitnessLandscape& landscape,
                            const GAParams& params, const SizePolicy& policy, const RunOptions& options, Rng& rng) {
  if (options.budget < 1) throw ConfigError("budget must be >= 1", "budget");

  const auto* fixed = std::get_if<FixedMutation>(&control);
  const bool sized = !fixed && std::get<ControllerKind>(control) == ControllerKind::ElitistWithSize;
  const std::size_t initial_size = sized ? 2 : options.population_size;

  params.validate(initial_size);
  policy.validate();
  if (fixed && !(fixed->rate >= 0.0 && fixed->rate <= 1.0)) {
    throw ConfigError(fmt::format("must be in [0, 1], got {}", fixed->rate), "controller.p_m");
  }

  const FitnessComparator comparator(params, landscape);
  ControlContext context{0.0, landscape.n(), comparator};
  DichotomyState state;
  if (fixed) {
    state = {fixed->rate, fixed->rate, fixed->rate, fixed->rate};
  } else {
    context.ratio_bound = landscape.fitness_ratio_bound(options.safety_factor);
    state = dichotomy_init(context.ratio_bound, landscape.n());
  }

  Population population = init_population(initial_size, landscape, rng);
  if (options.master_copies > 0) {
    const Genotype master = landscape.master_genotype();
    const double f = landscape.evaluate(master);
    for (std::size_t i = 0; i < std::min(options.master_copies, population.size()); ++i) population[i] = {master, f};
  }

  auto at_optimum = [&](double best) {
    return comparator.compare(landscape.max_fitness(), best) != Trend::Decreased;
  };
  auto record = [&](std::size_t generation, std::vector<ControlAction> actions) {
    GenerationRecord r = observe(population, generation, state.mutation_rate);
    r.alpha = state.alpha;
    r.beta = state.beta;
    r.actions = std::move(actions);
    return r;
  };

  RunResult result;
  result.records.reserve(std::min<std::size_t>(options.budget, 100000) + 1);
  result.records.push_back(record(0, {}));
  Member best = best_individual(population);
  if (options.stop_at_optimum && at_optimum(best.fitness)) {
    result.termination = Termination::Optimum;
    return result;
  }

  GAParams step_params = params;
  for (std::size_t generation = 1; generation <= options.budget; ++generation) {
    step_params.mutation_rate = state.mutation_rate;
    StepResult step = generation_step(population, step_params, landscape, rng);
    const Member current = best_individual(step.population);

    std::vector<ControlAction> actions;
    if (fixed) {
      population = std::move(step.population);
      best = current;
    } else {
      ControlOutcome out = controller_step(std::get<ControllerKind>(control), best, current, state,
                                           std::move(step.population), policy, context, landscape, rng);
      population = std::move(out.population);
      state = out.state;
      best = out.best;
      actions = std::move(out.actions);
    }

    result.records.push_back(record(generation, std::move(actions)));
    if (options.stop_at_optimum && at_optimum(result.records.back().best_fitness)) {
      result.termination = Termination::Optimum;
      break;
    }
  }
  return result;
}

RunResult run_controlled_ga(const MutationControl& control, const FitnessLandscape& landscape,
                            const GAParams& params, const SizePolicy& policy, const RunOptions& options,
                            std::uint64_t seed) {
  Rng rng(seed);
  return run_controlled_ga(control, landscape, params, policy, options, rng);
}

}  // namespace critga
