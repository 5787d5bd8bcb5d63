#include "critga/operators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga {

std::string_view to_string(SelectionKind kind) noexcept {
  return kind == SelectionKind::Tournament ? "Tournament" : "FitnessProportional";
}

std::string_view to_string(CrossoverKind kind) noexcept {
  return kind == CrossoverKind::Uniform ? "Uniform" : "OnePoint";
}

SelectionKind parse_selection_kind(std::string_view text) {
  if (text == "FitnessProportional") return SelectionKind::FitnessProportional;
  if (text == "Tournament") return SelectionKind::Tournament;
  throw ConfigError(fmt::format("unknown selection '{}'", text), "ga.selection.kind");
}

CrossoverKind parse_crossover_kind(std::string_view text) {
  if (text == "OnePoint") return CrossoverKind::OnePoint;
  if (text == "Uniform") return CrossoverKind::Uniform;
  throw ConfigError(fmt::format("unknown crossover '{}'", text), "ga.crossover");
}

void GAParams::validate(std::size_t population_size) const {
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw ConfigError(fmt::format("must be in [0, 1], got {}", mutation_rate), "ga.p_m");
  }
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw ConfigError(fmt::format("must be in [0, 1], got {}", crossover_rate), "ga.crossover_rate");
  }
  if (!(fitness_tolerance >= 0.0) || !std::isfinite(fitness_tolerance)) {
    throw ConfigError("must be finite and >= 0", "ga.fitness_tolerance");
  }
  if (selection.kind == SelectionKind::Tournament) {
    if (selection.tournament_size < 2 || (population_size != 0 && selection.tournament_size > population_size)) {
      throw ConfigError(fmt::format("tournament size {} must be in [2, m = {}]", selection.tournament_size,
                                    population_size),
                        "ga.selection.k");
    }
  }
}

Trend FitnessComparator::compare(double before, double after) const noexcept {
  if (exact_) {
    if (after == before) return Trend::Equal;
    return after > before ? Trend::Increased : Trend::Decreased;
  }
  const double scale = std::max(std::abs(before), std::abs(after));
  if (std::abs(after - before) <= tolerance_ * scale) return Trend::Equal;
  return after > before ? Trend::Increased : Trend::Decreased;
}

Population init_population(std::size_t m, const FitnessLandscape& landscape, Rng& rng) {
  if (m < 2) throw ConfigError(fmt::format("population size must be >= 2, got {}", m), "population_size");
  std::vector<Member> members;
  members.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Genotype g(landscape.n(), rng.bits(landscape.n()));
    const double f = landscape.evaluate(g);
    members.push_back({g, f});
  }
  return Population(std::move(members));
}

Population select(const Population& population, const GAParams& params, Rng& rng) {
  const std::size_t m = population.size();
  std::vector<Member> chosen;
  chosen.reserve(m);

  if (params.selection.kind == SelectionKind::Tournament) {
    const std::size_t k = params.selection.tournament_size;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t winner = rng.below(m);
      for (std::size_t round = 1; round < k; ++round) {
        const std::size_t rival = rng.below(m);
        if (population[rival].fitness > population[winner].fitness) winner = rival;
      }
      chosen.push_back(population[winner]);
    }
    return Population(std::move(chosen));
  }

  std::vector<double> cumulative(m);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    total += population[i].fitness;
    cumulative[i] = total;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const double target = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    const auto index = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), m - 1);
    chosen.push_back(population[index]);
  }
  return Population(std::move(chosen));
}

Population mutate(Population population, double rate, const FitnessLandscape& landscape, Rng& rng) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw DomainError(fmt::format("mutation rate {} outside [0, 1]", rate));
  if (rate == 0.0 || population.empty()) return population;

  const std::size_t n = population.genotype_length();
  if (rate == 1.0) {
    for (auto& member : population) {
      member.genotype = member.genotype.complement();
      member.fitness = landscape.evaluate(member.genotype);
    }
    return population;
  }

  // Positions of flipped bits in the concatenated m*n stream, sampled by geometric gaps.
  const std::size_t total = population.size() * n;
  const double log_keep = std::log1p(-rate);
  auto gap = [&]() -> std::size_t {
    const double u = 1.0 - rng.uniform();  // (0, 1]
    const double skip = std::floor(std::log(u) / log_keep);
    return skip >= static_cast<double>(total) ? total : static_cast<std::size_t>(skip);
  };

  std::size_t touched = total;  // last member index that was flipped, as a sentinel
  for (std::size_t pos = gap(); pos < total; pos += 1 + gap()) {
    const std::size_t index = pos / n;
    population[index].genotype.flip(pos % n);
    if (touched != index) {
      if (touched != total) population[touched].fitness = landscape.evaluate(population[touched].genotype);
      touched = index;
    }
  }
  if (touched != total) population[touched].fitness = landscape.evaluate(population[touched].genotype);
  return population;
}

void one_point_crossover(Genotype& a, Genotype& b, std::size_t cut) noexcept {
  const std::uint64_t suffix = ~Genotype::mask_for(cut);
  const std::uint64_t diff = (a.word() ^ b.word()) & suffix;
  a.flip_mask(diff);
  b.flip_mask(diff);
}

Population crossover(Population population, const GAParams& params, const FitnessLandscape& landscape, Rng& rng) {
  const std::size_t n = population.genotype_length();
  for (std::size_t i = 0; i + 1 < population.size(); i += 2) {
    if (!rng.bernoulli(params.crossover_rate)) continue;
    Genotype& a = population[i].genotype;
    Genotype& b = population[i + 1].genotype;
    if (params.crossover == CrossoverKind::OnePoint) {
      if (n < 2) continue;
      one_point_crossover(a, b, 1 + static_cast<std::size_t>(rng.below(n - 1)));
    } else {
      const std::uint64_t diff = (a.word() ^ b.word()) & rng.bits(n);
      a.flip_mask(diff);
      b.flip_mask(diff);
    }
    population[i].fitness = landscape.evaluate(a);
    population[i + 1].fitness = landscape.evaluate(b);
  }
  return population;
}

std::size_t best_index(const Population& population) noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness > population[best].fitness) best = i;
  }
  return best;
}

Member best_individual(const Population& population) {
  if (population.empty()) throw ConfigError("population is empty", "population");
  return population[best_index(population)];
}

GenerationRecord observe(const Population& population, std::size_t generation, double mutation_rate) {
  GenerationRecord record;
  const Member best = best_individual(population);
  record.generation = generation;
  record.best_fitness = best.fitness;
  record.best_genotype = best.genotype;
  record.mean_fitness = population.mean_fitness();
  record.mutation_rate = mutation_rate;
  record.population_size = population.size();
  record.diversity = population.diversity();
  return record;
}

StepResult generation_step(const Population& population, const GAParams& params,
                           const FitnessLandscape& landscape, Rng& rng) {
  Population next = select(population, params, rng);
  next = mutate(std::move(next), params.mutation_rate, landscape, rng);
  next = crossover(std::move(next), params, landscape, rng);
  GenerationRecord record = observe(next, 0, params.mutation_rate);
  return {std::move(next), std::move(record)};
}

}  // namespace critga
