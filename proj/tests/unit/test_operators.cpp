#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "critga/error.hpp"
#include "critga/operators.hpp"

namespace critga {
namespace {

// Three binomial standard errors for a frequency with success probability p over `trials`.
double three_se(double p, double trials) { return 3.0 * std::sqrt(p * (1.0 - p) / trials); }

Population from_fitness(std::initializer_list<double> fitness, std::size_t n = 8) {
  Population p;
  std::uint64_t word = 0;
  for (double f : fitness) p.push_back({Genotype(n, word++), f});
  return p;
}

Population uniform_population(std::size_t m, const Genotype& g, const FitnessLandscape& l) {
  std::vector<Genotype> genotypes(m, g);
  return Population::evaluated(genotypes, l);
}

TEST(Init, TwoMembersOfOneBitAreUniform) {
  const auto l = FitnessLandscape::sharp_peak(1, 2.0);
  Rng rng(17);
  std::array<int, 4> counts{};
  constexpr int kDraws = 10000;
  for (int i = 0; i < kDraws; ++i) {
    const Population p = init_population(2, l, rng);
    ++counts[p[0].genotype.word() * 2 + p[1].genotype.word()];
  }
  double chi2 = 0.0;
  for (int c : counts) {
    EXPECT_NEAR(c / double(kDraws), 0.25, 0.02);
    chi2 += (c - kDraws / 4.0) * (c - kDraws / 4.0) / (kDraws / 4.0);
  }
  // 99.9% quantile of chi-square with 3 degrees of freedom.
  EXPECT_LT(chi2, 16.27);
}

TEST(Init, SizeAndCachedFitness) {
  const auto l = FitnessLandscape::royal_road(8, 2);
  Rng rng(3);
  const Population p = init_population(5, l, rng);
  ASSERT_EQ(p.size(), 5u);
  for (const auto& m : p) {
    EXPECT_EQ(m.genotype.size(), 8u);
    EXPECT_EQ(m.fitness, l.evaluate(m.genotype));
  }
  EXPECT_THROW(init_population(1, l, rng), ConfigError);
}

TEST(Select, EqualFitnessIsUniform) {
  const Population p = from_fitness({2, 2, 2, 2});
  Rng rng(11);
  std::map<std::uint64_t, int> counts;
  const GAParams params;
  for (int i = 0; i < 2500; ++i) {
    for (const auto& m : select(p, params, rng)) ++counts[m.genotype.word()];
  }
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [word, c] : counts) EXPECT_NEAR(c / 1e4, 0.25, three_se(0.25, 1e4)) << word;
}

TEST(Select, FitnessProportionalThreeToOne) {
  const Population p = from_fitness({3, 1});
  Rng rng(5);
  int first = 0;
  const GAParams params;
  for (int i = 0; i < 5000; ++i) {
    for (const auto& m : select(p, params, rng)) first += m.genotype.word() == 0;
  }
  EXPECT_NEAR(first / 1e4, 0.75, 0.02);
  EXPECT_NEAR(first / 1e4, 0.75, three_se(0.75, 1e4));
}

TEST(Select, FrequenciesFollowFitnessShares) {
  const Population p = from_fitness({1, 2, 3, 4, 10});
  Rng rng(8);
  std::array<int, 5> counts{};
  const GAParams params;
  for (int i = 0; i < 2000; ++i) {
    for (const auto& m : select(p, params, rng)) ++counts[m.genotype.word()];
  }
  const std::array<double, 5> expected{1 / 20.0, 2 / 20.0, 3 / 20.0, 4 / 20.0, 10 / 20.0};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(counts[i] / 1e4, expected[i], three_se(expected[i], 1e4)) << i;
}

TEST(Select, FullTournamentFavoursTheBest) {
  // Picks are drawn with replacement, so a tournament of size m contains the best member with
  // probability 1 - (1 - 1/m)^m rather than always.
  const Population p = from_fitness({1, 5, 3, 2});
  GAParams params;
  params.selection = {SelectionKind::Tournament, 4};
  params.validate(4);
  Rng rng(1);
  int best = 0;
  for (int i = 0; i < 2500; ++i) {
    for (const auto& m : select(p, params, rng)) best += m.fitness == 5.0;
  }
  const double expected = 1.0 - std::pow(0.75, 4);
  EXPECT_NEAR(best / 1e4, expected, three_se(expected, 1e4));
  params.selection.tournament_size = 5;
  EXPECT_THROW(params.validate(4), ConfigError);
  params.selection.tournament_size = 1;
  EXPECT_THROW(params.validate(4), ConfigError);
}

TEST(Select, PreservesSize) {
  const Population p = from_fitness({1, 2, 3});
  Rng rng(2);
  EXPECT_EQ(select(p, GAParams{}, rng).size(), 3u);
}

TEST(Mutate, ZeroRateIsIdentity) {
  const auto l = FitnessLandscape::sharp_peak(16, 2.0);
  Rng rng(4);
  const Population p = init_population(20, l, rng);
  EXPECT_EQ(mutate(p, 0.0, l, rng), p);
}

TEST(Mutate, UnitRateComplements) {
  const auto l = FitnessLandscape::sharp_peak(16, 2.0);
  Rng rng(4);
  const Population p = init_population(20, l, rng);
  const Population q = mutate(p, 1.0, l, rng);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(q[i].genotype, p[i].genotype.complement());
    EXPECT_EQ(q[i].fitness, l.evaluate(q[i].genotype));
  }
}

TEST(Mutate, RejectsRatesOutsideUnitInterval) {
  const auto l = FitnessLandscape::sharp_peak(4, 2.0);
  Rng rng(4);
  const Population p = init_population(2, l, rng);
  EXPECT_THROW(mutate(p, -0.1, l, rng), DomainError);
  EXPECT_THROW(mutate(p, 1.5, l, rng), DomainError);
}

TEST(Mutate, MeanFlipsPerGenotype) {
  const auto l = FitnessLandscape::sharp_peak(20, 2.0);
  const Population p = uniform_population(50, Genotype::zeros(20), l);
  Rng rng(31);
  double flips = 0.0;
  constexpr int kGenerations = 10000;
  for (int g = 0; g < kGenerations; ++g) {
    for (const auto& m : mutate(p, 0.1, l, rng)) flips += static_cast<double>(m.genotype.count());
  }
  const double mean = flips / (kGenerations * 50.0);
  EXPECT_NEAR(mean, 2.0, 0.1);
  // Standard error of the mean of 5e5 Binomial(20, 0.1) counts.
  EXPECT_NEAR(mean, 2.0, 3.0 * std::sqrt(20 * 0.1 * 0.9 / 5e5));
}

TEST(Mutate, PerBitFrequencyMatchesRate) {
  const auto l = FitnessLandscape::sharp_peak(24, 2.0);
  const Population p = uniform_population(1, Genotype::zeros(24), l);
  for (const double rate : {0.01, 0.1, 0.37}) {
    Rng rng(1000 + static_cast<std::uint64_t>(rate * 100));
    std::array<int, 24> counts{};
    for (int i = 0; i < 10000; ++i) {
      const Genotype g = mutate(p, rate, l, rng)[0].genotype;
      for (std::size_t b = 0; b < 24; ++b) counts[b] += g.test(b);
    }
    // 72 simultaneous checks: 4.0 SE keeps the family-wise false-alarm rate near that of one 3 SE check.
    for (std::size_t b = 0; b < 24; ++b) {
      EXPECT_NEAR(counts[b] / 1e4, rate, three_se(rate, 1e4) * 4.0 / 3.0) << "rate " << rate << " bit " << b;
    }
  }
}

TEST(Crossover, OnePointSwapsSuffixes) {
  Genotype a = Genotype::parse("1111");
  Genotype b = Genotype::parse("0000");
  one_point_crossover(a, b, 2);
  EXPECT_EQ(a.to_string(), "1100");
  EXPECT_EQ(b.to_string(), "0011");
}

TEST(Crossover, ZeroRateIsIdentity) {
  const auto l = FitnessLandscape::sharp_peak(16, 2.0);
  Rng rng(6);
  const Population p = init_population(9, l, rng);
  GAParams params;
  params.crossover_rate = 0.0;
  EXPECT_EQ(crossover(p, params, l, rng), p);
}

TEST(Crossover, IdenticalParentsAreUnchanged) {
  const auto l = FitnessLandscape::sharp_peak(16, 2.0);
  const Population p = uniform_population(6, Genotype::parse("1011001110001101"), l);
  Rng rng(6);
  for (const auto kind : {CrossoverKind::OnePoint, CrossoverKind::Uniform}) {
    GAParams params;
    params.crossover_rate = 1.0;
    params.crossover = kind;
    EXPECT_EQ(crossover(p, params, l, rng), p);
  }
}

TEST(Crossover, PreservesPerPositionBitCountsAndLeavesOddTail) {
  const auto l = FitnessLandscape::sharp_peak(32, 2.0);
  Rng rng(12);
  for (const auto kind : {CrossoverKind::OnePoint, CrossoverKind::Uniform}) {
    const Population p = init_population(7, l, rng);
    GAParams params;
    params.crossover_rate = 1.0;
    params.crossover = kind;
    const Population q = crossover(p, params, l, rng);
    ASSERT_EQ(q.size(), 7u);
    EXPECT_EQ(q[6], p[6]);
    for (std::size_t pair = 0; pair + 1 < 7; pair += 2) {
      // Crossover only swaps bits between partners, so each position keeps its column sum.
      EXPECT_EQ(q[pair].genotype.word() ^ q[pair + 1].genotype.word(),
                p[pair].genotype.word() ^ p[pair + 1].genotype.word());
      EXPECT_EQ(q[pair].genotype.word() & q[pair + 1].genotype.word(),
                p[pair].genotype.word() & p[pair + 1].genotype.word());
      EXPECT_EQ(q[pair].fitness, l.evaluate(q[pair].genotype));
    }
  }
}

TEST(Crossover, OnePointCutIsUniformOverInteriorPositions) {
  const auto l = FitnessLandscape::sharp_peak(5, 2.0);
  std::vector<Genotype> genotypes{Genotype::ones(5), Genotype::zeros(5)};
  const Population p = Population::evaluated(genotypes, l);
  GAParams params;
  params.crossover_rate = 1.0;
  Rng rng(21);
  std::array<int, 5> cuts{};
  for (int i = 0; i < 10000; ++i) {
    // The first child keeps a prefix of ones of length `cut`.
    ++cuts[crossover(p, params, l, rng)[0].genotype.count()];
  }
  EXPECT_EQ(cuts[0], 0);
  for (std::size_t c = 1; c < 5; ++c) EXPECT_NEAR(cuts[c] / 1e4, 0.25, three_se(0.25, 1e4)) << c;
}

TEST(Best, LowestIndexWinsTies) {
  EXPECT_EQ(best_index(from_fitness({1, 4, 1})), 1u);
  EXPECT_EQ(best_individual(from_fitness({1, 4, 1})).fitness, 4.0);
  EXPECT_EQ(best_index(from_fitness({2, 2})), 0u);
  const auto l = FitnessLandscape::sharp_peak(10, 3.0);
  const Population flat = uniform_population(5, Genotype::zeros(10), l);
  EXPECT_EQ(best_index(flat), 0u);
  EXPECT_EQ(best_individual(flat).fitness, 1.0);
  EXPECT_THROW(best_individual(Population{}), ConfigError);
}

TEST(Comparator, ExactAndTolerant) {
  const FitnessComparator exact(1e-9, true);
  EXPECT_EQ(exact.compare(2.0, 2.0), Trend::Equal);
  EXPECT_EQ(exact.compare(2.0, 2.0 + 1e-12), Trend::Increased);
  EXPECT_EQ(exact.compare(2.0, 1.0), Trend::Decreased);
  const FitnessComparator tolerant(1e-9, false);
  EXPECT_EQ(tolerant.compare(2.0, 2.0 + 1e-12), Trend::Equal);
  EXPECT_EQ(tolerant.compare(2.0, 2.0 - 1e-12), Trend::Equal);
  EXPECT_EQ(tolerant.compare(2.0, 2.001), Trend::Increased);
  EXPECT_EQ(tolerant.compare(2.0, 1.999), Trend::Decreased);
  EXPECT_EQ(FitnessComparator(GAParams{}, FitnessLandscape::sharp_peak(4, 2.5)).compare(1.0, 1.0 + 1e-12),
            Trend::Equal);
}

TEST(GenerationStep, NoVariationOnlyResamples) {
  const auto l = FitnessLandscape::sharp_peak(12, 2.0);
  Rng rng(13);
  const Population p = init_population(10, l, rng);
  GAParams params;
  params.crossover_rate = 0.0;
  const StepResult step = generation_step(p, params, l, rng);
  for (const auto& m : step.population) {
    EXPECT_NE(std::find(p.begin(), p.end(), m), p.end());
  }
}

TEST(GenerationStep, SizeConservationOverRandomConfigurations) {
  Rng meta(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + meta.below(64);
    const std::size_t m = 2 + meta.below(40);
    const auto l = FitnessLandscape::sharp_peak(n, 1.5 + meta.uniform() * 10.0);
    GAParams params;
    params.mutation_rate = meta.uniform();
    params.crossover_rate = meta.uniform();
    params.crossover = meta.bernoulli(0.5) ? CrossoverKind::OnePoint : CrossoverKind::Uniform;
    if (meta.bernoulli(0.5)) params.selection = {SelectionKind::Tournament, 2 + meta.below(m - 1)};
    params.validate(m);
    Rng rng(static_cast<std::uint64_t>(trial));
    const Population p = init_population(m, l, rng);
    const StepResult step = generation_step(p, params, l, rng);
    ASSERT_EQ(step.population.size(), m);
    ASSERT_EQ(step.population.genotype_length(), n);
    ASSERT_EQ(step.record.population_size, m);
    double best = 0.0;
    for (const auto& member : step.population) best = std::max(best, member.fitness);
    ASSERT_EQ(step.record.best_fitness, best);
    ASSERT_GE(step.record.diversity, 0.0);
    ASSERT_LE(step.record.diversity, static_cast<double>(n));
  }
}

TEST(GenerationStep, DeterministicForFixedSeed) {
  const auto l = FitnessLandscape::deceptive_trap(24, 4);
  GAParams params;
  params.mutation_rate = 0.05;
  auto run = [&] {
    Rng rng(77);
    Population p = init_population(30, l, rng);
    std::vector<GenerationRecord> records;
    for (int g = 0; g < 50; ++g) {
      StepResult step = generation_step(p, params, l, rng);
      records.push_back(step.record);
      p = std::move(step.population);
    }
    return std::pair{p, records};
  };
  EXPECT_EQ(run(), run());
}

TEST(GenerationStep, MutationBeforeCrossoverGivesRandomDiversity) {
  // From a converged population, p_m = 1/2 without crossover yields independent uniform genotypes,
  // whose expected pairwise Hamming distance is n/2.
  const std::size_t n = 32;
  const auto l = FitnessLandscape::sharp_peak(n, 2.0);
  const Population p = uniform_population(40, Genotype::zeros(n), l);
  GAParams params;
  params.mutation_rate = 0.5;
  params.crossover_rate = 0.0;
  Rng rng(55);
  double total = 0.0;
  constexpr int kSteps = 200;
  for (int i = 0; i < kSteps; ++i) total += generation_step(p, params, l, rng).record.diversity;
  EXPECT_NEAR(total / kSteps, n / 2.0, 0.1);
}

TEST(Diversity, MeanPairwiseHamming) {
  Population p;
  p.push_back({Genotype::parse("0000"), 1});
  p.push_back({Genotype::parse("1100"), 1});
  p.push_back({Genotype::parse("1111"), 1});
  // Distances 2, 4, 2 over three pairs.
  EXPECT_DOUBLE_EQ(p.diversity(), 8.0 / 3.0);
  EXPECT_DOUBLE_EQ(p.mean_fitness(), 1.0);
}

}  // namespace
}  // namespace critga
