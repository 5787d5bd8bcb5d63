#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "critga/error.hpp"
#include "critga/landscape.hpp"
#include "critga/rng.hpp"

namespace critga {
namespace {

std::vector<FitnessLandscape> builtins() {
  return {FitnessLandscape::sharp_peak(10, 4.0),   FitnessLandscape::sharp_peak(16, std::numbers::e),
          FitnessLandscape::royal_road(8, 4),      FitnessLandscape::royal_road(16, 2),
          FitnessLandscape::deceptive_trap(4, 4),  FitnessLandscape::deceptive_trap(12, 3),
          FitnessLandscape::deceptive_trap(48, 4), FitnessLandscape::royal_road(64, 8),
          FitnessLandscape::sharp_peak(40, 8.0)};
}

TEST(Landscape, SharpPeakValues) {
  const auto l = FitnessLandscape::sharp_peak(10, 4.0);
  EXPECT_EQ(l.evaluate(Genotype::ones(10)), 4.0);
  EXPECT_EQ(l.evaluate(Genotype::zeros(10)), 1.0);
  EXPECT_EQ(l.evaluate(Genotype::parse("1111111110")), 1.0);
  EXPECT_TRUE(l.class_symmetric());
  EXPECT_TRUE(l.integer_valued());
  EXPECT_FALSE(FitnessLandscape::sharp_peak(10, 2.5).integer_valued());
}

TEST(Landscape, RoyalRoadCountsCompleteBlocks) {
  const auto l = FitnessLandscape::royal_road(8, 4);
  EXPECT_EQ(l.evaluate(Genotype::parse("11110000")), 2.0);
  EXPECT_EQ(l.evaluate(Genotype::parse("11101111")), 2.0);
  EXPECT_EQ(l.evaluate(Genotype::parse("11111111")), 3.0);
  EXPECT_EQ(l.evaluate(Genotype::parse("01110111")), 1.0);
  EXPECT_FALSE(l.class_symmetric());
}

// Independent scorer, written against the textual genotype rather than the bit word.
double brute_force_trap(const std::string& bits, std::size_t block) {
  double total = 0.0;
  for (std::size_t start = 0; start < bits.size(); start += block) {
    const auto ones = static_cast<std::size_t>(std::count(bits.begin() + start, bits.begin() + start + block, '1'));
    total += ones == block ? block + 1.0 : static_cast<double>(block - ones);
  }
  return total;
}

TEST(Landscape, DeceptiveTrapMatchesGoldenTable) {
  const auto l = FitnessLandscape::deceptive_trap(4, 4);
  std::ifstream in(std::string(CRITGA_TEST_DATA_DIR) + "/deceptive_trap_n4_b4.golden");
  ASSERT_TRUE(in);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string bits;
    double expected = 0.0;
    fields >> bits >> expected;
    EXPECT_EQ(l.evaluate(Genotype::parse(bits)), expected) << bits;
    EXPECT_EQ(brute_force_trap(bits, 4), expected) << bits;
    ++rows;
  }
  EXPECT_EQ(rows, 16u);
  EXPECT_EQ(l.master_genotype(), Genotype::parse("1111"));
}

TEST(Landscape, DeceptiveTrapAgreesWithBruteForceOnLongerStrings) {
  const auto l = FitnessLandscape::deceptive_trap(12, 3);
  for (std::uint64_t w = 0; w < (1u << 12); ++w) {
    const Genotype g(12, w);
    ASSERT_EQ(l.evaluate(g), brute_force_trap(g.to_string(), 3)) << g.to_string();
  }
}

TEST(Landscape, RatioBound) {
  EXPECT_EQ(FitnessLandscape::sharp_peak(10, 4.0).fitness_ratio_bound(), 8.0);
  EXPECT_EQ(FitnessLandscape::sharp_peak(3, std::numbers::e).fitness_ratio_bound(1.0), std::numbers::e);
  EXPECT_EQ(FitnessLandscape::royal_road(8, 4).fitness_ratio_bound(), 6.0);
  EXPECT_EQ(FitnessLandscape::deceptive_trap(4, 4).fitness_ratio_bound(), 10.0);
  EXPECT_THROW(FitnessLandscape::royal_road(8, 4).fitness_ratio_bound(0.5), ConfigError);
}

TEST(Landscape, MasterGenotypeIsAllOnes) {
  EXPECT_EQ(FitnessLandscape::sharp_peak(4, 2.0).master_genotype(), Genotype::parse("1111"));
  EXPECT_EQ(FitnessLandscape::royal_road(8, 4).master_genotype(), Genotype::parse("11111111"));
}

TEST(Landscape, ConfigurationErrors) {
  EXPECT_THROW(FitnessLandscape::sharp_peak(10, 1.0), ConfigError);
  EXPECT_THROW(FitnessLandscape::sharp_peak(10, 0.5), ConfigError);
  EXPECT_THROW(FitnessLandscape::sharp_peak(0, 2.0), ConfigError);
  EXPECT_THROW(FitnessLandscape::royal_road(10, 4), ConfigError);
  EXPECT_THROW(FitnessLandscape::deceptive_trap(8, 0), ConfigError);
  EXPECT_THROW(FitnessLandscape::sharp_peak(10, 4.0).evaluate(Genotype::ones(9)), ConfigError);
}

// Every built-in: fitness >= 1, the master is maximal, the ratio bound dominates max/min,
// and evaluate is pure. Exhaustive for n <= 16, 10^5 random genotypes above.
TEST(LandscapeProperties, PositivityOptimalityRatioAndPurity) {
  Rng rng(2024);
  for (const auto& l : builtins()) {
    SCOPED_TRACE(l.describe());
    const double master_fitness = l.evaluate(l.master_genotype());
    double lo = master_fitness;
    double hi = master_fitness;
    auto check = [&](const Genotype& g) {
      const double f = l.evaluate(g);
      ASSERT_GE(f, 1.0);
      ASSERT_TRUE(std::isfinite(f));
      ASSERT_LE(f, master_fitness);
      ASSERT_EQ(f, l.evaluate(g));
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    };
    if (l.n() <= 16) {
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << l.n()); ++w) check(Genotype(l.n(), w));
      EXPECT_EQ(lo, l.min_fitness());
      EXPECT_EQ(hi, l.max_fitness());
      EXPECT_GT(l.fitness_ratio_bound(), hi / lo);
    } else {
      for (int i = 0; i < 100000; ++i) check(Genotype(l.n(), rng.bits(l.n())));
    }
    EXPECT_EQ(master_fitness, l.max_fitness());
  }
}

TEST(Landscape, ClassFitnessProfile) {
  const auto profile = FitnessLandscape::sharp_peak(5, 3.0).class_fitness();
  ASSERT_EQ(profile.size(), 6u);
  EXPECT_EQ(profile[0], 3.0);
  for (std::size_t k = 1; k < profile.size(); ++k) EXPECT_EQ(profile[k], 1.0);
  EXPECT_THROW(FitnessLandscape::royal_road(8, 4).class_fitness(), UnsupportedQuery);
}

TEST(CustomLandscape, ParsesFileFormatWithDefaults) {
  std::istringstream in("n 3\n111 5\n011 2.5\n\nratio_bound 6\n");
  const auto l = FitnessLandscape::parse_custom(in);
  EXPECT_EQ(l.kind(), LandscapeKind::Custom);
  EXPECT_EQ(l.evaluate(Genotype::parse("111")), 5.0);
  EXPECT_EQ(l.evaluate(Genotype::parse("011")), 2.5);
  EXPECT_EQ(l.evaluate(Genotype::parse("000")), 1.0);
  EXPECT_EQ(l.fitness_ratio_bound(), 6.0);
  EXPECT_EQ(l.max_fitness(), 5.0);
  EXPECT_FALSE(l.integer_valued());
  EXPECT_THROW(l.master_genotype(), UnsupportedQuery);
}

TEST(CustomLandscape, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return FitnessLandscape::parse_custom(in);
  };
  EXPECT_THROW(parse("n 3\n111 5\n"), ConfigError);                          // no ratio_bound
  EXPECT_THROW(parse("111 5\nratio_bound 6\n"), ConfigError);                // no header
  EXPECT_THROW(parse("n 3\n11 5\nratio_bound 6\n"), ConfigError);            // wrong length
  EXPECT_THROW(parse("n 3\n111 5\n111 4\nratio_bound 6\n"), ConfigError);    // duplicate
  EXPECT_THROW(parse("n 3\n111 5\nratio_bound 4\n"), ConfigError);           // bound <= max/min
  EXPECT_THROW(parse("n 3\n111 -1\nratio_bound 6\n"), ConfigError);          // non-positive
  EXPECT_THROW(parse("n 3\nratio_bound 6\n111 5\n"), ConfigError);           // bound not last
  EXPECT_THROW(parse("n 21\nratio_bound 6\n"), ConfigError);                 // too long
  EXPECT_THROW(FitnessLandscape::load_custom("/nonexistent/landscape.txt"), IoError);
}

}  // namespace
}  // namespace critga
