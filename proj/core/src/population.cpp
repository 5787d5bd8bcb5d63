#include "critga/population.hpp"

#include <numeric>

namespace critga {

Population Population::evaluated(std::span<const Genotype> genotypes, const FitnessLandscape& landscape) {
  std::vector<Member> members;
  members.reserve(genotypes.size());
  for (const auto& g : genotypes) members.push_back({g, landscape.evaluate(g)});
  return Population(std::move(members));
}

double Population::mean_fitness() const noexcept {
  if (members_.empty()) return 0.0;
  const double total =
      std::accumulate(members_.begin(), members_.end(), 0.0, [](double s, const Member& m) { return s + m.fitness; });
  return total / static_cast<double>(members_.size());
}

double Population::diversity() const noexcept {
  const std::size_t m = members_.size();
  if (m < 2) return 0.0;
  // Sum of pairwise distances = sum over positions of ones * zeros.
  double pair_distance = 0.0;
  const std::size_t n = genotype_length();
  for (std::size_t bit = 0; bit < n; ++bit) {
    std::size_t ones = 0;
    for (const auto& member : members_) ones += member.genotype.test(bit) ? 1 : 0;
    pair_distance += static_cast<double>(ones) * static_cast<double>(m - ones);
  }
  const double pairs = static_cast<double>(m) * static_cast<double>(m - 1) / 2.0;
  return pair_distance / pairs;
}

}  // namespace critga
