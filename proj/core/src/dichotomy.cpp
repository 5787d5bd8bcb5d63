#include "critga/dichotomy.hpp"

#include <cmath>

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga {

DichotomyState dichotomy_init(double ratio_bound, std::size_t n) {
  if (!(ratio_bound > 1.0) || !std::isfinite(ratio_bound)) {
    throw ConfigError(fmt::format("ratio bound must be finite and > 1, got {}", ratio_bound), "ratio_bound");
  }
  if (n == 0) throw ConfigError("genotype length must be >= 1", "n");
  const double beta = std::log(ratio_bound) / static_cast<double>(n);
  return {0.0, beta, beta / 2.0, beta};
}

DichotomyState dichotomy_increase(DichotomyState state) noexcept {
  state.alpha = state.mutation_rate;
  state.mutation_rate = (state.alpha + state.beta) / 2.0;
  return state;
}

DichotomyState dichotomy_decrease(DichotomyState state) noexcept {
  state.beta = state.mutation_rate;
  state.mutation_rate = (state.alpha + state.beta) / 2.0;
  return state;
}

void SizePolicy::validate() const {
  if (!(growth > 1.0) || !std::isfinite(growth)) {
    throw ConfigError(fmt::format("growth factor must be > 1, got {}", growth), "size_policy.growth");
  }
  if (max_size < 2) throw ConfigError("max size must be >= 2", "size_policy.max_size");
  if (convergence_threshold && !(*convergence_threshold > 0.0)) {
    throw ConfigError("convergence threshold must be > 0", "size_policy.convergence_threshold");
  }
}

bool has_converged(const DichotomyState& state, const SizePolicy& policy) noexcept {
  // The width after k halvings is beta_init / 2^k only up to rounding of the endpoints; the slack
  // keeps a width that equals the threshold in exact arithmetic on the unconverged side.
  constexpr double kSlack = 1e-9;
  return state.width() < policy.threshold_for(state) * (1.0 - kSlack);
}

}  // namespace critga
