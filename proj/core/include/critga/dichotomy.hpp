#pragma once

#include <cstddef>
#include <optional>

namespace critga {

/// Bracket [alpha, beta] around the critical mutation probability, with the
/// current probability at its midpoint.
struct DichotomyState {
  double alpha = 0.0;
  double beta = 0.0;
  double mutation_rate = 0.0;
  /// Upper bound at initialization; kept for resets and the convergence test.
  double beta_init = 0.0;

  double width() const noexcept { return beta - alpha; }

  friend bool operator==(const DichotomyState&, const DichotomyState&) = default;
};

/// alpha = 0, beta = ln(c)/n, p_m = beta/2. Throws ConfigError unless c > 1 and n >= 1.
DichotomyState dichotomy_init(double ratio_bound, std::size_t n);

/// alpha <- p_m, then p_m <- (alpha + beta)/2.
DichotomyState dichotomy_increase(DichotomyState state) noexcept;

/// beta <- p_m, then p_m <- (alpha + beta)/2.
DichotomyState dichotomy_decrease(DichotomyState state) noexcept;

/// Population growth rule for the size controller.
struct SizePolicy {
  static constexpr double kDefaultConvergenceDivisor = 64.0;

  double growth = 2.0;
  std::size_t max_size = 4096;
  /// Absolute bracket width below which the mutation probability counts as converged.
  /// Unset means beta_init / 64.
  std::optional<double> convergence_threshold;

  double threshold_for(const DichotomyState& state) const noexcept {
    return convergence_threshold.value_or(state.beta_init / kDefaultConvergenceDivisor);
  }

  /// growth > 1, max_size >= 2, threshold > 0 when set.
  void validate() const;

  friend bool operator==(const SizePolicy&, const SizePolicy&) = default;
};

/// beta - alpha < threshold, with a relative slack of 1e-9 against endpoint rounding.
bool has_converged(const DichotomyState& state, const SizePolicy& policy) noexcept;

}  // namespace critga
