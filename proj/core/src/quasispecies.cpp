#include "critga/quasispecies.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga::quasispecies {

namespace {

constexpr std::size_t kExactBinomialLimit = 25;

constexpr auto make_pascal() {
  std::array<std::array<std::uint64_t, kExactBinomialLimit + 1>, kExactBinomialLimit + 1> table{};
  for (std::size_t n = 0; n <= kExactBinomialLimit; ++n) {
    table[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) table[n][k] = table[n - 1][k - 1] + (k < n ? table[n - 1][k] : 0);
  }
  return table;
}

constexpr auto kPascal = make_pascal();

double l1_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

void check_sigma(double sigma) {
  if (!(sigma > 1.0) || !std::isfinite(sigma)) {
    throw ConfigError(fmt::format("sigma must be finite and > 1, got {}", sigma), "sigma");
  }
}

}  // namespace

void Matrix::multiply(std::span<const double> x, std::span<double> out) const noexcept {
  for (std::size_t r = 0; r < rows_; ++r) {
    const double* row = data_.data() + r * cols_;
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += row[c] * x[c];
    out[r] = s;
  }
}

double binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0.0;
  if (n <= kExactBinomialLimit) return static_cast<double>(kPascal[n][k]);
  const auto nn = static_cast<double>(n);
  const auto kk = static_cast<double>(k);
  return std::exp(std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0));
}

ClassModel ClassModel::sharp_peak(std::size_t n, double sigma, double mutation_rate) {
  ClassModel model{n, std::vector<double>(n + 1, 1.0), mutation_rate};
  model.class_fitness[0] = sigma;
  return model;
}

void ClassModel::validate() const {
  if (n == 0) throw ConfigError("n must be >= 1", "n");
  if (class_fitness.size() != n + 1) {
    throw ConfigError(fmt::format("class_fitness needs n+1 = {} entries, got {}", n + 1, class_fitness.size()),
                      "class_fitness");
  }
  for (double f : class_fitness) {
    if (!(f > 0.0) || !std::isfinite(f)) throw ConfigError("class fitness must be finite and > 0", "class_fitness");
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw DomainError(fmt::format("mutation rate {} outside [0, 1]", mutation_rate));
  }
}

Matrix class_mutation_matrix(std::size_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(fmt::format("mutation rate {} outside [0, 1]", p));
  const double q = 1.0 - p;
  Matrix m(n + 1, n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t l = 0; l <= n; ++l) {
      // Repair j of the k wrong bits and damage i = l - k + j of the n - k correct ones.
      const std::size_t j_min = k > l ? k - l : 0;
      const std::size_t j_max = std::min(k, n - l);
      double sum = 0.0;
      for (std::size_t j = j_min; j <= j_max; ++j) {
        const std::size_t i = l + j - k;
        const std::size_t flips = i + j;
        sum += binomial(k, j) * binomial(n - k, i) * std::pow(p, static_cast<double>(flips)) *
               std::pow(q, static_cast<double>(n - flips));
      }
      m(l, k) = sum;
    }
  }
  return m;
}

std::vector<double> neutral_profile(std::size_t n) {
  std::vector<double> profile(n + 1);
  const double scale = std::ldexp(1.0, -static_cast<int>(n));
  for (std::size_t k = 0; k <= n; ++k) profile[k] = binomial(n, k) * scale;
  const double total = std::accumulate(profile.begin(), profile.end(), 0.0);
  for (double& v : profile) v /= total;
  return profile;
}

Stationary stationary_distribution(const ClassModel& model, const StationaryOptions& options) {
  model.validate();
  if (!(options.tolerance > 0.0)) throw ConfigError("tolerance must be > 0", "tol");

  const Matrix mutation = class_mutation_matrix(model.n, model.mutation_rate);
  const std::size_t size = model.n + 1;
  std::vector<double> x = neutral_profile(model.n);
  std::vector<double> weighted(size);
  std::vector<double> next(size);

  double residual = 0.0;
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    for (std::size_t k = 0; k < size; ++k) weighted[k] = model.class_fitness[k] * x[k];
    mutation.multiply(weighted, next);
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v /= total;
    residual = l1_distance(next, x);
    x.swap(next);
    if (residual < options.tolerance) {
      // M is column-stochastic, so the normalizer of the last step is the mean fitness.
      return {std::move(x), total, iter, residual};
    }
  }
  throw ConvergenceError(
      fmt::format("power iteration did not converge in {} iterations (residual {})", options.max_iterations, residual),
      residual);
}

double master_selection_margin(std::size_t n, double sigma, double p, const StationaryOptions& options) {
  check_sigma(sigma);
  if (n == 0) throw ConfigError("n must be >= 1", "n");
  const Matrix mutation = class_mutation_matrix(n, p);

  // Spectral radius of the mutant block M[1..n][1..n] by power iteration.
  const std::vector<double> start = neutral_profile(n);
  std::vector<double> x(start.begin() + 1, start.end());
  const double sum_x = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= sum_x;
  std::vector<double> next(n);

  double rho = 0.0;
  double residual = 0.0;
  bool converged = false;
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    for (std::size_t l = 1; l <= n; ++l) {
      double s = 0.0;
      for (std::size_t k = 1; k <= n; ++k) s += mutation(l, k) * x[k - 1];
      next[l - 1] = s;
    }
    rho = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v /= rho;
    residual = l1_distance(next, x);
    x.swap(next);
    if (residual < options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError(fmt::format("mutant-block power iteration did not converge (residual {})", residual),
                           residual);
  }
  return std::log(sigma) + std::log(mutation(0, 0)) - std::log(rho);
}

double neutral_ratio(std::size_t n, double sigma, double p, const StationaryOptions& options) {
  const Stationary peaked = stationary_distribution(ClassModel::sharp_peak(n, sigma, p), options);
  const Stationary flat = stationary_distribution(ClassModel{n, std::vector<double>(n + 1, 1.0), p}, options);
  return peaked.freq[0] / flat.freq[0];
}

double detect_error_threshold(std::size_t n, double sigma, const ThresholdOptions& options) {
  check_sigma(sigma);
  if (n == 0) throw ConfigError("n must be >= 1", "n");
  if (!(options.tolerance > 0.0)) throw ConfigError("tolerance must be > 0", "tol");
  if (options.criterion == ThresholdCriterion::NeutralRatio && !(options.crossing > 1.0)) {
    throw ConfigError("crossing level must be > 1", "crossing");
  }

  // Positive below the threshold, non-positive above it.
  auto order = [&](double p) {
    if (options.criterion == ThresholdCriterion::MasterSurvival) {
      return master_selection_margin(n, sigma, p, options.stationary);
    }
    return neutral_ratio(n, sigma, p, options.stationary) - options.crossing;
  };

  double lo = 0.0;
  double hi = 0.5;
  if (order(hi) > 0.0) {
    throw DetectionError(fmt::format("no threshold below p = 0.5 for n = {}, sigma = {}", n, sigma));
  }
  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (order(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo == 0.0) {
    throw DetectionError(fmt::format("threshold for n = {}, sigma = {} is below the resolution {}", n, sigma,
                                     options.tolerance));
  }
  return 0.5 * (lo + hi);
}

double detect_error_threshold(std::size_t n, double sigma, double tolerance) {
  ThresholdOptions options;
  options.tolerance = tolerance;
  return detect_error_threshold(n, sigma, options);
}

double exact_threshold(std::size_t n, double sigma) {
  check_sigma(sigma);
  if (n == 0) throw ConfigError("n must be >= 1", "n");
  return -std::expm1(-std::log(sigma) / static_cast<double>(n));
}

double first_order_threshold(std::size_t n, double sigma) {
  check_sigma(sigma);
  if (n == 0) throw ConfigError("n must be >= 1", "n");
  return std::log(sigma) / static_cast<double>(n);
}

std::vector<ThresholdSample> scan_master_frequency(std::size_t n, double sigma, double p_max, std::size_t points,
                                                   const StationaryOptions& options) {
  check_sigma(sigma);
  if (points == 0) throw ConfigError("points must be >= 1", "points");
  if (!(p_max > 0.0 && p_max <= 1.0)) throw DomainError("p_max must be in (0, 1]");
  std::vector<ThresholdSample> samples;
  samples.reserve(points);
  for (std::size_t i = 1; i <= points; ++i) {
    const double p = p_max * static_cast<double>(i) / static_cast<double>(points);
    const Stationary peaked = stationary_distribution(ClassModel::sharp_peak(n, sigma, p), options);
    const Stationary flat = stationary_distribution(ClassModel{n, std::vector<double>(n + 1, 1.0), p}, options);
    samples.push_back({p, peaked.freq[0], peaked.freq[0] / flat.freq[0]});
  }
  return samples;
}

}  // namespace critga::quasispecies
