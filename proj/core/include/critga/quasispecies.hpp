#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace critga::quasispecies {

/// Dense row-major matrix, sized for error-class operators ((n+1) x (n+1)).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  /// out = A x
  void multiply(std::span<const double> x, std::span<double> out) const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Binomial coefficient as a double: exact integer arithmetic up to n = 25, log-gamma above.
double binomial(std::size_t n, std::size_t k) noexcept;

/// Infinite-population mutation-selection model in error-class coordinates.
struct ClassModel {
  std::size_t n = 0;
  /// Entry k is the fitness of every genotype at Hamming distance k from the master.
  std::vector<double> class_fitness;
  double mutation_rate = 0.0;

  /// Fitness sigma for class 0 and 1 for every other class.
  static ClassModel sharp_peak(std::size_t n, double sigma, double mutation_rate);

  void validate() const;
};

/// M[l][k]: probability that a genotype in class k lands in class l after per-bit mutation with
/// probability p. Columns sum to one. Throws DomainError for p outside [0, 1].
Matrix class_mutation_matrix(std::size_t n, double p);

/// The class profile of the uniform distribution over genotypes: C(n,k) / 2^n.
std::vector<double> neutral_profile(std::size_t n);

struct StationaryOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1'000'000;
};

struct Stationary {
  /// Class frequencies, summing to one.
  std::vector<double> freq;
  /// Mean fitness of the stationary population, i.e. the dominant eigenvalue of M F.
  double mean_fitness = 0.0;
  std::size_t iterations = 0;
  /// L1 distance between the last two iterates.
  double residual = 0.0;
};

/// Power iteration x <- normalize(M F x) from the neutral profile until successive iterates
/// differ by less than options.tolerance in L1. Throws ConvergenceError (with the last residual)
/// when options.max_iterations is exhausted.
Stationary stationary_distribution(const ClassModel& model, const StationaryOptions& options = {});

/// ln(sigma * M[0][0]) - ln(rho), where rho is the spectral radius of the mutation operator
/// restricted to the mutant classes 1..n. Positive while the master class can sustain itself
/// against the mutant cloud without back-mutations, negative once it cannot.
double master_selection_margin(std::size_t n, double sigma, double p, const StationaryOptions& options = {});

/// Order parameter used to locate the threshold.
enum class ThresholdCriterion {
  /// Sign change of master_selection_margin.
  MasterSurvival,
  /// Stationary master frequency over its sigma = 1 value crossing a fixed level.
  NeutralRatio,
};

struct ThresholdOptions {
  ThresholdCriterion criterion = ThresholdCriterion::MasterSurvival;
  /// Crossing level for NeutralRatio.
  double crossing = 2.0;
  /// Absolute tolerance on the returned probability.
  double tolerance = 1e-7;
  StationaryOptions stationary;
};

/// freq[0] of the sharp-peak model divided by freq[0] of the flat model at the same p.
double neutral_ratio(std::size_t n, double sigma, double p, const StationaryOptions& options = {});

/// Bisects p in (0, 1/2) for the crossing of the chosen order parameter.
/// Throws DetectionError when the order parameter does not change sides inside the range.
double detect_error_threshold(std::size_t n, double sigma, const ThresholdOptions& options = {});
double detect_error_threshold(std::size_t n, double sigma, double tolerance);

/// 1 - sigma^(-1/n), the root of sigma (1-p)^n = 1.
double exact_threshold(std::size_t n, double sigma);

/// ln(sigma) / n, the small-p approximation of exact_threshold.
double first_order_threshold(std::size_t n, double sigma);

struct ThresholdSample {
  double p = 0.0;
  double master_frequency = 0.0;
  double ratio = 0.0;
};

/// freq[0] and neutral ratio on an even grid of `points` probabilities in (0, p_max].
std::vector<ThresholdSample> scan_master_frequency(std::size_t n, double sigma, double p_max, std::size_t points,
                                                   const StationaryOptions& options = {});

}  // namespace critga::quasispecies
