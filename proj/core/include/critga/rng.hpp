#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace critga {

/// Seedable, splittable generator used by every stochastic operator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the standard. All derived
/// draws (uniform doubles, bounded integers, Bernoulli trials) are computed here rather than
/// through std distributions, whose algorithms are implementation-defined, so a seed produces
/// the same stream on every conforming toolchain.
class Rng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::string_view kAlgorithm = "mt19937_64+splitmix64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for (master seed, stream index), e.g. one per replica.
  static Rng for_stream(std::uint64_t master_seed, std::uint64_t stream);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  /// Word whose low `count` bits are independent fair coin flips.
  std::uint64_t bits(std::size_t count);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

}  // namespace critga
