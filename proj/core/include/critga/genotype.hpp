#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace critga {

/// Fixed-length binary word of at most 64 bits.
///
/// Bit i is the i-th character of the textual form, so "1100" has bits 0 and 1 set.
class Genotype {
 public:
  static constexpr std::size_t kMaxLength = 64;

  Genotype() = default;
  /// Throws ConfigError when length is 0 or above kMaxLength. Bits above length are dropped.
  explicit Genotype(std::size_t length, std::uint64_t bits = 0);

  static Genotype zeros(std::size_t length) { return Genotype(length); }
  static Genotype ones(std::size_t length) { return Genotype(length, ~std::uint64_t{0}); }
  /// Parses a string of '0'/'1' characters.
  static Genotype parse(std::string_view text);

  std::size_t size() const noexcept { return length_; }
  std::uint64_t word() const noexcept { return bits_; }

  bool test(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  void set(std::size_t i, bool value) noexcept {
    bits_ = value ? (bits_ | (std::uint64_t{1} << i)) : (bits_ & ~(std::uint64_t{1} << i));
  }
  void flip(std::size_t i) noexcept { bits_ ^= std::uint64_t{1} << i; }
  /// XORs a mask into the word; bits above size() are ignored.
  void flip_mask(std::uint64_t mask) noexcept { bits_ ^= (mask & mask_for(length_)); }

  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::size_t hamming(const Genotype& other) const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_ ^ other.bits_));
  }
  Genotype complement() const noexcept { return Genotype(length_, ~bits_); }

  std::string to_string() const;

  friend bool operator==(const Genotype&, const Genotype&) = default;

  static constexpr std::uint64_t mask_for(std::size_t length) noexcept {
    return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
  }

 private:
  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
};

}  // namespace critga
