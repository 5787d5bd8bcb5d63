#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "critga/genotype.hpp"
#include "critga/landscape.hpp"

namespace critga {

struct Member {
  Genotype genotype;
  double fitness = 0.0;

  friend bool operator==(const Member&, const Member&) = default;
};

/// Ordered list of members with cached fitness. Size and length invariants are
/// checked by the operations that create populations, not by the container.
class Population {
 public:
  Population() = default;
  explicit Population(std::vector<Member> members) : members_(std::move(members)) {}

  /// Evaluates every genotype on `landscape`.
  static Population evaluated(std::span<const Genotype> genotypes, const FitnessLandscape& landscape);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t genotype_length() const noexcept { return members_.empty() ? 0 : members_.front().genotype.size(); }

  Member& operator[](std::size_t i) noexcept { return members_[i]; }
  const Member& operator[](std::size_t i) const noexcept { return members_[i]; }

  auto begin() noexcept { return members_.begin(); }
  auto end() noexcept { return members_.end(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  std::span<const Member> members() const noexcept { return members_; }
  std::vector<Member>& mutable_members() noexcept { return members_; }

  void push_back(Member m) { members_.push_back(std::move(m)); }

  double mean_fitness() const noexcept;
  /// Mean pairwise Hamming distance over all unordered pairs, in bits; 0 for fewer than two members.
  double diversity() const noexcept;

  friend bool operator==(const Population&, const Population&) = default;

 private:
  std::vector<Member> members_;
};

}  // namespace critga
