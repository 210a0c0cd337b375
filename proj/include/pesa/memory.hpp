#pragma once

#include <cstdint>
#include <vector>

#include "pesa/core.hpp"
#include "pesa/rng.hpp"

namespace pesa {

struct MemoryConfig {
  std::size_t capacity_max = 0;  // 0 = unbounded
  double alpha_init = 0.01;
  double alpha_end = 1.0;
  double dedup_tol = 1e-12;  // componentwise
};

/// Fitness-sorted store of unique candidates with rank-based priorities.
///
/// Entries stay sorted ascending by fitness after every update; ties keep
/// insertion order. Rank 1 (index 0) is the best candidate. The priority
/// exponent alpha is annealed externally between generations.
class ReplayMemory {
 public:
  explicit ReplayMemory(MemoryConfig cfg = {});

  /// Insert evaluated candidates, drop duplicates (componentwise within
  /// dedup_tol, keeping the earliest-inserted), re-sort, evict worst
  /// entries above capacity.
  void update(const std::vector<Candidate>& fresh);

  /// Normalized replay probabilities P_i = (1/rank_i)^alpha / sum.
  std::vector<double> priorities() const;

  /// Draw `count` candidates without replacement under the priority
  /// distribution; count >= size returns everything.
  std::vector<Candidate> sample_prioritized(std::size_t count,
                                            RandomStream& rng) const;

  /// Rank-1 entry (minimum fitness, earliest-inserted on ties).
  const Candidate& best() const;

  /// Linear schedule from alpha_init at generation 1 to alpha_end at n_gen.
  void anneal_alpha(int generation, int n_gen);

  double alpha() const { return alpha_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Candidate& entry(std::size_t rank0) const { return entries_[rank0].c; }

  const MemoryConfig& config() const { return cfg_; }

 private:
  struct Entry {
    Candidate c;
    std::uint64_t seq;  // insertion order, tie-breaker
  };

  bool is_duplicate(const Eigen::VectorXd& x) const;
  void require_nonempty() const;

  MemoryConfig cfg_;
  std::vector<Entry> entries_;
  double alpha_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace pesa
