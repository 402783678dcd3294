// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

namespace blocksplit {

/// Index sets (I_n, K_n) of the blocks activated at one iteration (0-based).
struct BlockSelection {
  std::vector<Eigen::Index> primal;
  std::vector<Eigen::Index> dual;
};

/// Which blocks to activate at which iteration.
///
/// `full` activates everything each iteration. `random_subset` draws, for
/// each n independently, a uniformly random fixed-size subset per side
/// (ceil(alpha * count) indices); draws are a pure function of (seed, n) and
/// never depend on solver state. `cyclic_sweep` partitions each side into
/// contiguous slices visited round-robin, so every window of `slices`
/// consecutive iterations covers all indices.
class ActivationPlan {
 public:
  enum class Kind { full, random_subset, cyclic_sweep };

  /// Unset plan (m = p = 0); solvers reject it until replaced through one of
  /// the factories below.
  ActivationPlan() = default;

  static ActivationPlan full(Eigen::Index m, Eigen::Index p);
  static ActivationPlan random_subset(Eigen::Index m, Eigen::Index p, double alpha_primal,
                                      double alpha_dual, std::uint64_t seed);
  static ActivationPlan cyclic_sweep(Eigen::Index m, Eigen::Index p, Eigen::Index slices_primal,
                                     Eigen::Index slices_dual);
  /// Cyclic plan with ceil(1/alpha) slices per side (clamped to the block
  /// count), the deterministic counterpart of random_subset(alpha).
  static ActivationPlan cyclic_from_alpha(Eigen::Index m, Eigen::Index p, double alpha_primal,
                                          double alpha_dual);

  Kind kind() const { return kind_; }
  Eigen::Index m() const { return m_; }
  Eigen::Index p() const { return p_; }
  bool deterministic() const { return kind_ != Kind::random_subset; }

  /// Smallest T such that every window of T+1 consecutive iterations covers
  /// all indices on both sides (deterministic plans only).
  Eigen::Index sweep_period() const;

  /// The sets (I_n, K_n); both nonempty, sorted ascending.
  BlockSelection next_blocks(std::int64_t n) const;

  /// Per-iteration activated-block counts (constant over n for all variants).
  Eigen::Index primal_count_per_iteration() const;
  Eigen::Index dual_count_per_iteration() const;

 private:
  Kind kind_ = Kind::full;
  Eigen::Index m_ = 0;
  Eigen::Index p_ = 0;
  Eigen::Index subset_primal_ = 0;  // random: |I_n|
  Eigen::Index subset_dual_ = 0;    // random: |K_n|
  Eigen::Index slices_primal_ = 1;  // cyclic
  Eigen::Index slices_dual_ = 1;    // cyclic
  std::uint64_t seed_ = 0;
};

/// True iff every window of T+1 consecutive iterations within [0, horizon]
/// activates every index on both sides.
bool verify_sweeping(const std::function<BlockSelection(std::int64_t)>& select,
                     Eigen::Index m, Eigen::Index p, std::int64_t horizon, Eigen::Index T);
bool verify_sweeping(const ActivationPlan& plan, std::int64_t horizon, Eigen::Index T);

/// Cumulative activated-block count divided by a fixed denominator; the
/// hardware-neutral progress unit used by the experiment traces.
class EpochCounter {
 public:
  explicit EpochCounter(Eigen::Index denominator);
  void record_activation(Eigen::Index count);
  double epochs_elapsed() const;
  std::uint64_t cumulative() const { return cumulative_; }

 private:
  std::uint64_t cumulative_ = 0;
  Eigen::Index denominator_;
};

}  // namespace blocksplit
