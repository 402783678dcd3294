// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "blocksplit/errors.hpp"

namespace blocksplit {

namespace {

Eigen::Index subset_size(double alpha, Eigen::Index count, const char* who) {
  detail::require(alpha > 0.0 && alpha <= 1.0,
                  std::string(who) + ": alpha must lie in (0, 1]");
  const Eigen::Index size = static_cast<Eigen::Index>(
      std::ceil(alpha * static_cast<double>(count)));
  detail::require(size >= 1, std::string(who) + ": ceil(alpha * count) must be >= 1");
  return std::min(size, count);
}

// Uniform fixed-size subset of {0..count-1} via partial Fisher-Yates, as a
// pure function of (seed, n, salt); sorted ascending.
std::vector<Eigen::Index> draw_subset(Eigen::Index count, Eigen::Index size,
                                      std::uint64_t seed, std::int64_t n,
                                      std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n & 0xffffffff),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) >> 32), salt};
  std::mt19937_64 gen(seq);
  std::vector<Eigen::Index> pool(static_cast<std::size_t>(count));
  std::iota(pool.begin(), pool.end(), Eigen::Index{0});
  for (Eigen::Index j = 0; j < size; ++j) {
    std::uniform_int_distribution<Eigen::Index> pick(j, count - 1);
    std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick(gen))]);
  }
  std::vector<Eigen::Index> out(pool.begin(), pool.begin() + size);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Eigen::Index> cyclic_slice(Eigen::Index count, Eigen::Index slices,
                                       std::int64_t n) {
  const Eigen::Index slice = static_cast<Eigen::Index>(
      static_cast<std::int64_t>(n) % static_cast<std::int64_t>(slices));
  // Contiguous near-equal slices; the first (count % slices) carry one extra.
  const Eigen::Index base = count / slices;
  const Eigen::Index extra = count % slices;
  const Eigen::Index first = slice * base + std::min(slice, extra);
  const Eigen::Index size = base + (slice < extra ? 1 : 0);
  std::vector<Eigen::Index> out(static_cast<std::size_t>(size));
  std::iota(out.begin(), out.end(), first);
  return out;
}

std::vector<Eigen::Index> all_indices(Eigen::Index count) {
  std::vector<Eigen::Index> out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), Eigen::Index{0});
  return out;
}

}  // namespace

ActivationPlan ActivationPlan::full(Eigen::Index m, Eigen::Index p) {
  detail::require(m >= 1, "ActivationPlan::full: m must be >= 1");
  detail::require(p >= 0, "ActivationPlan::full: p must be >= 0");
  ActivationPlan plan;
  plan.kind_ = Kind::full;
  plan.m_ = m;
  plan.p_ = p;
  return plan;
}

ActivationPlan ActivationPlan::random_subset(Eigen::Index m, Eigen::Index p,
                                             double alpha_primal, double alpha_dual,
                                             std::uint64_t seed) {
  detail::require(m >= 1, "ActivationPlan::random_subset: m must be >= 1");
  detail::require(p >= 1, "ActivationPlan::random_subset: p must be >= 1");
  ActivationPlan plan;
  plan.kind_ = Kind::random_subset;
  plan.m_ = m;
  plan.p_ = p;
  plan.subset_primal_ = subset_size(alpha_primal, m, "ActivationPlan::random_subset");
  plan.subset_dual_ = subset_size(alpha_dual, p, "ActivationPlan::random_subset");
  plan.seed_ = seed;
  return plan;
}

ActivationPlan ActivationPlan::cyclic_sweep(Eigen::Index m, Eigen::Index p,
                                            Eigen::Index slices_primal,
                                            Eigen::Index slices_dual) {
  detail::require(m >= 1, "ActivationPlan::cyclic_sweep: m must be >= 1");
  detail::require(p >= 1, "ActivationPlan::cyclic_sweep: p must be >= 1");
  detail::require(slices_primal >= 1 && slices_primal <= m,
                  "ActivationPlan::cyclic_sweep: slices_primal out of range");
  detail::require(slices_dual >= 1 && slices_dual <= p,
                  "ActivationPlan::cyclic_sweep: slices_dual out of range");
  ActivationPlan plan;
  plan.kind_ = Kind::cyclic_sweep;
  plan.m_ = m;
  plan.p_ = p;
  plan.slices_primal_ = slices_primal;
  plan.slices_dual_ = slices_dual;
  return plan;
}

ActivationPlan ActivationPlan::cyclic_from_alpha(Eigen::Index m, Eigen::Index p,
                                                 double alpha_primal, double alpha_dual) {
  detail::require(alpha_primal > 0.0 && alpha_primal <= 1.0 && alpha_dual > 0.0 &&
                      alpha_dual <= 1.0,
                  "ActivationPlan::cyclic_from_alpha: alpha must lie in (0, 1]");
  const auto slices = [](double alpha, Eigen::Index count) {
    const Eigen::Index s = static_cast<Eigen::Index>(std::ceil(1.0 / alpha));
    return std::clamp<Eigen::Index>(s, 1, count);
  };
  return cyclic_sweep(m, p, slices(alpha_primal, m), slices(alpha_dual, p));
}

Eigen::Index ActivationPlan::sweep_period() const {
  detail::require(deterministic(), "ActivationPlan::sweep_period: plan is randomized");
  if (kind_ == Kind::full) return 0;
  return std::max(slices_primal_, slices_dual_) - 1;
}

BlockSelection ActivationPlan::next_blocks(std::int64_t n) const {
  detail::require(n >= 0, "ActivationPlan::next_blocks: n must be >= 0");
  BlockSelection sel;
  switch (kind_) {
    case Kind::full:
      sel.primal = all_indices(m_);
      sel.dual = all_indices(p_);
      break;
    case Kind::random_subset:
      sel.primal = draw_subset(m_, subset_primal_, seed_, n, 0x1u);
      sel.dual = draw_subset(p_, subset_dual_, seed_, n, 0x2u);
      break;
    case Kind::cyclic_sweep:
      sel.primal = cyclic_slice(m_, slices_primal_, n);
      sel.dual = cyclic_slice(p_, slices_dual_, n);
      break;
  }
  return sel;
}

Eigen::Index ActivationPlan::primal_count_per_iteration() const {
  switch (kind_) {
    case Kind::full:
      return m_;
    case Kind::random_subset:
      return subset_primal_;
    case Kind::cyclic_sweep:
      // Slice sizes differ by at most one; report the larger.
      return m_ / slices_primal_ + (m_ % slices_primal_ ? 1 : 0);
  }
  return m_;
}

Eigen::Index ActivationPlan::dual_count_per_iteration() const {
  switch (kind_) {
    case Kind::full:
      return p_;
    case Kind::random_subset:
      return subset_dual_;
    case Kind::cyclic_sweep:
      return p_ / slices_dual_ + (p_ % slices_dual_ ? 1 : 0);
  }
  return p_;
}

bool verify_sweeping(const std::function<BlockSelection(std::int64_t)>& select,
                     Eigen::Index m, Eigen::Index p, std::int64_t horizon, Eigen::Index T) {
  detail::require(horizon >= 0 && T >= 0, "verify_sweeping: horizon and T must be >= 0");
  std::vector<BlockSelection> window;
  window.reserve(static_cast<std::size_t>(horizon) + 1);
  for (std::int64_t n = 0; n <= horizon; ++n) window.push_back(select(n));

  std::vector<char> seen_primal(static_cast<std::size_t>(m));
  std::vector<char> seen_dual(static_cast<std::size_t>(p));
  for (std::int64_t start = 0; start + T <= horizon; ++start) {
    std::fill(seen_primal.begin(), seen_primal.end(), 0);
    std::fill(seen_dual.begin(), seen_dual.end(), 0);
    for (std::int64_t n = start; n <= start + T; ++n) {
      for (Eigen::Index i : window[static_cast<std::size_t>(n)].primal)
        seen_primal[static_cast<std::size_t>(i)] = 1;
      for (Eigen::Index k : window[static_cast<std::size_t>(n)].dual)
        seen_dual[static_cast<std::size_t>(k)] = 1;
    }
    if (std::find(seen_primal.begin(), seen_primal.end(), 0) != seen_primal.end()) return false;
    if (std::find(seen_dual.begin(), seen_dual.end(), 0) != seen_dual.end()) return false;
  }
  return true;
}

bool verify_sweeping(const ActivationPlan& plan, std::int64_t horizon, Eigen::Index T) {
  detail::require(plan.deterministic(), "verify_sweeping: plan must be deterministic");
  return verify_sweeping([&plan](std::int64_t n) { return plan.next_blocks(n); }, plan.m(),
                         plan.p(), horizon, T);
}

EpochCounter::EpochCounter(Eigen::Index denominator) : denominator_(denominator) {
  detail::require(denominator >= 1, "EpochCounter: denominator must be >= 1");
}

void EpochCounter::record_activation(Eigen::Index count) {
  detail::require(count >= 0, "EpochCounter::record_activation: negative count");
  cumulative_ += static_cast<std::uint64_t>(count);
}

double EpochCounter::epochs_elapsed() const {
  return static_cast<double>(cumulative_) / static_cast<double>(denominator_);
}

}  // namespace blocksplit
