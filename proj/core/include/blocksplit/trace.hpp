// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "blocksplit/block_vector.hpp"

namespace blocksplit {

/// Per-iteration solver metrics.
struct TraceRecord {
  std::int64_t iteration = 0;
  double epochs = 0.0;
  double error_db = std::numeric_limits<double>::quiet_NaN();
  double objective = 0.0;
  double kt_residual = 0.0;
  Eigen::Index activated_primal = 0;
  Eigen::Index activated_dual = 0;
  double wall_ms = 0.0;
  std::uint64_t macs = 0;
};

using TraceSink = std::function<void(const TraceRecord&)>;

/// Progress metric injected by the caller (typically the normalized error in
/// dB against a reference point); NaN when no reference is available.
using ErrorMetric = std::function<double(const BlockVector& x)>;

enum class StopReason { max_iterations, tolerance_reached, epoch_budget, stationary };

const char* to_string(StopReason r);

}  // namespace blocksplit
