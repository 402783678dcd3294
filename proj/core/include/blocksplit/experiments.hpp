// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "blocksplit/problem.hpp"
#include "blocksplit/solver_dr.hpp"
#include "blocksplit/solver_ps.hpp"
#include "blocksplit/trace.hpp"

namespace blocksplit {

// ---------------------------------------------------------------------------
// Experiment 1: group-sparse binary classification.

/// Contiguous index window [first, first + size) within {0..d-1}.
struct Group {
  Eigen::Index first = 0;
  Eigen::Index size = 0;
};

/// Covering of {0..d-1} by windows of width 10 placed at stride 7, so each
/// interior group overlaps its successor in exactly 3 indices; the last
/// window is pulled back so it ends at d. Group count is
/// ceil((d - 10) / 7) + 1.
std::vector<Group> gen_group_cover(Eigen::Index d);

struct GroupLassoInstance {
  Eigen::Index d = 0;  // ambient dimension
  Eigen::Index p = 0;  // number of measurements
  std::vector<Group> groups;
  std::vector<double> tau;           // per-group weights, one per group
  Eigen::VectorXd true_signal;       // group-sparse generator of the labels
  Eigen::MatrixXd u;                 // p x d, measurement vectors as rows
  Eigen::VectorXd beta;              // p labels in {-1, +1}
  std::vector<Eigen::Index> flipped; // measurement indices with flipped labels

  Eigen::Index m() const { return static_cast<Eigen::Index>(groups.size()); }
};

/// Draws a signal supported on `sparsity` random groups, standard normal
/// measurement vectors, and labels beta_k = omega_k * sign(<signal, u_k>)
/// where exactly ceil(flip_rate * p) of the omega_k are -1. Degenerate
/// measurements with <signal, u_k> = 0 are redrawn. tau_i = 0.1 throughout.
GroupLassoInstance gen_classification_instance(Eigen::Index d, Eigen::Index p,
                                               Eigen::Index sparsity, double flip_rate,
                                               std::uint64_t seed);

/// Assembles the group-lasso problem: H_i = R^{|G_i|}, f_i = tau_i ||.||_2,
/// G_k = R, g_k the hinge with slope beta_k, and L_{k,i} the row functional
/// <., u_k restricted to G_i>.
ProblemSpecPtr build_exp1_problem(const GroupLassoInstance& inst);

/// Sum of the per-group blocks, zero-padded back to R^d.
Eigen::VectorXd lift_group_solution(const GroupLassoInstance& inst, const BlockVector& x);

// ---------------------------------------------------------------------------
// Experiment 2: image recovery from masked and blurred observations.

struct ImageRecoveryInstance {
  Eigen::Index side = 0;  // image is side x side, N = side^2 pixels
  Eigen::Index q = 0;     // kept rows in the masked observation
  Eigen::Index s = 0;     // blur row blocks
  double sigma_min = 0.6; // blur kernel width varies linearly across rows
  double sigma_max = 2.4;
  Eigen::Index kernel_radius = 0;
  Eigen::VectorXd truth;            // N, values in [0, 255]
  std::vector<Eigen::Index> mask_rows;  // q image-row indices
  Eigen::VectorXd b;                // N; masked rows zero
  Eigen::VectorXd c;                // N; blurred + noisy
  Eigen::VectorXd w1;               // q * side, noise on the kept rows
  Eigen::VectorXd w2;               // N
  Eigen::MatrixXd blur;             // N x N nonstationary Gaussian blur
  double snr1_db = 0.0;             // achieved SNR of b on the kept rows
  double snr2_db = 0.0;             // achieved SNR of c

  Eigen::Index pixel_count() const { return side * side; }
};

/// Synthetic piecewise-smooth truth in [0, 255] (constant tiles over a
/// gradient ramp), q evenly spaced kept rows, a row-dependent Gaussian blur
/// split into s equal row blocks, and Gaussian noise scaled so each
/// observation attains its target SNR exactly.
ImageRecoveryInstance gen_image_instance(Eigen::Index side, Eigen::Index q, Eigen::Index s,
                                         double snr1_db, double snr2_db, std::uint64_t seed);

/// Row-dependent Gaussian blur matrix (N x N); the kernel width grows
/// linearly from sigma_min on the top row to sigma_max on the bottom row,
/// truncated at radius and at the frame, each kernel renormalized to sum 1.
Eigen::MatrixXd make_nonstationary_blur(Eigen::Index side, double sigma_min, double sigma_max,
                                        Eigen::Index radius);

/// Assembles the recovery problem: m = 1 with f_1 the box indicator on
/// [0, 255]^N; p = q + s + 1 couplings (scaled distances on kept rows,
/// scaled squared distances on blur blocks, and the pairwise l_{1,2} norm on
/// the finite-difference field).
ProblemSpecPtr build_exp2_problem(const ImageRecoveryInstance& inst);

// ---------------------------------------------------------------------------
// Reference solutions and convergence metrics.

struct ReferenceOptions {
  double tolerance = 1e-10;
  std::int64_t max_iterations = 1000000;
  double lambda = 1.0;
  double gamma = 1.0;  // broadcast to every gamma_i
  double mu = 1.0;     // broadcast to every mu_k
  std::int64_t metrics_stride = 25;
};

/// High-precision solution via projective splitting under full activation;
/// throws reference_failure if the tolerance is not reached.
KTPoint compute_reference(ProblemSpecPtr spec, const ReferenceOptions& opts = {});

/// 20 log10(||x_n - x_inf|| / ||x_0 - x_inf||); 0 dB at x_n = x_0, clamped
/// at -320 dB, and rejecting x_0 = x_inf as undefined.
double normalized_error_db(const BlockVector& x_n, const BlockVector& x_0,
                           const BlockVector& x_inf);

/// ErrorMetric closure measuring against a fixed reference and start.
ErrorMetric make_error_metric(BlockVector x_0, BlockVector x_inf);

// ---------------------------------------------------------------------------
// Comparison grids (the figure-style experiment driver).

enum class Algorithm { dr, ps };

const char* to_string(Algorithm a);

enum class PlanKind { full, random_subset, cyclic_sweep };

/// Which side the activation fraction applies to; the other side stays at
/// full activation. Experiment 1 activates primal blocks, experiment 2
/// coupling blocks.
enum class AlphaSide { primal, dual };

struct ComparisonOptions {
  AlphaSide alpha_side = AlphaSide::primal;
  EpochMode epoch_mode = EpochMode::primal;
  PlanKind dr_plan = PlanKind::random_subset;
  PlanKind ps_plan = PlanKind::cyclic_sweep;
  double dr_gamma = 1.0;
  double dr_lambda = 1.5;
  double ps_gamma = 1.0;
  double ps_mu = 1.0;
  double ps_lambda = 1.9;
  std::int64_t max_iterations = 1000000;
  std::int64_t metrics_stride = 1;
  bool timing = false;  // when false, wall_ms is zeroed for reproducibility
};

struct ComparisonCell {
  Algorithm algorithm = Algorithm::dr;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  std::vector<TraceRecord> trace;
};

struct ComparisonTable {
  std::vector<ComparisonCell> cells;
  /// Per (algorithm, alpha) mean across seeds, aligned by iteration index.
  std::vector<ComparisonCell> means;
};

/// Runs every (algorithm, alpha, seed) configuration to the epoch budget
/// against the supplied reference and aggregates per-configuration means.
/// The deterministic algorithm runs once per alpha (its trace is seed-free).
ComparisonTable run_comparison(ProblemSpecPtr spec, const KTPoint& reference,
                               const std::vector<Algorithm>& algorithms,
                               const std::vector<double>& alphas,
                               const std::vector<std::uint64_t>& seeds, double epoch_budget,
                               const ComparisonOptions& opts);

/// Plan for one grid cell under the given options.
ActivationPlan make_cell_plan(Eigen::Index m, Eigen::Index p, PlanKind kind, AlphaSide side,
                              double alpha, std::uint64_t seed);

}  // namespace blocksplit
