// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "blocksplit/errors.hpp"
#include "blocksplit/linop.hpp"

namespace blocksplit {

// ---------------------------------------------------------------------------
// Experiment 1 generators.

std::vector<Group> gen_group_cover(Eigen::Index d) {
  detail::require(d >= 10, "gen_group_cover: d must be >= 10");
  constexpr Eigen::Index kWidth = 10;
  constexpr Eigen::Index kStride = 7;
  const Eigen::Index m =
      (d - kWidth + kStride - 1) / kStride + 1;  // ceil((d - 10) / 7) + 1
  std::vector<Group> groups;
  groups.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::Index first = i * kStride;
    if (first + kWidth > d) first = d - kWidth;  // last window pulled back to end at d
    groups.push_back({first, kWidth});
  }
  return groups;
}

GroupLassoInstance gen_classification_instance(Eigen::Index d, Eigen::Index p,
                                               Eigen::Index sparsity, double flip_rate,
                                               std::uint64_t seed) {
  detail::require(d >= 10, "gen_classification_instance: d must be >= 10");
  detail::require(p >= 1, "gen_classification_instance: p must be >= 1");
  detail::require(sparsity >= 1, "gen_classification_instance: sparsity must be >= 1");
  detail::require(flip_rate >= 0.0 && flip_rate < 1.0,
                  "gen_classification_instance: flip_rate must lie in [0, 1)");

  GroupLassoInstance inst;
  inst.d = d;
  inst.p = p;
  inst.groups = gen_group_cover(d);
  const Eigen::Index m = inst.m();
  detail::require(sparsity <= m, "gen_classification_instance: sparsity exceeds group count");
  inst.tau.assign(static_cast<std::size_t>(m), 0.1);

  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  // Support: `sparsity` distinct groups, chosen by partial shuffle.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  for (Eigen::Index j = 0; j < sparsity; ++j) {
    std::uniform_int_distribution<Eigen::Index> pick(j, m - 1);
    std::swap(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(pick(gen))]);
  }
  inst.true_signal = Eigen::VectorXd::Zero(d);
  for (Eigen::Index j = 0; j < sparsity; ++j) {
    const Group& grp = inst.groups[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
    for (Eigen::Index t = 0; t < grp.size; ++t) inst.true_signal[grp.first + t] = normal(gen);
  }

  inst.u.resize(p, d);
  Eigen::VectorXd scores(p);
  for (Eigen::Index k = 0; k < p; ++k) {
    double score = 0.0;
    do {
      for (Eigen::Index j = 0; j < d; ++j) inst.u(k, j) = normal(gen);
      score = inst.u.row(k).dot(inst.true_signal);
    } while (score == 0.0);
    scores[k] = score;
  }

  const Eigen::Index flips = static_cast<Eigen::Index>(
      std::ceil(flip_rate * static_cast<double>(p)));
  std::vector<Eigen::Index> korder(static_cast<std::size_t>(p));
  std::iota(korder.begin(), korder.end(), Eigen::Index{0});
  for (Eigen::Index j = 0; j < flips; ++j) {
    std::uniform_int_distribution<Eigen::Index> pick(j, p - 1);
    std::swap(korder[static_cast<std::size_t>(j)], korder[static_cast<std::size_t>(pick(gen))]);
  }
  inst.flipped.assign(korder.begin(), korder.begin() + flips);
  std::sort(inst.flipped.begin(), inst.flipped.end());

  inst.beta.resize(p);
  for (Eigen::Index k = 0; k < p; ++k) inst.beta[k] = scores[k] > 0.0 ? 1.0 : -1.0;
  for (Eigen::Index k : inst.flipped) inst.beta[k] = -inst.beta[k];
  return inst;
}

ProblemSpecPtr build_exp1_problem(const GroupLassoInstance& inst) {
  detail::require(inst.m() >= 1 && inst.p >= 1, "build_exp1_problem: empty instance");
  const Eigen::Index m = inst.m();
  std::vector<Eigen::Index> h_dims;
  h_dims.reserve(static_cast<std::size_t>(m));
  for (const Group& grp : inst.groups) h_dims.push_back(grp.size);
  std::vector<Eigen::Index> g_dims(static_cast<std::size_t>(inst.p), 1);

  BlockOperatorGrid grid(h_dims, g_dims);
  for (Eigen::Index k = 0; k < inst.p; ++k) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const Group& grp = inst.groups[static_cast<std::size_t>(i)];
      grid.set(k, i, row_functional_op(inst.u.row(k).segment(grp.first, grp.size)));
    }
  }

  std::vector<ProxFunction> f;
  f.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    f.push_back(prox_scaled_l2_norm(inst.tau[static_cast<std::size_t>(i)],
                                    inst.groups[static_cast<std::size_t>(i)].size));
  }
  std::vector<ProxFunction> g;
  g.reserve(static_cast<std::size_t>(inst.p));
  for (Eigen::Index k = 0; k < inst.p; ++k) g.push_back(prox_hinge(inst.beta[k]));

  return std::make_shared<ProblemSpec>(std::move(f), std::move(g), std::move(grid));
}

Eigen::VectorXd lift_group_solution(const GroupLassoInstance& inst, const BlockVector& x) {
  detail::require(x.block_count() == inst.m(), "lift_group_solution: block count mismatch");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(inst.d);
  for (Eigen::Index i = 0; i < inst.m(); ++i) {
    const Group& grp = inst.groups[static_cast<std::size_t>(i)];
    y.segment(grp.first, grp.size) += x.block(i);
  }
  return y;
}

// ---------------------------------------------------------------------------
// Experiment 2 generators.

Eigen::MatrixXd make_nonstationary_blur(Eigen::Index side, double sigma_min, double sigma_max,
                                        Eigen::Index radius) {
  const Eigen::Index n = side * side;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index r = 0; r < side; ++r) {
    const double frac = (side > 1) ? static_cast<double>(r) / static_cast<double>(side - 1) : 0.0;
    const double sigma = sigma_min + (sigma_max - sigma_min) * frac;
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    for (Eigen::Index c = 0; c < side; ++c) {
      const Eigen::Index row = r * side + c;
      double weight_sum = 0.0;
      for (Eigen::Index dr = -radius; dr <= radius; ++dr) {
        const Eigen::Index rr = r + dr;
        if (rr < 0 || rr >= side) continue;
        for (Eigen::Index dc = -radius; dc <= radius; ++dc) {
          const Eigen::Index cc = c + dc;
          if (cc < 0 || cc >= side) continue;
          const double w = std::exp(-static_cast<double>(dr * dr + dc * dc) * inv2s2);
          h(row, rr * side + cc) = w;
          weight_sum += w;
        }
      }
      h.row(row) /= weight_sum;  // kernels truncated at the frame renormalize to 1
    }
  }
  return h;
}

namespace {

Eigen::VectorXd make_truth_image(Eigen::Index side, std::uint64_t seed) {
  // Constant tiles on top of a diagonal ramp, clamped to [0, 255].
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> level(30.0, 225.0);
  std::uniform_int_distribution<Eigen::Index> tile_pick(0, side - 1);

  Eigen::VectorXd img(side * side);
  for (Eigen::Index r = 0; r < side; ++r) {
    for (Eigen::Index c = 0; c < side; ++c) {
      img[r * side + c] =
          40.0 + 120.0 * static_cast<double>(r + c) / static_cast<double>(2 * (side - 1));
    }
  }
  const Eigen::Index tiles = std::max<Eigen::Index>(3, side / 6);
  for (Eigen::Index t = 0; t < tiles; ++t) {
    const Eigen::Index r0 = tile_pick(gen);
    const Eigen::Index c0 = tile_pick(gen);
    const Eigen::Index extent = std::max<Eigen::Index>(2, side / 4);
    const double value = level(gen);
    for (Eigen::Index r = r0; r < std::min(side, r0 + extent); ++r)
      for (Eigen::Index c = c0; c < std::min(side, c0 + extent); ++c)
        img[r * side + c] = value;
  }
  for (Eigen::Index j = 0; j < img.size(); ++j) img[j] = std::clamp(img[j], 0.0, 255.0);
  return img;
}

// Scales the raw noise so that 20 log10(||signal|| / ||noise||) equals the
// target exactly.
Eigen::VectorXd scale_to_snr(const Eigen::VectorXd& raw, double signal_norm, double snr_db) {
  detail::require(raw.norm() > 0.0 && signal_norm > 0.0, "scale_to_snr: degenerate input");
  const double target_noise_norm = signal_norm * std::pow(10.0, -snr_db / 20.0);
  return raw * (target_noise_norm / raw.norm());
}

}  // namespace

ImageRecoveryInstance gen_image_instance(Eigen::Index side, Eigen::Index q, Eigen::Index s,
                                         double snr1_db, double snr2_db, std::uint64_t seed) {
  detail::require(side >= 4, "gen_image_instance: side must be >= 4");
  detail::require(q >= 1 && q < side, "gen_image_instance: need 1 <= q < side");
  const Eigen::Index n = side * side;
  detail::require(s >= 1 && n % s == 0,
                  "gen_image_instance: s must divide the pixel count into equal row blocks");
  detail::require((n / s) % side == 0,
                  "gen_image_instance: blur blocks must hold whole image rows");

  ImageRecoveryInstance inst;
  inst.side = side;
  inst.q = q;
  inst.s = s;
  inst.kernel_radius = std::max<Eigen::Index>(2, side / 12);
  inst.truth = make_truth_image(side, seed);
  inst.blur = make_nonstationary_blur(side, inst.sigma_min, inst.sigma_max, inst.kernel_radius);

  // q kept rows, evenly spaced.
  inst.mask_rows.reserve(static_cast<std::size_t>(q));
  for (Eigen::Index k = 0; k < q; ++k) {
    inst.mask_rows.push_back((k * side) / q + side / (2 * q));
  }

  std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::VectorXd kept(q * side);
  for (Eigen::Index k = 0; k < q; ++k) {
    kept.segment(k * side, side) = inst.truth.segment(inst.mask_rows[static_cast<std::size_t>(k)] * side, side);
  }
  Eigen::VectorXd raw1(q * side);
  for (Eigen::Index j = 0; j < raw1.size(); ++j) raw1[j] = normal(gen);
  inst.w1 = scale_to_snr(raw1, kept.norm(), snr1_db);
  inst.snr1_db = 20.0 * std::log10(kept.norm() / inst.w1.norm());

  inst.b = Eigen::VectorXd::Zero(n);
  for (Eigen::Index k = 0; k < q; ++k) {
    inst.b.segment(inst.mask_rows[static_cast<std::size_t>(k)] * side, side) =
        kept.segment(k * side, side) + inst.w1.segment(k * side, side);
  }

  const Eigen::VectorXd blurred = inst.blur * inst.truth;
  Eigen::VectorXd raw2(n);
  for (Eigen::Index j = 0; j < n; ++j) raw2[j] = normal(gen);
  inst.w2 = scale_to_snr(raw2, blurred.norm(), snr2_db);
  inst.snr2_db = 20.0 * std::log10(blurred.norm() / inst.w2.norm());
  inst.c = blurred + inst.w2;
  return inst;
}

ProblemSpecPtr build_exp2_problem(const ImageRecoveryInstance& inst) {
  const Eigen::Index n = inst.pixel_count();
  const Eigen::Index rows_per_block = n / inst.s;
  const Eigen::Index p = inst.q + inst.s + 1;

  std::vector<Eigen::Index> h_dims{n};
  std::vector<Eigen::Index> g_dims;
  g_dims.reserve(static_cast<std::size_t>(p));
  for (Eigen::Index k = 0; k < inst.q; ++k) g_dims.push_back(inst.side);
  for (Eigen::Index k = 0; k < inst.s; ++k) g_dims.push_back(rows_per_block);
  g_dims.push_back(2 * n);

  BlockOperatorGrid grid(h_dims, g_dims);
  std::vector<ProxFunction> g;
  g.reserve(static_cast<std::size_t>(p));

  // Kept rows: row-selector couplings with scaled distances to the data.
  for (Eigen::Index k = 0; k < inst.q; ++k) {
    const Eigen::Index row = inst.mask_rows[static_cast<std::size_t>(k)];
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(inst.side));
    std::iota(idx.begin(), idx.end(), row * inst.side);
    grid.set(k, 0, row_selector_op(n, idx));
    g.push_back(prox_scaled_l2_distance(10.0, inst.b.segment(row * inst.side, inst.side)));
  }
  // Blur blocks: dense row slices with squared-distance couplings.
  for (Eigen::Index k = 0; k < inst.s; ++k) {
    grid.set(inst.q + k, 0, dense_op(inst.blur.middleRows(k * rows_per_block, rows_per_block)));
    g.push_back(prox_scaled_sq_l2(5.0, inst.c.segment(k * rows_per_block, rows_per_block)));
  }
  // Finite differences with the pairwise l_{1,2} norm.
  grid.set(p - 1, 0, forward_difference_2d(inst.side));
  g.push_back(prox_l12_pairs(n));

  std::vector<ProxFunction> f;
  f.push_back(prox_box_indicator(0.0, 255.0, n));
  return std::make_shared<ProblemSpec>(std::move(f), std::move(g), std::move(grid));
}

// ---------------------------------------------------------------------------
// Reference solutions and metrics.

KTPoint compute_reference(ProblemSpecPtr spec, const ReferenceOptions& opts) {
  detail::require(spec != nullptr, "compute_reference: null spec");
  PSConfig cfg;
  cfg.plan = ActivationPlan::full(spec->m(), spec->p());
  cfg.gamma = PSConfig::uniform(opts.gamma, spec->m());
  cfg.mu = PSConfig::uniform(opts.mu, spec->p());
  const double lambda = opts.lambda;
  cfg.lambda = [lambda](std::int64_t) { return lambda; };
  cfg.max_iterations = opts.max_iterations;
  cfg.stop_tolerance = opts.tolerance;
  cfg.metrics_stride = opts.metrics_stride;
  // Under full activation a held step repeats forever; one hold means the
  // numerical floor is reached.
  cfg.stationary_after_holds = 1;

  PSSolver solver(spec, cfg);
  PSRunResult result = solver.run();
  const double res =
      kt_residual(*spec, KTPoint{result.state.x, result.state.v_star}, cfg.kt_gamma, cfg.kt_mu);
  if (res > opts.tolerance) {
    throw reference_failure("compute_reference: solver stopped (" +
                            std::string(to_string(result.reason)) + ") at KT residual " +
                            std::to_string(res) + " above tolerance " +
                            std::to_string(opts.tolerance));
  }
  return KTPoint{result.state.x, result.state.v_star};
}

double normalized_error_db(const BlockVector& x_n, const BlockVector& x_0,
                           const BlockVector& x_inf) {
  detail::require(x_n.dims() == x_0.dims() && x_0.dims() == x_inf.dims(),
                  "normalized_error_db: dimension mismatch");
  const double denom = (x_0 - x_inf).norm();
  detail::require(denom > 0.0, "normalized_error_db: undefined metric, x_0 equals x_inf");
  const double num = (x_n - x_inf).norm();
  constexpr double kFloorDb = -320.0;
  if (num == 0.0) return kFloorDb;
  return std::max(kFloorDb, 20.0 * std::log10(num / denom));
}

ErrorMetric make_error_metric(BlockVector x_0, BlockVector x_inf) {
  auto start = std::make_shared<const BlockVector>(std::move(x_0));
  auto ref = std::make_shared<const BlockVector>(std::move(x_inf));
  return [start, ref](const BlockVector& x) { return normalized_error_db(x, *start, *ref); };
}

// ---------------------------------------------------------------------------
// Comparison grids.

const char* to_string(Algorithm a) { return a == Algorithm::dr ? "dr" : "ps"; }

ActivationPlan make_cell_plan(Eigen::Index m, Eigen::Index p, PlanKind kind, AlphaSide side,
                              double alpha, std::uint64_t seed) {
  const double alpha_primal = (side == AlphaSide::primal) ? alpha : 1.0;
  const double alpha_dual = (side == AlphaSide::dual) ? alpha : 1.0;
  switch (kind) {
    case PlanKind::full:
      return ActivationPlan::full(m, p);
    case PlanKind::random_subset:
      return ActivationPlan::random_subset(m, p, alpha_primal, alpha_dual, seed);
    case PlanKind::cyclic_sweep:
      return ActivationPlan::cyclic_from_alpha(m, p, alpha_primal, alpha_dual);
  }
  throw std::invalid_argument("make_cell_plan: unknown plan kind");
}

namespace {

void zero_wall_times(std::vector<TraceRecord>& trace) {
  for (TraceRecord& rec : trace) rec.wall_ms = 0.0;
}

std::vector<TraceRecord> mean_trace(const std::vector<const std::vector<TraceRecord>*>& runs) {
  std::size_t len = runs.front()->size();
  for (const auto* r : runs) len = std::min(len, r->size());
  std::vector<TraceRecord> mean;
  mean.reserve(len);
  const double count = static_cast<double>(runs.size());
  for (std::size_t j = 0; j < len; ++j) {
    TraceRecord rec = (*runs.front())[j];
    double err = 0.0, obj = 0.0, res = 0.0, wall = 0.0, macs = 0.0;
    for (const auto* r : runs) {
      const TraceRecord& src = (*r)[j];
      err += src.error_db;
      obj += src.objective;
      res += src.kt_residual;
      wall += src.wall_ms;
      macs += static_cast<double>(src.macs);
    }
    rec.error_db = err / count;
    rec.objective = obj / count;
    rec.kt_residual = res / count;
    rec.wall_ms = wall / count;
    rec.macs = static_cast<std::uint64_t>(macs / count);
    mean.push_back(rec);
  }
  return mean;
}

}  // namespace

ComparisonTable run_comparison(ProblemSpecPtr spec, const KTPoint& reference,
                               const std::vector<Algorithm>& algorithms,
                               const std::vector<double>& alphas,
                               const std::vector<std::uint64_t>& seeds, double epoch_budget,
                               const ComparisonOptions& opts) {
  detail::require(spec != nullptr, "run_comparison: null spec");
  detail::require(!algorithms.empty() && !alphas.empty(), "run_comparison: empty grid");
  detail::require(epoch_budget > 0.0, "run_comparison: epoch budget must be positive");
  detail::require(reference.x.dims() == spec->h_dims(),
                  "run_comparison: reference does not match the problem");

  const ErrorMetric metric = make_error_metric(spec->zero_h(), reference.x);
  ComparisonTable table;

  for (Algorithm alg : algorithms) {
    for (double alpha : alphas) {
      std::vector<const std::vector<TraceRecord>*> cell_traces;
      // The deterministic plan kinds make every seed identical; run once.
      const PlanKind kind = (alg == Algorithm::dr) ? opts.dr_plan : opts.ps_plan;
      const bool seed_sensitive = (kind == PlanKind::random_subset);
      std::vector<std::uint64_t> cell_seeds =
          seed_sensitive ? seeds : std::vector<std::uint64_t>{0};
      if (cell_seeds.empty()) cell_seeds.push_back(0);

      for (std::uint64_t seed : cell_seeds) {
        ComparisonCell cell;
        cell.algorithm = alg;
        cell.alpha = alpha;
        cell.seed = seed;
        const ActivationPlan plan =
            make_cell_plan(spec->m(), spec->p(), kind, opts.alpha_side, alpha, seed);
        if (alg == Algorithm::dr) {
          DRConfig cfg;
          cfg.plan = plan;
          cfg.gamma = opts.dr_gamma;
          const double lambda = opts.dr_lambda;
          cfg.lambda = [lambda](std::int64_t) { return lambda; };
          cfg.max_iterations = opts.max_iterations;
          cfg.epoch_budget = epoch_budget;
          cfg.epoch_mode = opts.epoch_mode;
          cfg.metrics_stride = opts.metrics_stride;
          DRSolver solver(spec, cfg);
          cell.trace = solver.run({}, metric).trace;
        } else {
          PSConfig cfg;
          cfg.plan = plan;
          cfg.gamma = PSConfig::uniform(opts.ps_gamma, spec->m());
          cfg.mu = PSConfig::uniform(opts.ps_mu, spec->p());
          const double lambda = opts.ps_lambda;
          cfg.lambda = [lambda](std::int64_t) { return lambda; };
          cfg.max_iterations = opts.max_iterations;
          cfg.epoch_budget = epoch_budget;
          cfg.epoch_mode = opts.epoch_mode;
          cfg.metrics_stride = opts.metrics_stride;
          PSSolver solver(spec, cfg);
          cell.trace = solver.run({}, metric).trace;
        }
        if (!opts.timing) zero_wall_times(cell.trace);
        table.cells.push_back(std::move(cell));
      }

      for (auto it = table.cells.end() - static_cast<std::ptrdiff_t>(cell_seeds.size());
           it != table.cells.end(); ++it) {
        cell_traces.push_back(&it->trace);
      }
      ComparisonCell mean;
      mean.algorithm = alg;
      mean.alpha = alpha;
      mean.seed = 0;
      mean.trace = mean_trace(cell_traces);
      table.means.push_back(std::move(mean));
    }
  }
  return table;
}

}  // namespace blocksplit
