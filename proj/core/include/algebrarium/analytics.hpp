#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algebrarium/response_eval.hpp"

namespace algebrarium {

/// Expected Pass@k of one instance with success probability p_hat:
/// 1 - (1 - p_hat)^k. Throws DomainError for k < 1 or p_hat outside [0,1].
double theoretical_pass_k(double p_hat, int k);

/// Unbiased finite-sample Pass@k from c successes among n samples,
/// 1 - C(n-c, k) / C(n, k), evaluated as a running product.
double empirical_pass_k(int n, int c, int k);

enum class CurveKind { Theoretical, Empirical };

struct PassKCurve {
  std::vector<int> ks;
  std::vector<double> values;
  CurveKind kind = CurveKind::Theoretical;
};

/// Dataset means per k. Throws DomainError when some k exceeds an instance's n.
std::pair<PassKCurve, PassKCurve> dataset_pass_k_curves(std::span<const InstanceEstimate> estimates,
                                                        std::span<const int> ks);

/// Mean squared pointwise gap; both curves must share ks.
double curve_mse(const PassKCurve& a, const PassKCurve& b);

/// 1, 2, 4, ... up to and including n when n is a power of two.
std::vector<int> power_of_two_ks(int n);

/// Product of per-step success estimates. Throws EmptyChain.
double joint_probability(std::span<const InstanceEstimate> chain_estimates);

struct DepthPoint {
  int depth;
  double observed;
};

struct BarrierFit {
  double p_hat_fit = 0.0;
  int points_used = 0;
  double residual_rms = 0.0;  // in log space
  int dropped_zero_points = 0;
};

/// Least squares of log P = N log p with no intercept. Points with P = 0 are
/// dropped and counted. Throws InsufficientData with fewer than two usable points.
BarrierFit fit_barrier(std::span<const DepthPoint> points);

/// Sample Pearson correlation. Throws DegenerateInput for mismatched or short
/// inputs and for zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct ClassificationCensus {
  int null_count = 0;
  int transitional_count = 0;
  int feasible_count = 0;

  int total() const noexcept { return null_count + transitional_count + feasible_count; }
};

ClassificationCensus census(std::span<const InstanceEstimate> estimates);

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<int> counts;
};

/// Values outside [lo, hi) land in the end bins. Throws DomainError.
Histogram histogram(std::span<const double> values, int bins, double lo = 0.0, double hi = 1.0);

struct EmergenceReport {
  int null_count_base = 0;
  int recovered_count = 0;
  double recovery_rate = 0.0;  // 0 when the base has no Null tasks
  double recovered_mean = 0.0;
  double recovered_median = 0.0;
  Histogram recovered_histogram;
  std::vector<std::string> recovered_ids;
};

/// Base-Null tasks that are Feasible after. Throws IdMismatch unless both runs
/// cover the same ids.
EmergenceReport emergence(std::span<const InstanceEstimate> base, std::span<const InstanceEstimate> post,
                          const ClassificationConfig& cfg = {});

struct ShiftRecord {
  std::string skill_id;
  double base_acc = 0.0;
  double delta = 0.0;  // post - base
};

std::vector<ShiftRecord> shift_analysis(std::span<const InstanceEstimate> base,
                                        std::span<const InstanceEstimate> post);

/// Records that started strong (base >= min_base) and fell by at least -max_delta.
std::size_t count_eroded(std::span<const ShiftRecord> shifts, double min_base = 0.8, double max_delta = -0.1);

}  // namespace algebrarium
