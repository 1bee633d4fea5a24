#include "algebrarium/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "algebrarium/error.hpp"

namespace algebrarium {
namespace {

std::unordered_map<std::string, const InstanceEstimate*> index_by_id(std::span<const InstanceEstimate> ests) {
  std::unordered_map<std::string, const InstanceEstimate*> out;
  out.reserve(ests.size());
  for (const auto& e : ests) out.emplace(e.task_id, &e);
  return out;
}

void require_same_ids(std::span<const InstanceEstimate> base, std::span<const InstanceEstimate> post,
                      const std::unordered_map<std::string, const InstanceEstimate*>& post_index) {
  if (base.size() != post.size() || post_index.size() != post.size()) {
    throw Error(ErrorCode::IdMismatch, "runs cover different task sets (" + std::to_string(base.size()) + " vs " +
                                           std::to_string(post.size()) + ")");
  }
  for (const auto& e : base) {
    if (!post_index.contains(e.task_id)) throw Error(ErrorCode::IdMismatch, "id " + e.task_id + " missing from post");
  }
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const auto mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

double theoretical_pass_k(double p_hat, int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "k must be >= 1");
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) throw Error(ErrorCode::DomainError, "p_hat outside [0,1]");
  if (k == 1) return p_hat;
  return 1.0 - std::pow(1.0 - p_hat, k);
}

double empirical_pass_k(int n, int c, int k) {
  if (n < 1 || c < 0 || c > n) throw Error(ErrorCode::DomainError, "need 0 <= c <= n and n >= 1");
  if (k < 1 || k > n) throw Error(ErrorCode::DomainError, "need 1 <= k <= n, got k=" + std::to_string(k));
  if (k == 1) return static_cast<double>(c) / n;
  if (n - c < k) return 1.0;
  // C(n-c, k) / C(n, k) = prod_{i<k} (n-c-i) / (n-i)
  double all_fail = 1.0;
  for (int i = 0; i < k; ++i) all_fail *= static_cast<double>(n - c - i) / static_cast<double>(n - i);
  return 1.0 - all_fail;
}

std::pair<PassKCurve, PassKCurve> dataset_pass_k_curves(std::span<const InstanceEstimate> estimates,
                                                        std::span<const int> ks) {
  PassKCurve theo{{ks.begin(), ks.end()}, std::vector<double>(ks.size(), 0.0), CurveKind::Theoretical};
  PassKCurve emp{{ks.begin(), ks.end()}, std::vector<double>(ks.size(), 0.0), CurveKind::Empirical};
  if (estimates.empty()) throw Error(ErrorCode::InsufficientData, "no estimates");
  for (std::size_t j = 0; j < ks.size(); ++j) {
    double t = 0.0;
    double e = 0.0;
    for (const auto& est : estimates) {
      if (ks[j] > est.n) {
        throw Error(ErrorCode::DomainError, "k=" + std::to_string(ks[j]) + " exceeds n=" + std::to_string(est.n) +
                                                " for " + est.task_id);
      }
      t += theoretical_pass_k(est.p_hat, ks[j]);
      e += empirical_pass_k(est.n, est.c, ks[j]);
    }
    theo.values[j] = t / static_cast<double>(estimates.size());
    emp.values[j] = e / static_cast<double>(estimates.size());
  }
  return {std::move(theo), std::move(emp)};
}

double curve_mse(const PassKCurve& a, const PassKCurve& b) {
  if (a.ks != b.ks || a.values.size() != b.values.size() || a.values.empty()) {
    throw Error(ErrorCode::DomainError, "curves are not defined on the same k grid");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.values.size());
}

std::vector<int> power_of_two_ks(int n) {
  std::vector<int> ks;
  for (int k = 1; k <= n; k *= 2) ks.push_back(k);
  return ks;
}

double joint_probability(std::span<const InstanceEstimate> chain_estimates) {
  if (chain_estimates.empty()) throw Error(ErrorCode::EmptyChain, "joint probability of an empty chain");
  double p = 1.0;
  for (const auto& e : chain_estimates) p *= e.p_hat;
  return p;
}

BarrierFit fit_barrier(std::span<const DepthPoint> points) {
  BarrierFit fit;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& pt : points) {
    if (pt.depth < 1 || !(pt.observed >= 0.0 && pt.observed <= 1.0)) {
      throw Error(ErrorCode::DomainError, "barrier point needs depth >= 1 and P in [0,1]");
    }
    if (pt.observed == 0.0) {
      ++fit.dropped_zero_points;
      continue;
    }
    sxy += pt.depth * std::log(pt.observed);
    sxx += static_cast<double>(pt.depth) * pt.depth;
    ++fit.points_used;
  }
  if (fit.points_used < 2) {
    throw Error(ErrorCode::InsufficientData, "barrier fit needs two points with P > 0, have " +
                                                 std::to_string(fit.points_used));
  }
  const double slope = sxy / sxx;
  double ss = 0.0;
  for (const auto& pt : points) {
    if (pt.observed == 0.0) continue;
    const double r = std::log(pt.observed) - slope * pt.depth;
    ss += r * r;
  }
  fit.p_hat_fit = std::exp(slope);
  fit.residual_rms = std::sqrt(ss / fit.points_used);
  return fit;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorCode::DegenerateInput, "pearson needs two equal-length series of at least 2 values");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::DegenerateInput, "zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

ClassificationCensus census(std::span<const InstanceEstimate> estimates) {
  ClassificationCensus c;
  for (const auto& e : estimates) {
    switch (e.state) {
      case CapabilityState::Null: ++c.null_count; break;
      case CapabilityState::Transitional: ++c.transitional_count; break;
      case CapabilityState::Feasible: ++c.feasible_count; break;
    }
  }
  return c;
}

Histogram histogram(std::span<const double> values, int bins, double lo, double hi) {
  if (bins < 1 || !(hi > lo)) throw Error(ErrorCode::DomainError, "histogram needs bins >= 1 and hi > lo");
  Histogram h{lo, hi, std::vector<int>(static_cast<std::size_t>(bins), 0)};
  for (double v : values) {
    auto b = static_cast<int>((v - lo) / (hi - lo) * bins);
    h.counts[static_cast<std::size_t>(std::clamp(b, 0, bins - 1))]++;
  }
  return h;
}

EmergenceReport emergence(std::span<const InstanceEstimate> base, std::span<const InstanceEstimate> post,
                          const ClassificationConfig& cfg) {
  const auto post_index = index_by_id(post);
  require_same_ids(base, post, post_index);
  EmergenceReport rep;
  std::vector<double> recovered_p;
  for (const auto& b : base) {
    if (classify(b.p_hat, cfg) != CapabilityState::Null) continue;
    ++rep.null_count_base;
    const auto& after = *post_index.at(b.task_id);
    if (classify(after.p_hat, cfg) == CapabilityState::Feasible) {
      rep.recovered_ids.push_back(b.task_id);
      recovered_p.push_back(after.p_hat);
    }
  }
  rep.recovered_count = static_cast<int>(recovered_p.size());
  if (rep.null_count_base > 0) rep.recovery_rate = static_cast<double>(rep.recovered_count) / rep.null_count_base;
  if (!recovered_p.empty()) {
    double sum = 0.0;
    for (double p : recovered_p) sum += p;
    rep.recovered_mean = sum / static_cast<double>(recovered_p.size());
    rep.recovered_median = median(recovered_p);
  }
  rep.recovered_histogram = histogram(recovered_p, 10);
  return rep;
}

std::vector<ShiftRecord> shift_analysis(std::span<const InstanceEstimate> base,
                                        std::span<const InstanceEstimate> post) {
  const auto post_index = index_by_id(post);
  require_same_ids(base, post, post_index);
  std::vector<ShiftRecord> out;
  out.reserve(base.size());
  for (const auto& b : base) out.push_back({b.task_id, b.p_hat, post_index.at(b.task_id)->p_hat - b.p_hat});
  return out;
}

std::size_t count_eroded(std::span<const ShiftRecord> shifts, double min_base, double max_delta) {
  return static_cast<std::size_t>(std::count_if(shifts.begin(), shifts.end(), [&](const ShiftRecord& s) {
    return s.base_acc >= min_base && s.delta <= max_delta + 1e-12;
  }));
}

}  // namespace algebrarium
