#include "algebrarium/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "algebrarium/error.hpp"
#include "algebrarium/svg.hpp"

namespace algebrarium {
namespace {

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

class CsvWriter {
public:
  CsvWriter(const std::filesystem::path& path, const AnalysisOptions& opts, const std::string& extra_meta = {})
      : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out_ << "# config_hash=" << opts.config_hash << " seed=" << opts.seed << extra_meta << '\n';
  }

  template <typename... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
    out_ << '\n';
  }

  void close() {
    out_.flush();
    if (!out_) throw Error(ErrorCode::IoError, "write failed for " + path_.string());
  }

private:
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  static std::string cell(double v) { return fmt(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }

  std::filesystem::path path_;
  std::ofstream out_;
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::vector<InstanceEstimate> forward_only(const std::vector<InstanceEstimate>& ests, const TaskIndex* tasks) {
  if (!tasks) return ests;
  std::vector<InstanceEstimate> out;
  for (const auto& e : ests) {
    auto it = tasks->find(e.task_id);
    if (it == tasks->end() || it->second.mode == TaskMode::ForwardEval) out.push_back(e);
  }
  return out;
}

std::vector<BarrierSeries> barrier_for(const RunEstimates& run, const TaskIndex& tasks) {
  // domain name -> depth -> (sum p_hat, count)
  std::map<std::string, std::map<int, std::pair<double, int>>> acc;
  for (const auto& e : run.tasks) {
    auto it = tasks.find(e.task_id);
    if (it == tasks.end() || it->second.mode != TaskMode::ForwardEval) continue;
    for (const std::string& key : {std::string(to_string(it->second.domain)), std::string("all")}) {
      auto& slot = acc[key][it->second.depth];
      slot.first += e.p_hat;
      slot.second += 1;
    }
  }
  std::vector<BarrierSeries> out;
  for (const auto& [domain, depths] : acc) {
    BarrierSeries s{run.label, domain, {}, {}, std::nullopt};
    for (const auto& [depth, sum_count] : depths) {
      s.points.push_back({depth, sum_count.first / sum_count.second});
      s.tasks_per_point.push_back(sum_count.second);
    }
    try {
      s.fit = fit_barrier(s.points);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientData) throw;
    }
    out.push_back(std::move(s));
  }
  return out;
}

CorrelationSeries correlation_for(const RunEstimates& run, const TaskIndex* tasks) {
  CorrelationSeries series{run.label, {}, std::nullopt};
  const auto grouped = group_steps(run.steps);
  for (const auto& e : run.tasks) {
    auto it = grouped.find(e.task_id);
    if (it == grouped.end()) continue;
    CorrelationPoint pt{e.task_id, "", static_cast<int>(it->second.size()), joint_probability(it->second), e.p_hat};
    if (tasks) {
      auto t = tasks->find(e.task_id);
      if (t != tasks->end()) {
        if (t->second.depth != pt.depth) continue;  // incomplete step log
        pt.domain = std::string(to_string(t->second.domain));
      }
    }
    series.points.push_back(std::move(pt));
  }
  if (series.points.size() >= 2) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& p : series.points) {
      xs.push_back(p.joint);
      ys.push_back(p.outcome);
    }
    try {
      series.rho = pearson(xs, ys);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateInput) throw;
    }
  }
  return series;
}

std::vector<CensusRow> census_for(const RunEstimates& run, const TaskIndex* tasks) {
  std::vector<CensusRow> rows;
  rows.push_back({run.label, "all", "all", census(run.tasks)});
  if (!tasks) return rows;
  std::map<std::pair<std::string, int>, std::vector<InstanceEstimate>> by_cell;
  for (const auto& e : run.tasks) {
    auto it = tasks->find(e.task_id);
    if (it == tasks->end()) continue;
    by_cell[{std::string(to_string(it->second.domain)), it->second.depth}].push_back(e);
  }
  for (const auto& [cell, ests] : by_cell) {
    rows.push_back({run.label, cell.first, std::to_string(cell.second), census(ests)});
  }
  return rows;
}

}  // namespace

TaskIndex index_tasks(std::span<const ExpressionTask> tasks) {
  TaskIndex idx;
  idx.reserve(tasks.size());
  for (const auto& t : tasks) idx.emplace(t.task_id, TaskInfo{t.domain, t.depth, t.mode});
  return idx;
}

std::unordered_map<std::string, std::vector<InstanceEstimate>> group_steps(std::span<const InstanceEstimate> steps) {
  std::unordered_map<std::string, std::vector<std::pair<int, InstanceEstimate>>> tmp;
  for (const auto& s : steps) {
    const auto pos = s.task_id.rfind("#s");
    if (pos == std::string::npos) continue;
    int j = 0;
    const char* first = s.task_id.data() + pos + 2;
    const char* last = s.task_id.data() + s.task_id.size();
    auto [ptr, ec] = std::from_chars(first, last, j);
    if (ec != std::errc{} || ptr != last) continue;
    tmp[s.task_id.substr(0, pos)].emplace_back(j, s);
  }
  std::unordered_map<std::string, std::vector<InstanceEstimate>> out;
  for (auto& [id, v] : tmp) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& dst = out[id];
    for (auto& [j, e] : v) dst.push_back(std::move(e));
  }
  return out;
}

AnalysisReport analyze(std::span<const RunEstimates> runs, const TaskIndex* tasks, const AnalysisOptions& options) {
  if (runs.empty()) throw Error(ErrorCode::InsufficientData, "nothing to analyze");
  AnalysisReport rep;
  rep.options = options;
  for (const auto& run : runs) {
    if (run.tasks.empty()) throw Error(ErrorCode::InsufficientData, "run '" + run.label + "' has no estimates");
  }
  if (rep.options.ks.empty()) {
    int min_n = runs.front().tasks.front().n;
    for (const auto& run : runs) {
      for (const auto& e : run.tasks) min_n = std::min(min_n, e.n);
    }
    rep.options.ks = power_of_two_ks(min_n);
  }

  for (const auto& run : runs) {
    const auto forward = forward_only(run.tasks, tasks);
    if (!forward.empty()) {
      auto [theo, emp] = dataset_pass_k_curves(forward, rep.options.ks);
      const double mse = curve_mse(theo, emp);
      rep.curves.push_back({run.label, std::move(theo), std::move(emp), mse});
    }
    for (auto& row : census_for(run, tasks)) rep.census.push_back(std::move(row));
    if (tasks) {
      for (auto& s : barrier_for(run, *tasks)) rep.barrier.push_back(std::move(s));
    }
    if (!run.steps.empty()) rep.correlation.push_back(correlation_for(run, tasks));
  }

  if (runs.size() >= 2) {
    const auto& base = runs[0];
    const auto& post = runs[1];
    rep.emergence = emergence(base.tasks, post.tasks, options.classification);
    rep.shifts = shift_analysis(base.tasks, post.tasks);
    if (!base.steps.empty() && !post.steps.empty()) {
      for (auto& s : shift_analysis(base.steps, post.steps)) rep.shifts.push_back(std::move(s));
    }
    rep.eroded_count = count_eroded(rep.shifts, options.erosion_min_base, options.erosion_max_delta);
  }
  return rep;
}

std::vector<std::filesystem::path> emit_report(const AnalysisReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  const auto& opts = report.options;
  std::vector<std::filesystem::path> written;
  auto track = [&](const char* name) {
    written.push_back(dir / name);
    return dir / name;
  };

  {
    CsvWriter csv(track("curves.csv"), opts);
    csv.row("label", "k", "theoretical", "empirical", "mse");
    std::vector<svg::Series> series;
    for (const auto& c : report.curves) {
      for (std::size_t i = 0; i < c.theoretical.ks.size(); ++i) {
        csv.row(c.label, c.theoretical.ks[i], c.theoretical.values[i], c.empirical.values[i], c.mse);
      }
      std::vector<double> xs(c.theoretical.ks.begin(), c.theoretical.ks.end());
      series.push_back({c.label + " theoretical", xs, c.theoretical.values, svg::Mark::Line});
      series.push_back({c.label + " empirical", xs, c.empirical.values, svg::Mark::Points});
    }
    csv.close();
    write_text(track("curves.svg"), svg::xy_chart({"Pass@k: theoretical vs empirical", "k", "Pass@k", true, false,
                                                   0.0, 1.0, false},
                                                  series));
  }

  {
    CsvWriter csv(track("classification.csv"), opts,
                  " epsilon=" + fmt(opts.classification.epsilon()) + " delta=" + fmt(opts.classification.delta()));
    csv.row("label", "domain", "depth", "null", "transitional", "feasible", "total");
    std::vector<svg::BarGroup> groups = {{"null", {}}, {"transitional", {}}, {"feasible", {}}};
    std::vector<std::string> cats;
    for (const auto& r : report.census) {
      csv.row(r.label, r.domain, r.depth, r.counts.null_count, r.counts.transitional_count, r.counts.feasible_count,
              r.counts.total());
      if (r.domain == "all") {
        cats.push_back(r.label);
        groups[0].values.push_back(r.counts.null_count);
        groups[1].values.push_back(r.counts.transitional_count);
        groups[2].values.push_back(r.counts.feasible_count);
      }
    }
    csv.close();
    write_text(track("classification.svg"), svg::bar_chart("Capability states", cats, groups));
  }

  {
    CsvWriter csv(track("barrier.csv"), opts);
    csv.row("label", "domain", "depth", "tasks", "observed", "fitted", "p_hat_fit", "residual_rms", "points_used",
            "dropped_zero_points");
    std::vector<svg::Series> series;
    for (const auto& b : report.barrier) {
      for (std::size_t i = 0; i < b.points.size(); ++i) {
        const auto& pt = b.points[i];
        if (b.fit) {
          csv.row(b.label, b.domain, pt.depth, b.tasks_per_point[i], pt.observed,
                  std::pow(b.fit->p_hat_fit, pt.depth), b.fit->p_hat_fit, b.fit->residual_rms, b.fit->points_used,
                  b.fit->dropped_zero_points);
        } else {
          csv.row(b.label, b.domain, pt.depth, b.tasks_per_point[i], pt.observed, "", "", "", "", "");
        }
      }
      if (b.domain != "all") continue;
      svg::Series obs{b.label + " observed", {}, {}, svg::Mark::Points};
      svg::Series fitted{b.label + " p^N fit", {}, {}, svg::Mark::Line};
      for (const auto& pt : b.points) {
        obs.xs.push_back(pt.depth);
        obs.ys.push_back(pt.observed);
        if (b.fit) {
          fitted.xs.push_back(pt.depth);
          fitted.ys.push_back(std::pow(b.fit->p_hat_fit, pt.depth));
        }
      }
      series.push_back(std::move(obs));
      if (b.fit) series.push_back(std::move(fitted));
    }
    csv.close();
    write_text(track("barrier.svg"),
               svg::xy_chart({"Accuracy vs. operation count", "operations N", "accuracy", false, true, 0, 0, false},
                             series));
  }

  {
    std::string meta;
    for (const auto& c : report.correlation) {
      meta += " pearson_" + c.label + "=" + (c.rho ? fmt(*c.rho) : std::string("na"));
    }
    CsvWriter csv(track("correlation.csv"), opts, meta);
    csv.row("label", "task_id", "domain", "depth", "joint", "outcome");
    std::vector<svg::Series> series;
    for (const auto& c : report.correlation) {
      svg::Series s{c.label, {}, {}, svg::Mark::Points};
      for (const auto& p : c.points) {
        csv.row(c.label, p.task_id, p.domain, p.depth, p.joint, p.outcome);
        s.xs.push_back(p.joint);
        s.ys.push_back(p.outcome);
      }
      series.push_back(std::move(s));
    }
    csv.close();
    write_text(track("correlation.svg"),
               svg::xy_chart({"Process vs. outcome", "joint step accuracy", "outcome accuracy", false, false, 0.0, 1.0,
                              true},
                             series));
  }

  {
    CsvWriter csv(track("emergence.csv"), opts);
    csv.row("section", "key", "value");
    std::vector<double> counts;
    std::vector<std::string> bins;
    if (const auto& e = report.emergence) {
      csv.row("summary", "null_count_base", e->null_count_base);
      csv.row("summary", "recovered_count", e->recovered_count);
      csv.row("summary", "recovery_rate", e->recovery_rate);
      csv.row("summary", "recovered_mean", e->recovered_mean);
      csv.row("summary", "recovered_median", e->recovered_median);
      const auto& h = e->recovered_histogram;
      const double width = (h.hi - h.lo) / static_cast<double>(h.counts.size());
      for (std::size_t i = 0; i < h.counts.size(); ++i) {
        const double lo = h.lo + width * static_cast<double>(i);
        csv.row("histogram", fmt(lo) + "-" + fmt(lo + width), h.counts[i]);
        bins.push_back(fmt(lo));
        counts.push_back(h.counts[i]);
      }
    }
    csv.close();
    write_text(track("emergence.svg"), svg::bar_chart("Post accuracy of recovered Null tasks", bins, {{"tasks", counts}}));
  }

  {
    CsvWriter csv(track("shifts.csv"), opts,
                  " eroded=" + std::to_string(report.eroded_count) + " erosion_rule=base>=" +
                      fmt(opts.erosion_min_base) + ",delta<=" + fmt(opts.erosion_max_delta));
    csv.row("skill_id", "base_acc", "post_acc", "delta", "eroded");
    svg::Series s{"skills", {}, {}, svg::Mark::Points};
    for (const auto& r : report.shifts) {
      const bool eroded = r.base_acc >= opts.erosion_min_base && r.delta <= opts.erosion_max_delta + 1e-12;
      csv.row(r.skill_id, r.base_acc, r.base_acc + r.delta, r.delta, eroded ? 1 : 0);
      s.xs.push_back(r.base_acc);
      s.ys.push_back(r.delta);
    }
    csv.close();
    write_text(track("shifts.svg"),
               svg::xy_chart({"Shift vs. base accuracy", "base accuracy", "delta (post - base)", false, false, -1.0,
                              1.0, false},
                             {s}));
  }
  return written;
}

}  // namespace algebrarium
