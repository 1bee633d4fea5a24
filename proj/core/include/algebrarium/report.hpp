#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebrarium/analytics.hpp"
#include "algebrarium/taskgen.hpp"

namespace algebrarium {

struct TaskInfo {
  DomainId domain;
  int depth;
  TaskMode mode;
};

using TaskIndex = std::unordered_map<std::string, TaskInfo>;

TaskIndex index_tasks(std::span<const ExpressionTask> tasks);

/// Estimates of one model run: whole tasks and, optionally, chain steps.
struct RunEstimates {
  std::string label;
  std::vector<InstanceEstimate> tasks;
  std::vector<InstanceEstimate> steps;
};

struct AnalysisOptions {
  std::vector<int> ks;  // empty: powers of two up to the smallest n
  ClassificationConfig classification;
  std::string config_hash = "none";
  std::string seed = "none";
  double erosion_min_base = 0.8;
  double erosion_max_delta = -0.1;
};

struct CurveSet {
  std::string label;
  PassKCurve theoretical;
  PassKCurve empirical;
  double mse = 0.0;
};

struct CensusRow {
  std::string label;
  std::string domain;  // "all" when pooled
  std::string depth;   // "all" when pooled
  ClassificationCensus counts;
};

struct BarrierSeries {
  std::string label;
  std::string domain;
  std::vector<DepthPoint> points;
  std::vector<int> tasks_per_point;
  std::optional<BarrierFit> fit;
};

struct CorrelationPoint {
  std::string task_id;
  std::string domain;
  int depth = 0;
  double joint = 0.0;
  double outcome = 0.0;
};

struct CorrelationSeries {
  std::string label;
  std::vector<CorrelationPoint> points;
  std::optional<double> rho;
};

struct AnalysisReport {
  AnalysisOptions options;
  std::vector<CurveSet> curves;
  std::vector<CensusRow> census;
  std::vector<BarrierSeries> barrier;
  std::vector<CorrelationSeries> correlation;
  std::optional<EmergenceReport> emergence;
  std::vector<ShiftRecord> shifts;
  std::size_t eroded_count = 0;
};

/// Groups step estimates (ids "task#sJ") under their task id, ordered by J.
std::unordered_map<std::string, std::vector<InstanceEstimate>> group_steps(std::span<const InstanceEstimate> steps);

/// One run gives curves, census, barrier and correlation; two runs (base then
/// post) additionally give emergence and shifts. Depth-dependent parts need
/// the task index. Throws InsufficientData for no runs or empty estimates.
AnalysisReport analyze(std::span<const RunEstimates> runs, const TaskIndex* tasks, const AnalysisOptions& options);

/// Writes the CSV tables and their SVG charts into dir. Throws IoError.
std::vector<std::filesystem::path> emit_report(const AnalysisReport& report, const std::filesystem::path& dir);

}  // namespace algebrarium
