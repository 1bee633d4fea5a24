#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "algebrarium/element.hpp"
#include "algebrarium/taskgen.hpp"

namespace algebrarium {

enum class CapabilityState { Null, Transitional, Feasible };

std::string_view to_string(CapabilityState s) noexcept;
std::optional<CapabilityState> parse_state(std::string_view s) noexcept;

/// Null below epsilon = 3/k_large (rule of three), Feasible at or above
/// delta = 1/k_min, Transitional in between.
struct ClassificationConfig {
  int k_large = 128;
  int k_min = 8;

  double epsilon() const noexcept { return 3.0 / k_large; }
  double delta() const noexcept { return 1.0 / k_min; }
};

struct ResponseRecord {
  std::string task_id;
  std::vector<std::string> samples;
  std::vector<bool> graded;
};

struct InstanceEstimate {
  std::string task_id;
  int n = 0;
  int c = 0;
  double p_hat = 0.0;
  CapabilityState state = CapabilityState::Null;
};

/// Content of the last balanced \boxed{...}, trimmed, with LaTeX escapes for
/// '#' and epsilon normalized. nullopt when no complete marker exists.
std::optional<std::string> extract_boxed(std::string_view raw);

/// True iff the text parses in truth's domain to truth. Unparseable text falls
/// back to comparison with the canonical rendering of truth.
bool grade(const std::optional<std::string>& answer_text, const Element& truth);

/// Fills rec.graded from rec.samples.
void grade_record(ResponseRecord& rec, const Element& truth);

/// Throws ConfigError if epsilon >= delta.
CapabilityState classify(double p_hat, const ClassificationConfig& cfg = {});

/// Throws EmptyRecord when there are no samples or the record is ungraded.
InstanceEstimate estimate(const ResponseRecord& rec, const ClassificationConfig& cfg = {});

/// Ground-truth answers keyed by task id and by step id (task#sJ).
using TruthTable = std::unordered_map<std::string, Element>;

TruthTable build_truth_table(const std::vector<ExpressionTask>& tasks,
                             const std::vector<DecompositionChain>& chains);

/// Grades every record against the table and estimates it. Throws IdMismatch
/// for a record whose id has no ground truth.
std::vector<InstanceEstimate> grade_log(std::vector<ResponseRecord>& records, const TruthTable& truths,
                                        const ClassificationConfig& cfg = {}, unsigned threads = 0);

}  // namespace algebrarium
