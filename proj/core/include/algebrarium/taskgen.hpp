#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algebrarium/element.hpp"
#include "algebrarium/rng.hpp"

namespace algebrarium {

enum class TaskMode { ForwardEval, SolveEquation };
enum class Split { Train, Test };

std::string_view to_string(TaskMode m) noexcept;
std::string_view to_string(Split s) noexcept;
std::optional<TaskMode> parse_mode(std::string_view s) noexcept;
std::optional<Split> parse_split(std::string_view s) noexcept;

/// An N-operation chain over N+1 operands (forward_eval), or a single
/// equation a ⊕ x = b with operands {a, b} (solve_equation).
struct ExpressionTask {
  std::string task_id;
  DomainId domain;
  int depth;
  std::vector<Element> operands;
  TaskMode mode;
  Element answer;
  Split split;
};

/// One binary step of the sequential chain: left ⊕ right = truth, where left
/// is the previous ground-truth prefix (or e1 for the first step).
struct AtomicStep {
  int index;  // 1-based
  Element left;
  Element right;
  Element truth;
};

struct DecompositionChain {
  std::string task_id;
  DomainId domain;
  std::vector<AtomicStep> steps;
};

/// Record id of the j-th step of a task, used in step-level response logs.
std::string step_id(std::string_view task_id, int j);

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;
};

struct OperandBounds {
  IntRange cipher_magnitude{1, 342};  // 7^3 - 1
  IntRange knit_length{1, 6};
  IntRange cube_length{1, 4};
};

/// depth -> number of tasks, per domain.
using DepthCounts = std::map<int, int>;

struct GenerationConfig {
  std::uint64_t seed = 0;
  OperandBounds bounds;
  std::map<DomainId, DepthCounts> counts = default_counts();
  bool reject_degenerate = true;
  /// Depth-1 a ⊕ x = b tasks per domain (train split); off by default.
  int solve_equation_count = 0;

  /// 3,200 depth-1 and 50 each of depths 2..5 for all four domains.
  static std::map<DomainId, DepthCounts> default_counts();
};

inline constexpr int kMaxResampleAttempts = 1000;

void validate(const GenerationConfig& cfg);

/// Uniform over the configured sub-population of domain d. Throws ConfigError.
Element sample_element(DomainId d, const OperandBounds& bounds, rng::Stream& stream);

/// Pure function of cfg; identical output for any thread count.
std::vector<ExpressionTask> generate_dataset(const GenerationConfig& cfg, unsigned threads = 0);

/// Throws UnsupportedMode for solve_equation tasks.
DecompositionChain decompose(const ExpressionTask& t);

/// Stable digest of the config, used in manifests and report metadata.
std::uint64_t config_hash(const GenerationConfig& cfg);

}  // namespace algebrarium
