#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebrarium/response_eval.hpp"
#include "algebrarium/taskgen.hpp"

namespace algebrarium {

/// A policy stand-in that gets each atomic step right independently with a
/// fixed probability. When a sample fails it answers truth ⊕ r for a random
/// non-identity r, which is well-formed and always wrong.
struct AgentProfile {
  std::string label = "agent";
  std::uint64_t seed = 0;
  std::map<DomainId, double> step_success;
  std::optional<double> default_success;
  std::map<int, double> depth_override;  // by chain depth
  std::map<int, double> step_override;   // by 1-based step index

  static AgentProfile uniform(std::string label, double p, std::uint64_t seed);

  /// step > depth > domain > default. Throws ProfileMismatch if nothing applies.
  double step_probability(DomainId d, int depth, int step_index) const;
};

/// Flat key/value text: label = "base", seed = 7, p.enigma = 0.3, p.default,
/// depth.5 = 0.2, step.1 = 0.9. '#' starts a comment. Throws ConfigError.
AgentProfile parse_profile(std::string_view text);
std::string format_profile(const AgentProfile& prof);

/// n samples of the whole chain; each succeeds with probability prod_j p_j.
ResponseRecord simulate_composite(const ExpressionTask& t, const DecompositionChain& chain,
                                  const AgentProfile& prof, int n);

/// n samples of one step of a chain, record id step_id(task, j).
ResponseRecord simulate_atomic(const DecompositionChain& chain, const AtomicStep& step, const AgentProfile& prof,
                               int n);

/// Single-step simulation of an equation task.
ResponseRecord simulate_equation(const ExpressionTask& t, const AgentProfile& prof, int n);

struct SimulatedLog {
  std::vector<ResponseRecord> composite;
  std::vector<ResponseRecord> steps;
};

/// Composite records for every task, step records for every chain step,
/// ordered by task then step. Deterministic for any thread count.
SimulatedLog simulate_log(const std::vector<ExpressionTask>& tasks, const AgentProfile& prof, int n,
                          bool include_steps = true, unsigned threads = 0);

}  // namespace algebrarium
