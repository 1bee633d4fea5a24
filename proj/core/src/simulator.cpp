#include "algebrarium/simulator.hpp"

#include <charconv>
#include <sstream>

#include "algebrarium/algebra.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/notation.hpp"
#include "algebrarium/parallel.hpp"
#include "algebrarium/rng.hpp"

namespace algebrarium {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string boxed_sample(const Element& answer) {
  return "Reducing step by step gives the final answer \\boxed{" + render(answer) + "}";
}

Element corrupt(const Element& truth, rng::Stream& stream) {
  const OperandBounds bounds;
  Element r = sample_element(truth.domain(), bounds, stream);
  while (r.is_identity()) r = sample_element(truth.domain(), bounds, stream);
  return combine(truth, r);
}

rng::Stream sample_stream(const AgentProfile& prof, std::string_view record_id, int sample) {
  return rng::Stream(rng::mix({prof.seed, rng::fnv1a(record_id), static_cast<std::uint64_t>(sample)}));
}

// Each sample draws one Bernoulli per probability; all must succeed.
ResponseRecord simulate(std::string record_id, const Element& truth, const std::vector<double>& step_p,
                        const AgentProfile& prof, int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "sample count must be >= 1");
  ResponseRecord rec{std::move(record_id), {}, {}};
  rec.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto stream = sample_stream(prof, rec.task_id, i);
    bool ok = true;
    for (double p : step_p) ok = stream.bernoulli(p) && ok;
    rec.samples.push_back(boxed_sample(ok ? truth : corrupt(truth, stream)));
  }
  return rec;
}

double parse_probability(std::string_view key, std::string_view value) {
  double p = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), p);
  if (ec != std::errc{} || ptr != value.data() + value.size() || !(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::ConfigError, "profile key " + std::string(key) + ": expected probability in [0,1], got '" +
                                            std::string(value) + "'");
  }
  return p;
}

int parse_index(std::string_view key, std::string_view digits) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || v < 1) {
    throw Error(ErrorCode::ConfigError, "profile key " + std::string(key) + ": bad index");
  }
  return v;
}

}  // namespace

AgentProfile AgentProfile::uniform(std::string label, double p, std::uint64_t seed) {
  AgentProfile prof;
  prof.label = std::move(label);
  prof.seed = seed;
  for (DomainId d : kAllDomains) prof.step_success[d] = p;
  return prof;
}

double AgentProfile::step_probability(DomainId d, int depth, int step_index) const {
  if (auto it = step_override.find(step_index); it != step_override.end()) return it->second;
  if (auto it = depth_override.find(depth); it != depth_override.end()) return it->second;
  if (auto it = step_success.find(d); it != step_success.end()) return it->second;
  if (default_success) return *default_success;
  throw Error(ErrorCode::ProfileMismatch, "profile '" + label + "' has no probability for " + std::string(to_string(d)));
}

AgentProfile parse_profile(std::string_view text) {
  AgentProfile prof;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty() || view.front() == '[') continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, "profile line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(view.substr(0, eq));
    auto value = trim(view.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);

    if (key == "label") {
      prof.label = std::string(value);
    } else if (key == "seed") {
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), prof.seed);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw Error(ErrorCode::ConfigError, "profile line " + std::to_string(line_no) + ": bad seed");
      }
    } else if (key == "p.default") {
      prof.default_success = parse_probability(key, value);
    } else if (key.starts_with("p.")) {
      auto d = parse_domain(key.substr(2));
      if (!d) throw Error(ErrorCode::ConfigError, "profile line " + std::to_string(line_no) + ": unknown domain");
      prof.step_success[*d] = parse_probability(key, value);
    } else if (key.starts_with("depth.")) {
      prof.depth_override[parse_index(key, key.substr(6))] = parse_probability(key, value);
    } else if (key.starts_with("step.")) {
      prof.step_override[parse_index(key, key.substr(5))] = parse_probability(key, value);
    } else {
      throw Error(ErrorCode::ConfigError, "profile line " + std::to_string(line_no) + ": unknown key '" +
                                              std::string(key) + "'");
    }
  }
  return prof;
}

std::string format_profile(const AgentProfile& prof) {
  std::ostringstream os;
  os.precision(17);
  os << "label = \"" << prof.label << "\"\nseed = " << prof.seed << '\n';
  if (prof.default_success) os << "p.default = " << *prof.default_success << '\n';
  for (const auto& [d, p] : prof.step_success) os << "p." << to_string(d) << " = " << p << '\n';
  for (const auto& [k, p] : prof.depth_override) os << "depth." << k << " = " << p << '\n';
  for (const auto& [k, p] : prof.step_override) os << "step." << k << " = " << p << '\n';
  return os.str();
}

ResponseRecord simulate_composite(const ExpressionTask& t, const DecompositionChain& chain, const AgentProfile& prof,
                                  int n) {
  if (chain.task_id != t.task_id || chain.steps.size() != static_cast<std::size_t>(t.depth)) {
    throw Error(ErrorCode::IdMismatch, "chain " + chain.task_id + " does not match task " + t.task_id);
  }
  std::vector<double> step_p;
  for (const auto& s : chain.steps) step_p.push_back(prof.step_probability(t.domain, t.depth, s.index));
  return simulate(t.task_id, t.answer, step_p, prof, n);
}

ResponseRecord simulate_atomic(const DecompositionChain& chain, const AtomicStep& step, const AgentProfile& prof,
                               int n) {
  const int depth = static_cast<int>(chain.steps.size());
  return simulate(step_id(chain.task_id, step.index), step.truth,
                  {prof.step_probability(chain.domain, depth, step.index)}, prof, n);
}

ResponseRecord simulate_equation(const ExpressionTask& t, const AgentProfile& prof, int n) {
  return simulate(t.task_id, t.answer, {prof.step_probability(t.domain, 1, 1)}, prof, n);
}

SimulatedLog simulate_log(const std::vector<ExpressionTask>& tasks, const AgentProfile& prof, int n,
                          bool include_steps, unsigned threads) {
  struct PerTask {
    ResponseRecord composite;
    std::vector<ResponseRecord> steps;
  };
  std::vector<PerTask> out(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    const auto& t = tasks[i];
    if (t.mode == TaskMode::SolveEquation) {
      out[i].composite = simulate_equation(t, prof, n);
      return;
    }
    const auto chain = decompose(t);
    out[i].composite = simulate_composite(t, chain, prof, n);
    if (include_steps) {
      for (const auto& s : chain.steps) out[i].steps.push_back(simulate_atomic(chain, s, prof, n));
    }
  });
  SimulatedLog log;
  log.composite.reserve(tasks.size());
  for (auto& r : out) {
    log.composite.push_back(std::move(r.composite));
    for (auto& s : r.steps) log.steps.push_back(std::move(s));
  }
  return log;
}

}  // namespace algebrarium
