#include "algebrarium/response_eval.hpp"

#include "algebrarium/error.hpp"
#include "algebrarium/notation.hpp"
#include "algebrarium/parallel.hpp"

namespace algebrarium {
namespace {

constexpr std::string_view kBoxed = "\\boxed{";

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

// Returns the closing-brace position for the marker at `open`, or npos.
std::size_t match_braces(std::string_view raw, std::size_t content_start) {
  int depth = 1;
  for (std::size_t i = content_start; i < raw.size(); ++i) {
    if (raw[i] == '\\' && i + 1 < raw.size() && (raw[i + 1] == '{' || raw[i + 1] == '}')) {
      ++i;
      continue;
    }
    if (raw[i] == '{') ++depth;
    if (raw[i] == '}' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

}  // namespace

std::string_view to_string(CapabilityState s) noexcept {
  switch (s) {
    case CapabilityState::Null: return "null";
    case CapabilityState::Transitional: return "transitional";
    case CapabilityState::Feasible: return "feasible";
  }
  return "unknown";
}

std::optional<CapabilityState> parse_state(std::string_view s) noexcept {
  for (auto st : {CapabilityState::Null, CapabilityState::Transitional, CapabilityState::Feasible}) {
    if (s == to_string(st)) return st;
  }
  return std::nullopt;
}

std::optional<std::string> extract_boxed(std::string_view raw) {
  std::size_t search_end = raw.size();
  while (true) {
    const auto pos = raw.rfind(kBoxed, search_end);
    if (pos == std::string_view::npos) return std::nullopt;
    const auto start = pos + kBoxed.size();
    const auto close = match_braces(raw, start);
    if (close != std::string_view::npos) {
      std::string content(trim(raw.substr(start, close - start)));
      replace_all(content, "\\#", "#");
      replace_all(content, "\\varepsilon", "\xCE\xB5");
      replace_all(content, "\\epsilon", "\xCE\xB5");
      return std::string(trim(content));
    }
    // Truncated marker; fall back to the previous complete one.
    if (pos == 0) return std::nullopt;
    search_end = pos - 1;
  }
}

bool grade(const std::optional<std::string>& answer_text, const Element& truth) {
  if (!answer_text) return false;
  const std::string_view text = trim(*answer_text);
  if (auto parsed = try_parse_element(truth.domain(), text)) return *parsed == truth;
  return text == render(truth);
}

void grade_record(ResponseRecord& rec, const Element& truth) {
  rec.graded.assign(rec.samples.size(), false);
  for (std::size_t i = 0; i < rec.samples.size(); ++i) rec.graded[i] = grade(extract_boxed(rec.samples[i]), truth);
}

CapabilityState classify(double p_hat, const ClassificationConfig& cfg) {
  if (cfg.k_large <= 0 || cfg.k_min <= 0 || cfg.epsilon() >= cfg.delta()) {
    throw Error(ErrorCode::ConfigError, "classification needs 0 < epsilon < delta (k_large=" +
                                            std::to_string(cfg.k_large) + ", k_min=" + std::to_string(cfg.k_min) + ")");
  }
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) throw Error(ErrorCode::DomainError, "p_hat outside [0,1]");
  if (p_hat < cfg.epsilon()) return CapabilityState::Null;
  if (p_hat >= cfg.delta()) return CapabilityState::Feasible;
  return CapabilityState::Transitional;
}

InstanceEstimate estimate(const ResponseRecord& rec, const ClassificationConfig& cfg) {
  if (rec.samples.empty()) throw Error(ErrorCode::EmptyRecord, "record " + rec.task_id + " has no samples");
  if (rec.graded.size() != rec.samples.size()) {
    throw Error(ErrorCode::EmptyRecord, "record " + rec.task_id + " is not graded");
  }
  InstanceEstimate est;
  est.task_id = rec.task_id;
  est.n = static_cast<int>(rec.samples.size());
  for (bool ok : rec.graded) est.c += ok ? 1 : 0;
  est.p_hat = static_cast<double>(est.c) / est.n;
  est.state = classify(est.p_hat, cfg);
  return est;
}

TruthTable build_truth_table(const std::vector<ExpressionTask>& tasks, const std::vector<DecompositionChain>& chains) {
  TruthTable table;
  table.reserve(tasks.size() * 2);
  for (const auto& t : tasks) table.insert_or_assign(t.task_id, t.answer);
  for (const auto& c : chains) {
    for (const auto& s : c.steps) table.insert_or_assign(step_id(c.task_id, s.index), s.truth);
  }
  return table;
}

std::vector<InstanceEstimate> grade_log(std::vector<ResponseRecord>& records, const TruthTable& truths,
                                        const ClassificationConfig& cfg, unsigned threads) {
  for (const auto& r : records) {
    if (!truths.contains(r.task_id)) throw Error(ErrorCode::IdMismatch, "no ground truth for id " + r.task_id);
  }
  std::vector<InstanceEstimate> out(records.size());
  parallel_for(records.size(), threads, [&](std::size_t i) {
    grade_record(records[i], truths.at(records[i].task_id));
    out[i] = estimate(records[i], cfg);
  });
  return out;
}

}  // namespace algebrarium
