#include "algebrarium/jsonl.hpp"

#include <fstream>
#include <functional>

#include <json.hpp>

#include "algebrarium/algebra.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/notation.hpp"
#include "algebrarium/prompt.hpp"

namespace algebrarium::jsonl {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_object(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::DataFormat, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::DataFormat, "expected a JSON object");
  return j;
}

template <typename T>
T field(const ordered_json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorCode::DataFormat, std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::DataFormat, std::string("field '") + name + "' has the wrong type");
  }
}

Element parse_in(DomainId d, const std::string& text) {
  try {
    return parse_element(d, text);
  } catch (const Error& e) {
    throw Error(ErrorCode::DataFormat, e.detail());
  }
}

std::string dump(const ordered_json& j) { return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict); }

}  // namespace

std::string task_line(const ExpressionTask& t) {
  ordered_json j;
  j["task_id"] = t.task_id;
  j["domain"] = std::string(to_string(t.domain));
  j["depth"] = t.depth;
  j["mode"] = std::string(to_string(t.mode));
  auto ops = ordered_json::array();
  for (const auto& e : t.operands) ops.push_back(render(e));
  j["operands"] = std::move(ops);
  j["answer"] = render(t.answer);
  j["split"] = std::string(to_string(t.split));
  j["prompt"] = render_prompt(t);
  return dump(j);
}

ExpressionTask parse_task(std::string_view line) {
  const auto j = parse_object(line);
  const auto domain = parse_domain(field<std::string>(j, "domain"));
  if (!domain) throw Error(ErrorCode::DataFormat, "unknown domain");
  const auto mode = parse_mode(field<std::string>(j, "mode"));
  if (!mode) throw Error(ErrorCode::DataFormat, "unknown mode");
  const auto split = parse_split(field<std::string>(j, "split"));
  if (!split) throw Error(ErrorCode::DataFormat, "unknown split");
  const int depth = field<int>(j, "depth");
  std::vector<Element> operands;
  for (const auto& s : field<std::vector<std::string>>(j, "operands")) operands.push_back(parse_in(*domain, s));
  const std::size_t expected = *mode == TaskMode::SolveEquation ? 2 : static_cast<std::size_t>(depth) + 1;
  if (depth < 1 || operands.size() != expected) {
    throw Error(ErrorCode::DataFormat, "operand count does not match depth " + std::to_string(depth));
  }
  Element answer = parse_in(*domain, field<std::string>(j, "answer"));
  const Element recomputed =
      *mode == TaskMode::SolveEquation ? solve_for_x(operands[0], operands[1]) : fold_chain(operands);
  if (!(recomputed == answer)) throw Error(ErrorCode::DataFormat, "stored answer does not match the operands");
  return {field<std::string>(j, "task_id"), *domain, depth, std::move(operands), *mode, std::move(answer), *split};
}

std::string chain_line(const DecompositionChain& c) {
  ordered_json j;
  j["task_id"] = c.task_id;
  auto steps = ordered_json::array();
  for (const auto& s : c.steps) {
    ordered_json step;
    step["j"] = s.index;
    step["left"] = render(s.left);
    step["right"] = render(s.right);
    step["truth"] = render(s.truth);
    step["prompt"] = render_prompt(c.domain, s);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return dump(j);
}

DecompositionChain parse_chain(std::string_view line, DomainId domain) {
  const auto j = parse_object(line);
  DecompositionChain chain{field<std::string>(j, "task_id"), domain, {}};
  const auto steps = j.find("steps");
  if (steps == j.end() || !steps->is_array()) throw Error(ErrorCode::DataFormat, "missing steps array");
  for (const auto& s : *steps) {
    if (!s.is_object()) throw Error(ErrorCode::DataFormat, "step is not an object");
    AtomicStep step{field<int>(s, "j"), parse_in(domain, field<std::string>(s, "left")),
                    parse_in(domain, field<std::string>(s, "right")), parse_in(domain, field<std::string>(s, "truth"))};
    if (!(combine(step.left, step.right) == step.truth)) {
      throw Error(ErrorCode::DataFormat, "step " + std::to_string(step.index) + " truth does not match its operands");
    }
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

std::string response_line(const ResponseRecord& r) {
  ordered_json j;
  j["task_id"] = r.task_id;
  j["samples"] = r.samples;
  return dump(j);
}

ResponseRecord parse_response(std::string_view line) {
  const auto j = parse_object(line);
  return {field<std::string>(j, "task_id"), field<std::vector<std::string>>(j, "samples"), {}};
}

std::string estimate_line(const InstanceEstimate& e) {
  ordered_json j;
  j["task_id"] = e.task_id;
  j["n"] = e.n;
  j["c"] = e.c;
  j["p_hat"] = e.p_hat;
  j["state"] = std::string(to_string(e.state));
  return dump(j);
}

InstanceEstimate parse_estimate(std::string_view line) {
  const auto j = parse_object(line);
  InstanceEstimate e;
  e.task_id = field<std::string>(j, "task_id");
  e.n = field<int>(j, "n");
  e.c = field<int>(j, "c");
  if (e.n < 1 || e.c < 0 || e.c > e.n) throw Error(ErrorCode::DataFormat, "need 0 <= c <= n and n >= 1");
  e.p_hat = field<double>(j, "p_hat");
  const auto state = parse_state(field<std::string>(j, "state"));
  if (!state) throw Error(ErrorCode::DataFormat, "unknown state");
  e.state = *state;
  return e;
}

namespace {

template <typename T>
std::vector<T> read_file(const std::filesystem::path& path, const std::function<T(std::string_view)>& parse) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<T> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(line));
    } catch (const Error& e) {
      const ErrorCode code = e.code() == ErrorCode::IdMismatch ? e.code() : ErrorCode::DataFormat;
      throw Error(code, path.string() + ":" + std::to_string(line_no) + ": " + e.detail());
    }
  }
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed for " + path.string());
  return out;
}

}  // namespace

void write_file(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  for (const auto& l : lines) out << l << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::vector<ExpressionTask> read_tasks(const std::filesystem::path& path) {
  return read_file<ExpressionTask>(path, parse_task);
}

std::vector<DecompositionChain> read_chains(const std::filesystem::path& path,
                                            const std::unordered_map<std::string, DomainId>& domains) {
  return read_file<DecompositionChain>(path, [&](std::string_view line) {
    const auto j = parse_object(line);
    const auto id = field<std::string>(j, "task_id");
    auto it = domains.find(id);
    if (it == domains.end()) throw Error(ErrorCode::IdMismatch, "chain for unknown task " + id);
    return parse_chain(line, it->second);
  });
}

std::vector<ResponseRecord> read_responses(const std::filesystem::path& path) {
  return read_file<ResponseRecord>(path, parse_response);
}

std::vector<InstanceEstimate> read_estimates(const std::filesystem::path& path) {
  return read_file<InstanceEstimate>(path, parse_estimate);
}

namespace {

template <typename T, typename F>
void write_all(const std::filesystem::path& path, const std::vector<T>& items, F&& line) {
  std::vector<std::string> lines;
  lines.reserve(items.size());
  for (const auto& it : items) lines.push_back(line(it));
  write_file(path, lines);
}

}  // namespace

void write_tasks(const std::filesystem::path& path, const std::vector<ExpressionTask>& tasks) {
  write_all(path, tasks, task_line);
}

void write_chains(const std::filesystem::path& path, const std::vector<DecompositionChain>& chains) {
  write_all(path, chains, chain_line);
}

void write_responses(const std::filesystem::path& path, const std::vector<ResponseRecord>& records) {
  write_all(path, records, response_line);
}

void write_estimates(const std::filesystem::path& path, const std::vector<InstanceEstimate>& estimates) {
  write_all(path, estimates, estimate_line);
}

}  // namespace algebrarium::jsonl
