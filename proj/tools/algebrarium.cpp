#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "algebrarium/error.hpp"
#include "algebrarium/jsonl.hpp"
#include "algebrarium/manifest.hpp"
#include "algebrarium/report.hpp"
#include "algebrarium/simulator.hpp"

namespace fs = std::filesystem;
using namespace algebrarium;

namespace {

constexpr const char* kTasksFile = "tasks.jsonl";
constexpr const char* kChainsFile = "chains.jsonl";
constexpr const char* kResponsesFile = "responses.jsonl";
constexpr const char* kStepResponsesFile = "step_responses.jsonl";
constexpr const char* kEstimatesFile = "estimates.jsonl";
constexpr const char* kStepEstimatesFile = "step_estimates.jsonl";

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigError:
    case ErrorCode::ProfileMismatch:
    case ErrorCode::ResampleExhausted:
    case ErrorCode::UnsupportedMode:
    case ErrorCode::DomainError:
      return 2;
    case ErrorCode::IoError:
      return 3;
    case ErrorCode::DataFormat:
    case ErrorCode::ParseError:
    case ErrorCode::IdMismatch:
    case ErrorCode::EmptyRecord:
    case ErrorCode::DomainMismatch:
    case ErrorCode::EmptyChain:
      return 4;
    case ErrorCode::InsufficientData:
    case ErrorCode::DegenerateInput:
      return 5;
  }
  return 1;
}

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

/// A file path, or a directory holding the conventional file name.
fs::path resolve_input(const fs::path& p, const char* default_name) {
  const fs::path path = fs::is_directory(p) ? p / default_name : p;
  if (!fs::is_regular_file(path)) throw Error(ErrorCode::IoError, "input not found: " + path.string());
  return path;
}

fs::path input_dir(const fs::path& p) { return fs::is_directory(p) ? p : p.parent_path(); }

void prepare_out(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw Error(ErrorCode::IoError, "cannot create output directory " + dir.string());
}

struct ManifestScope {
  RunManifest m;

  ManifestScope(std::string command, const fs::path& out) : out_(out) {
    m.command = std::move(command);
    m.tool_version = std::string(tool_version());
    m.started_at = utc_timestamp();
    m.config_hash = "none";
    m.seed = "none";
  }

  void inherit(const fs::path& input) {
    if (auto up = read_manifest(input_dir(input))) {
      if (m.config_hash == "none") m.config_hash = up->config_hash;
      if (m.seed == "none") m.seed = up->seed;
    }
  }

  void finish() {
    m.finished_at = utc_timestamp();
    write_manifest(out_, m);
  }

private:
  fs::path out_;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || v < 1) {
      config_error(std::string("bad ") + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

int parse_count(const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v < 0) {
    config_error("bad --counts value '" + text + "'");
  }
  return v;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  std::uint64_t seed = 0;
  fs::path out = "dataset";
  std::vector<std::string> domains;
  std::vector<std::string> counts;
  bool no_reject_degenerate = false;
  std::int64_t cipher_max = 342;
  std::int64_t knit_max = 6;
  std::int64_t cube_max = 4;
};

GenerationConfig build_generation_config(const GenerateOptions& o) {
  GenerationConfig cfg;
  cfg.seed = o.seed;
  cfg.reject_degenerate = !o.no_reject_degenerate;
  cfg.bounds.cipher_magnitude.hi = o.cipher_max;
  cfg.bounds.knit_length.hi = o.knit_max;
  cfg.bounds.cube_length.hi = o.cube_max;

  if (!o.domains.empty()) {
    std::map<DomainId, DepthCounts> selected;
    for (const auto& name : o.domains) {
      auto d = parse_domain(name);
      if (!d) config_error("unknown domain '" + name + "'");
      selected[*d] = cfg.counts.at(*d);
    }
    cfg.counts = std::move(selected);
  }

  for (const auto& entry : o.counts) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) config_error("--counts entries look like train=N, test=N, dK=N or solve=N");
    const std::string key = entry.substr(0, eq);
    const int n = parse_count(entry.substr(eq + 1));
    auto set_depth = [&](int depth) {
      for (auto& [d, depths] : cfg.counts) depths[depth] = n;
    };
    if (key == "train") {
      set_depth(1);
    } else if (key == "test") {
      for (int depth = 2; depth <= 5; ++depth) set_depth(depth);
    } else if (key == "solve") {
      cfg.solve_equation_count = n;
    } else if (key.size() >= 2 && key[0] == 'd') {
      set_depth(parse_int_list(key.substr(1), "--counts depth").front());
    } else {
      config_error("unknown --counts key '" + key + "'");
    }
  }
  for (auto& [d, depths] : cfg.counts) {
    std::erase_if(depths, [](const auto& kv) { return kv.second == 0; });
  }
  validate(cfg);
  return cfg;
}

void run_generate(const GenerateOptions& o, unsigned threads) {
  const auto cfg = build_generation_config(o);
  prepare_out(o.out);
  ManifestScope scope("generate", o.out);
  scope.m.config_hash = hex64(config_hash(cfg));
  scope.m.seed = std::to_string(cfg.seed);

  const auto tasks = generate_dataset(cfg, threads);
  std::vector<DecompositionChain> chains;
  for (const auto& t : tasks) {
    if (t.mode == TaskMode::ForwardEval) chains.push_back(decompose(t));
  }
  jsonl::write_tasks(o.out / kTasksFile, tasks);
  jsonl::write_chains(o.out / kChainsFile, chains);

  std::string domains;
  for (const auto& [d, depths] : cfg.counts) domains += (domains.empty() ? "" : ",") + std::string(to_string(d));
  scope.m.parameters = {{"domains", domains},
                        {"counts", join(o.counts)},
                        {"reject_degenerate", cfg.reject_degenerate ? "true" : "false"},
                        {"tasks", std::to_string(tasks.size())}};
  scope.m.outputs = {kTasksFile, kChainsFile};
  scope.finish();
  std::printf("wrote %zu tasks and %zu chains to %s\n", tasks.size(), chains.size(), o.out.string().c_str());
}

// ---------------------------------------------------------------------------
// decompose

struct DecomposeOptions {
  fs::path in;
  fs::path out = "chains";
};

void run_decompose(const DecomposeOptions& o) {
  const auto tasks_path = resolve_input(o.in, kTasksFile);
  const auto tasks = jsonl::read_tasks(tasks_path);
  prepare_out(o.out);
  ManifestScope scope("decompose", o.out);
  scope.inherit(tasks_path);
  std::vector<DecompositionChain> chains;
  for (const auto& t : tasks) {
    if (t.mode == TaskMode::ForwardEval) chains.push_back(decompose(t));
  }
  jsonl::write_chains(o.out / kChainsFile, chains);
  scope.m.inputs = {tasks_path.string()};
  scope.m.outputs = {kChainsFile};
  scope.finish();
  std::printf("wrote %zu chains to %s\n", chains.size(), o.out.string().c_str());
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
  fs::path in;
  fs::path out = "responses";
  fs::path profile;
  double p = -1.0;
  std::string label;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int samples = 128;
  bool no_steps = false;
  std::string split = "all";
};

AgentProfile load_profile(const SimulateOptions& o) {
  AgentProfile prof;
  if (!o.profile.empty()) {
    std::ifstream in(o.profile);
    if (!in) throw Error(ErrorCode::IoError, "cannot read profile " + o.profile.string());
    std::stringstream ss;
    ss << in.rdbuf();
    prof = parse_profile(ss.str());
    if (o.p >= 0.0) prof.default_success = o.p;
  } else if (o.p >= 0.0) {
    prof = AgentProfile::uniform("agent", o.p, 0);
  } else {
    config_error("simulate needs --profile FILE or --p PROB");
  }
  if (!o.label.empty()) prof.label = o.label;
  if (o.seed_given) prof.seed = o.seed;
  return prof;
}

void run_simulate(const SimulateOptions& o, unsigned threads) {
  auto prof = load_profile(o);
  if (o.samples < 1) config_error("--samples must be >= 1");
  const auto tasks_path = resolve_input(o.in, kTasksFile);
  auto tasks = jsonl::read_tasks(tasks_path);
  if (o.split != "all") {
    auto split = parse_split(o.split);
    if (!split) config_error("--split must be train, test or all");
    std::erase_if(tasks, [&](const ExpressionTask& t) { return t.split != *split; });
  }
  prepare_out(o.out);
  ManifestScope scope("simulate", o.out);
  scope.inherit(tasks_path);

  const auto log = simulate_log(tasks, prof, o.samples, !o.no_steps, threads);
  jsonl::write_responses(o.out / kResponsesFile, log.composite);
  scope.m.outputs = {kResponsesFile};
  if (!o.no_steps) {
    jsonl::write_responses(o.out / kStepResponsesFile, log.steps);
    scope.m.outputs.push_back(kStepResponsesFile);
  }
  scope.m.inputs = {tasks_path.string()};
  if (!o.profile.empty()) scope.m.inputs.push_back(o.profile.string());
  scope.m.parameters = {{"label", prof.label},
                        {"profile_seed", std::to_string(prof.seed)},
                        {"samples", std::to_string(o.samples)},
                        {"split", o.split}};
  scope.finish();
  std::printf("simulated %zu task records and %zu step records (%d samples) into %s\n", log.composite.size(),
              log.steps.size(), o.samples, o.out.string().c_str());
}

// ---------------------------------------------------------------------------
// grade

struct GradeOptions {
  fs::path in;
  fs::path dataset;
  fs::path out = "estimates";
  int k_large = 128;
  int k_min = 8;
  std::string label;
};

void run_grade(const GradeOptions& o, unsigned threads) {
  const ClassificationConfig cls{o.k_large, o.k_min};
  classify(0.0, cls);  // validates the thresholds before any work
  if (o.dataset.empty()) config_error("grade needs --dataset pointing at the generated tasks");

  const auto tasks_path = resolve_input(o.dataset, kTasksFile);
  const auto tasks = jsonl::read_tasks(tasks_path);
  std::vector<DecompositionChain> chains;
  const fs::path chains_path = fs::is_directory(o.dataset) ? o.dataset / kChainsFile : fs::path{};
  if (!chains_path.empty() && fs::is_regular_file(chains_path)) {
    std::unordered_map<std::string, DomainId> domains;
    for (const auto& t : tasks) domains.emplace(t.task_id, t.domain);
    chains = jsonl::read_chains(chains_path, domains);
  } else {
    for (const auto& t : tasks) {
      if (t.mode == TaskMode::ForwardEval) chains.push_back(decompose(t));
    }
  }
  const auto truths = build_truth_table(tasks, chains);

  const auto responses_path = resolve_input(o.in, kResponsesFile);
  auto records = jsonl::read_responses(responses_path);
  prepare_out(o.out);
  ManifestScope scope("grade", o.out);
  scope.inherit(tasks_path);
  scope.m.inputs = {tasks_path.string(), responses_path.string()};

  const auto estimates = grade_log(records, truths, cls, threads);
  jsonl::write_estimates(o.out / kEstimatesFile, estimates);
  scope.m.outputs = {kEstimatesFile};
  std::size_t step_count = 0;
  if (fs::is_directory(o.in) && fs::is_regular_file(o.in / kStepResponsesFile)) {
    auto steps = jsonl::read_responses(o.in / kStepResponsesFile);
    const auto step_estimates = grade_log(steps, truths, cls, threads);
    jsonl::write_estimates(o.out / kStepEstimatesFile, step_estimates);
    scope.m.inputs.push_back((o.in / kStepResponsesFile).string());
    scope.m.outputs.push_back(kStepEstimatesFile);
    step_count = step_estimates.size();
  }

  std::string label = o.label;
  if (label.empty()) {
    if (auto up = read_manifest(input_dir(responses_path)); up && up->parameters.contains("label")) {
      label = up->parameters.at("label");
    }
  }
  if (!label.empty()) scope.m.parameters["label"] = label;
  scope.m.parameters["k_large"] = std::to_string(o.k_large);
  scope.m.parameters["k_min"] = std::to_string(o.k_min);
  scope.finish();
  const auto c = census(estimates);
  std::printf("graded %zu records (+%zu steps): null=%d transitional=%d feasible=%d -> %s\n", estimates.size(),
              step_count, c.null_count, c.transitional_count, c.feasible_count, o.out.string().c_str());
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  std::vector<fs::path> in;
  std::vector<fs::path> compare;
  fs::path dataset;
  fs::path out = "report";
  std::string k_list;
  int k_large = 128;
  int k_min = 8;
  double erosion_base = 0.8;
  double erosion_delta = -0.1;
};

RunEstimates load_run(const fs::path& p) {
  RunEstimates run;
  const auto path = resolve_input(p, kEstimatesFile);
  run.tasks = jsonl::read_estimates(path);
  if (fs::is_directory(p) && fs::is_regular_file(p / kStepEstimatesFile)) {
    run.steps = jsonl::read_estimates(p / kStepEstimatesFile);
  }
  if (auto m = read_manifest(input_dir(path)); m && m->parameters.contains("label")) {
    run.label = m->parameters.at("label");
  } else {
    run.label = fs::is_directory(p) ? fs::absolute(p).lexically_normal().filename().string() : p.stem().string();
    if (run.label.empty()) run.label = "run";
  }
  return run;
}

void run_analyze(const AnalyzeOptions& o) {
  if (!o.compare.empty() && !o.in.empty()) config_error("use either --in or --compare, not both");
  const auto& sources = o.compare.empty() ? o.in : o.compare;
  if (sources.empty()) config_error("analyze needs --in RUN or --compare BASE POST");

  std::vector<RunEstimates> runs;
  for (const auto& s : sources) runs.push_back(load_run(s));
  if (runs.size() == 2 && runs[0].label == runs[1].label) {
    runs[0].label += "_base";
    runs[1].label += "_post";
  }

  AnalysisOptions opts;
  opts.classification = {o.k_large, o.k_min};
  classify(0.0, opts.classification);
  if (!o.k_list.empty()) opts.ks = parse_int_list(o.k_list, "--k-list");
  opts.erosion_min_base = o.erosion_base;
  opts.erosion_max_delta = o.erosion_delta;

  std::optional<TaskIndex> index;
  prepare_out(o.out);
  ManifestScope scope("analyze", o.out);
  if (!o.dataset.empty()) {
    const auto tasks_path = resolve_input(o.dataset, kTasksFile);
    index = index_tasks(jsonl::read_tasks(tasks_path));
    scope.inherit(tasks_path);
    scope.m.inputs.push_back(tasks_path.string());
  }
  for (const auto& s : sources) {
    scope.inherit(s);
    scope.m.inputs.push_back(s.string());
  }
  opts.config_hash = scope.m.config_hash;
  opts.seed = scope.m.seed;

  const auto report = analyze(runs, index ? &*index : nullptr, opts);
  for (const auto& f : emit_report(report, o.out)) scope.m.outputs.push_back(f.filename().string());
  std::string ks;
  for (int k : report.options.ks) ks += (ks.empty() ? "" : ",") + std::to_string(k);
  scope.m.parameters = {{"k_list", ks}, {"k_large", std::to_string(o.k_large)}, {"k_min", std::to_string(o.k_min)}};
  scope.finish();

  for (const auto& c : report.curves) std::printf("%s: pass@k MSE %.3g\n", c.label.c_str(), c.mse);
  for (const auto& c : report.correlation) {
    if (c.rho) std::printf("%s: pearson %.4f over %zu tasks\n", c.label.c_str(), *c.rho, c.points.size());
  }
  if (report.emergence) {
    std::printf("emergence: %d of %d base-Null tasks became Feasible (%.3f), mean post p_hat %.4f\n",
                report.emergence->recovered_count, report.emergence->null_count_base, report.emergence->recovery_rate,
                report.emergence->recovered_mean);
    std::printf("eroded skills: %zu\n", report.eroded_count);
  }
  std::printf("report written to %s\n", o.out.string().c_str());
}

// ---------------------------------------------------------------------------
// report: generate -> simulate base/post -> grade -> analyze --compare

struct ReportOptions {
  GenerateOptions gen;
  fs::path out = "run";
  fs::path base_profile;
  fs::path post_profile;
  double base_p = 0.3;
  double post_p = 0.7;
  int samples = 128;
  std::string k_list;
};

void run_report(const ReportOptions& o, unsigned threads) {
  GenerateOptions gen = o.gen;
  gen.out = o.out / "dataset";
  run_generate(gen, threads);

  auto side = [&](const char* name, const fs::path& profile, double p, std::uint64_t seed_salt) {
    SimulateOptions sim;
    sim.in = gen.out;
    sim.out = o.out / (std::string(name) + "_responses");
    sim.profile = profile;
    if (profile.empty()) sim.p = p;
    sim.label = name;
    sim.samples = o.samples;
    if (profile.empty()) {
      sim.seed = o.gen.seed ^ seed_salt;
      sim.seed_given = true;
    }
    run_simulate(sim, threads);
    GradeOptions grade;
    grade.in = sim.out;
    grade.dataset = gen.out;
    grade.out = o.out / (std::string(name) + "_estimates");
    run_grade(grade, threads);
    return grade.out;
  };
  const auto base = side("base", o.base_profile, o.base_p, 0xba5e);
  const auto post = side("post", o.post_profile, o.post_p, 0x9057);

  AnalyzeOptions an;
  an.compare = {base, post};
  an.dataset = gen.out;
  an.out = o.out / "report";
  an.k_list = o.k_list;
  run_analyze(an);
}

// ---------------------------------------------------------------------------

void add_generation_flags(CLI::App* cmd, GenerateOptions& g) {
  cmd->add_option("--seed", g.seed, "Dataset seed")->capture_default_str();
  cmd->add_option("--domains", g.domains, "Comma-separated domains (encrypted_history|eh, enigma, knitting|knit, "
                                          "rubiks_cube|cube); default all")
      ->delimiter(',');
  cmd->add_option("--counts", g.counts,
                  "Task counts per domain: train=N (depth 1), test=N (each of depths 2-5), dK=N (depth K), "
                  "solve=N (depth-1 equations); comma-separated")
      ->delimiter(',');
  cmd->add_flag("--no-reject-degenerate", g.no_reject_degenerate, "Keep tasks whose answer is trivial");
  cmd->add_option("--cipher-max", g.cipher_max, "Largest EncryptedHistory operand magnitude")->capture_default_str();
  cmd->add_option("--knit-max-len", g.knit_max, "Longest Knitting operand word")->capture_default_str();
  cmd->add_option("--cube-max-len", g.cube_max, "Longest Rubik's cube operand sequence")->capture_default_str();
}

std::string env_name(const CLI::Option* opt) {
  std::string name = opt->get_single_name();
  std::string out = "ALGEBRARIUM_";
  for (char c : name) out += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void mirror_env(CLI::App& app) {
  for (CLI::Option* opt : app.get_options()) {
    if (opt->get_single_name().empty() || opt->get_single_name() == "help" || opt->get_single_name() == "version" ||
        opt->get_configurable() == false || opt->get_single_name() == "config") {
      continue;
    }
    if (opt->get_lnames().empty()) continue;
    opt->envname(env_name(opt));
  }
  for (CLI::App* sub : app.get_subcommands({})) mirror_env(*sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebrarium: synthetic algebra tasks, simulated agents and capability analytics"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.set_config("--config", "", "Read options from a TOML/INI file (sections per subcommand)");
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  app.footer("Every option can also be set through an environment variable ALGEBRARIUM_<OPTION>.\n"
             "Exit codes: 0 ok, 2 configuration, 3 I/O, 4 data format, 5 insufficient data.");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate tasks.jsonl and chains.jsonl");
  add_generation_flags(generate, gen);
  generate->add_option("--out", gen.out, "Output directory")->capture_default_str();

  DecomposeOptions dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "Rebuild chains.jsonl from a tasks file");
  decompose_cmd->add_option("--in", dec.in, "tasks.jsonl or a directory containing it")->required();
  decompose_cmd->add_option("--out", dec.out, "Output directory")->capture_default_str();

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Sample responses from a simulated agent");
  simulate->add_option("--in", sim.in, "tasks.jsonl or a dataset directory")->required();
  simulate->add_option("--out", sim.out, "Output directory")->capture_default_str();
  simulate->add_option("--profile", sim.profile, "Agent profile file (label, seed, p.<domain>, p.default, "
                                                 "depth.<N>, step.<j>)");
  simulate->add_option("--p", sim.p, "Uniform per-step success probability (or default for --profile)")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--label", sim.label, "Run label");
  auto* sim_seed = simulate->add_option("--seed", sim.seed, "Sampling seed (overrides the profile)");
  simulate->add_option("--samples", sim.samples, "Samples per record")->capture_default_str();
  simulate->add_flag("--no-steps", sim.no_steps, "Skip per-step records");
  simulate->add_option("--split", sim.split, "train, test or all")->capture_default_str();

  GradeOptions grade;
  auto* grade_cmd = app.add_subcommand("grade", "Grade responses and estimate per-instance success");
  grade_cmd->add_option("--in", grade.in, "responses.jsonl or a simulate output directory")->required();
  grade_cmd->add_option("--dataset", grade.dataset, "Dataset directory or tasks.jsonl with ground truth")->required();
  grade_cmd->add_option("--out", grade.out, "Output directory")->capture_default_str();
  grade_cmd->add_option("--k-large", grade.k_large, "Null threshold epsilon = 3/k_large")->capture_default_str();
  grade_cmd->add_option("--k-min", grade.k_min, "Feasible threshold delta = 1/k_min")->capture_default_str();
  grade_cmd->add_option("--label", grade.label, "Run label (default: from the responses manifest)");

  AnalyzeOptions an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Pass@k, classification, barrier, correlation and shift reports");
  analyze_cmd->add_option("--in", an.in, "Estimates file or grade output directory (repeatable)");
  analyze_cmd->add_option("--compare", an.compare, "BASE POST estimate sources")->expected(2);
  analyze_cmd->add_option("--dataset", an.dataset, "Dataset for domain/depth breakdowns");
  analyze_cmd->add_option("--out", an.out, "Report directory")->capture_default_str();
  analyze_cmd->add_option("--k-list", an.k_list, "Comma-separated k values (default powers of two up to n)");
  analyze_cmd->add_option("--k-large", an.k_large, "Null threshold epsilon = 3/k_large")->capture_default_str();
  analyze_cmd->add_option("--k-min", an.k_min, "Feasible threshold delta = 1/k_min")->capture_default_str();
  analyze_cmd->add_option("--erosion-base", an.erosion_base, "Minimum base accuracy for erosion")
      ->capture_default_str();
  analyze_cmd->add_option("--erosion-delta", an.erosion_delta, "Maximum delta counted as erosion")
      ->capture_default_str();

  ReportOptions rep;
  auto* report_cmd = app.add_subcommand("report", "End-to-end: generate, simulate base and post, grade, analyze");
  add_generation_flags(report_cmd, rep.gen);
  report_cmd->add_option("--out", rep.out, "Output tree")->capture_default_str();
  report_cmd->add_option("--base-profile", rep.base_profile, "Profile file for the base agent");
  report_cmd->add_option("--post-profile", rep.post_profile, "Profile file for the post agent");
  report_cmd->add_option("--base-p", rep.base_p, "Uniform base step success")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  report_cmd->add_option("--post-p", rep.post_p, "Uniform post step success")->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  report_cmd->add_option("--samples", rep.samples, "Samples per record")->capture_default_str();
  report_cmd->add_option("--k-list", rep.k_list, "Comma-separated k values");

  mirror_env(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) run_generate(gen, threads);
    if (*decompose_cmd) run_decompose(dec);
    if (*simulate) {
      sim.seed_given = sim_seed->count() > 0;
      run_simulate(sim, threads);
    }
    if (*grade_cmd) run_grade(grade, threads);
    if (*analyze_cmd) run_analyze(an);
    if (*report_cmd) run_report(rep, threads);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
