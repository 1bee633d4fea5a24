#include <doctest.h>

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "algebrarium/algebra.hpp"
#include "algebrarium/cube.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/jsonl.hpp"
#include "algebrarium/knitting.hpp"
#include "algebrarium/notation.hpp"
#include "algebrarium/prompt.hpp"
#include "algebrarium/taskgen.hpp"

using namespace algebrarium;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an algebrarium::Error");
  return ErrorCode::DataFormat;
}

GenerationConfig small_config(std::uint64_t seed) {
  GenerationConfig cfg;
  cfg.seed = seed;
  for (auto& [d, depths] : cfg.counts) depths = {{1, 40}, {2, 5}, {3, 5}, {4, 5}, {5, 5}};
  return cfg;
}

ExpressionTask knit_task() {
  std::vector<Element> ops{parse_element(DomainId::Knitting, "kp"), parse_element(DomainId::Knitting, "PK")};
  return {"knit-manual", DomainId::Knitting, 1, ops, TaskMode::ForwardEval, fold_chain(ops), Split::Train};
}

}  // namespace

TEST_CASE("sample_element is deterministic in its stream") {
  const OperandBounds bounds;
  for (DomainId d : kAllDomains) {
    rng::Stream a(rng::mix({42, 7}));
    rng::Stream b(rng::mix({42, 7}));
    for (int i = 0; i < 20; ++i) CHECK(sample_element(d, bounds, a) == sample_element(d, bounds, b));
  }
}

TEST_CASE("sample_element respects the default bounds") {
  const OperandBounds bounds;
  rng::Stream s(1);
  for (int i = 0; i < 5000; ++i) {
    const auto v = sample_element(DomainId::EncryptedHistory, bounds, s).as<SignedOffset>().value;
    REQUIRE(v != 0);
    REQUIRE(std::abs(v) <= 342);
    const auto w = sample_element(DomainId::Knitting, bounds, s).as<ReducedWord>().letters;
    REQUIRE(w.size() >= 1);
    REQUIRE(w.size() <= 6);
    REQUIRE(knitting::reduce(w) == w);
    const auto m = sample_element(DomainId::RubiksCube, bounds, s).as<MoveSequence>().moves;
    REQUIRE(m.size() >= 1);
    REQUIRE(m.size() <= 4);
  }
}

TEST_CASE("Enigma rotor letters are uniform within 5 sigma over 10,000 samples") {
  constexpr int kSamples = 10000;
  std::array<std::array<int, 26>, 3> counts{};
  rng::Stream s(rng::mix({2025}));
  const OperandBounds bounds;
  for (int i = 0; i < kSamples; ++i) {
    const auto e = sample_element(DomainId::Enigma, bounds, s);
    const auto& r = e.as<RotorTriple>().rotors;
    for (int k = 0; k < 3; ++k) counts[k][r[k]]++;
  }
  const double expected = kSamples / 26.0;
  const double sigma = std::sqrt(kSamples * (1.0 / 26.0) * (25.0 / 26.0));
  for (const auto& rotor : counts) {
    double chi2 = 0;
    for (int c : rotor) {
      CHECK(std::abs(c - expected) < 5 * sigma);
      chi2 += (c - expected) * (c - expected) / expected;
    }
    // 25 degrees of freedom: mean 25, sd ~7.1
    CHECK(chi2 < 25 + 5 * std::sqrt(50.0));
  }
}

TEST_CASE("empty ranges are configuration errors") {
  OperandBounds bounds;
  bounds.cipher_magnitude = {5, 4};
  rng::Stream s(1);
  CHECK(code_of([&] { sample_element(DomainId::EncryptedHistory, bounds, s); }) == ErrorCode::ConfigError);
  GenerationConfig cfg;
  cfg.bounds.knit_length = {3, 1};
  CHECK(code_of([&] { generate_dataset(cfg); }) == ErrorCode::ConfigError);
  GenerationConfig neg;
  neg.counts[DomainId::Enigma][2] = -1;
  CHECK(code_of([&] { generate_dataset(neg); }) == ErrorCode::ConfigError);
  GenerationConfig depth0;
  depth0.counts[DomainId::Enigma][0] = 1;
  CHECK(code_of([&] { generate_dataset(depth0); }) == ErrorCode::ConfigError);
}

TEST_CASE("default dataset follows the depth-stratified protocol") {
  GenerationConfig cfg;
  cfg.seed = 7;
  const auto tasks = generate_dataset(cfg);
  REQUIRE(tasks.size() == 13600);
  std::map<std::tuple<DomainId, Split, int>, int> cells;
  for (const auto& t : tasks) {
    cells[{t.domain, t.split, t.depth}]++;
    REQUIRE(t.mode == TaskMode::ForwardEval);
    REQUIRE(t.operands.size() == static_cast<std::size_t>(t.depth) + 1);
    REQUIRE(fold_chain(t.operands) == t.answer);
    REQUIRE_FALSE(t.answer.is_identity());
    for (const auto& op : t.operands) REQUIRE_FALSE(op == t.answer);
    if (t.split == Split::Train) REQUIRE(t.depth == 1);
    if (t.split == Split::Test) REQUIRE((t.depth >= 2 && t.depth <= 5));
  }
  for (DomainId d : kAllDomains) {
    CHECK(cells[{d, Split::Train, 1}] == 3200);
    for (int depth = 2; depth <= 5; ++depth) CHECK(cells[{d, Split::Test, depth}] == 50);
  }
  std::set<std::string> ids;
  for (const auto& t : tasks) ids.insert(t.task_id);
  CHECK(ids.size() == tasks.size());
}

TEST_CASE("zero counts give an empty dataset") {
  GenerationConfig cfg;
  for (auto& [d, depths] : cfg.counts) {
    for (auto& [depth, n] : depths) n = 0;
  }
  CHECK(generate_dataset(cfg).empty());
  cfg.counts.clear();
  CHECK(generate_dataset(cfg).empty());
}

TEST_CASE("generation is independent of the thread count") {
  const auto cfg = small_config(99);
  const auto one = generate_dataset(cfg, 1);
  const auto four = generate_dataset(cfg, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) REQUIRE(jsonl::task_line(one[i]) == jsonl::task_line(four[i]));
  CHECK(config_hash(cfg) == config_hash(small_config(99)));
  CHECK(config_hash(cfg) != config_hash(small_config(100)));
}

TEST_CASE("degenerate rejection") {
  GenerationConfig cfg;
  cfg.counts = {{DomainId::EncryptedHistory, {{1, 1}}}};
  cfg.bounds.cipher_magnitude = {0, 0};
  CHECK(code_of([&] { generate_dataset(cfg); }) == ErrorCode::ResampleExhausted);
  cfg.reject_degenerate = false;
  const auto tasks = generate_dataset(cfg);
  REQUIRE(tasks.size() == 1);
  CHECK(tasks[0].answer.is_identity());
}

TEST_CASE("solve_equation tasks are depth-1 train tasks when enabled") {
  GenerationConfig cfg = small_config(5);
  cfg.solve_equation_count = 10;
  const auto tasks = generate_dataset(cfg);
  int solves = 0;
  for (const auto& t : tasks) {
    if (t.mode != TaskMode::SolveEquation) continue;
    ++solves;
    CHECK(t.depth == 1);
    CHECK(t.split == Split::Train);
    REQUIRE(t.operands.size() == 2);
    CHECK(combine(t.operands[0], t.answer) == t.operands[1]);
    CHECK(code_of([&] { decompose(t); }) == ErrorCode::UnsupportedMode);
  }
  CHECK(solves == 40);
}

TEST_CASE("decompose") {
  const auto knit = decompose(knit_task());
  REQUIRE(knit.steps.size() == 1);
  CHECK(knit.steps[0].index == 1);
  CHECK(render(knit.steps[0].left) == "kp");
  CHECK(render(knit.steps[0].right) == "PK");
  CHECK(knit.steps[0].truth.is_identity());

  const auto tasks = generate_dataset(small_config(3));
  for (const auto& t : tasks) {
    const auto chain = decompose(t);
    REQUIRE(chain.steps.size() == static_cast<std::size_t>(t.depth));
    // prefix-fold oracle
    for (std::size_t j = 0; j < chain.steps.size(); ++j) {
      const std::vector<Element> prefix(t.operands.begin(), t.operands.begin() + static_cast<long>(j) + 2);
      REQUIRE(chain.steps[j].truth == fold_chain(prefix));
      REQUIRE(chain.steps[j].right == t.operands[j + 1]);
      if (j > 0) REQUIRE(chain.steps[j].left == chain.steps[j - 1].truth);
    }
    REQUIRE(chain.steps.back().truth == t.answer);
  }
}

TEST_CASE("render_prompt") {
  const auto tasks = generate_dataset(small_config(4));
  for (const auto& t : tasks) {
    const auto prompt = render_prompt(t);
    REQUIRE(prompt == render_prompt(t));
    for (const auto& op : t.operands) REQUIRE(prompt.find(render(op)) != std::string::npos);
    REQUIRE(prompt.find("\\boxed{}") != std::string::npos);
    if (t.domain == DomainId::Enigma) REQUIRE(prompt.find("modulo 26") != std::string::npos);
  }
  const auto chain = decompose(knit_task());
  const auto step_prompt = render_prompt(DomainId::Knitting, chain.steps[0]);
  CHECK(step_prompt.find("[kp]") != std::string::npos);
  CHECK(step_prompt.find("[PK]") != std::string::npos);
}

TEST_CASE("tasks and chains survive JSONL serialization") {
  auto cfg = small_config(6);
  cfg.solve_equation_count = 2;
  const auto tasks = generate_dataset(cfg);
  std::unordered_map<std::string, DomainId> domains;
  for (const auto& t : tasks) {
    const auto line = jsonl::task_line(t);
    const auto back = jsonl::parse_task(line);
    REQUIRE(jsonl::task_line(back) == line);
    domains[t.task_id] = t.domain;
    if (t.mode == TaskMode::ForwardEval) {
      const auto chain = decompose(t);
      const auto cline = jsonl::chain_line(chain);
      REQUIRE(jsonl::chain_line(jsonl::parse_chain(cline, t.domain)) == cline);
    }
  }
  const auto first = jsonl::task_line(tasks.front());
  CHECK(first.rfind("{\"task_id\":", 0) == 0);
  CHECK(first.find("\"domain\":") < first.find("\"depth\":"));
  CHECK(first.find("\"split\":") < first.find("\"prompt\":"));
}

TEST_CASE("reading a malformed tasks file reports the line") {
  const auto dir = std::filesystem::temp_directory_path() / "algebrarium_taskgen_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "tasks.jsonl";
  const auto tasks = generate_dataset(small_config(8));
  {
    std::ofstream out(path);
    out << jsonl::task_line(tasks[0]) << '\n' << jsonl::task_line(tasks[1]) << '\n' << "{not json\n";
  }
  try {
    jsonl::read_tasks(path);
    FAIL("expected DataFormat");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DataFormat);
    CHECK(std::string(e.what()).find("tasks.jsonl:3") != std::string::npos);
  }
  {
    // answer that does not match the operands
    std::ofstream out(path);
    auto line = jsonl::task_line(tasks[0]);
    const auto pos = line.find("\"answer\":\"");
    line.insert(pos + 10, "Z");
    out << line << '\n';
  }
  CHECK(code_of([&] { jsonl::read_tasks(path); }) == ErrorCode::DataFormat);
  CHECK(code_of([&] { jsonl::read_tasks(dir / "missing.jsonl"); }) == ErrorCode::IoError);
  std::filesystem::remove_all(dir);
}
