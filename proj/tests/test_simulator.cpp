#include <doctest.h>

#include <cmath>

#include "algebrarium/error.hpp"
#include "algebrarium/notation.hpp"
#include "algebrarium/simulator.hpp"

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

std::vector<ExpressionTask> tasks_at(int depth, int per_domain, std::uint64_t seed) {
  GenerationConfig cfg;
  cfg.seed = seed;
  cfg.counts.clear();
  for (DomainId d : kAllDomains) cfg.counts[d] = {{depth, per_domain}};
  return generate_dataset(cfg);
}

int successes(ResponseRecord rec, const Element& truth) {
  grade_record(rec, truth);
  int c = 0;
  for (bool ok : rec.graded) c += ok ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("probability precedence is step > depth > domain > default") {
  AgentProfile prof;
  prof.label = "p";
  CHECK(code_of([&] { prof.step_probability(DomainId::Enigma, 1, 1); }) == ErrorCode::ProfileMismatch);
  prof.default_success = 0.1;
  CHECK(prof.step_probability(DomainId::Enigma, 3, 2) == 0.1);
  prof.step_success[DomainId::Enigma] = 0.2;
  CHECK(prof.step_probability(DomainId::Enigma, 3, 2) == 0.2);
  CHECK(prof.step_probability(DomainId::Knitting, 3, 2) == 0.1);
  prof.depth_override[3] = 0.3;
  CHECK(prof.step_probability(DomainId::Enigma, 3, 2) == 0.3);
  CHECK(prof.step_probability(DomainId::Enigma, 4, 2) == 0.2);
  prof.step_override[2] = 0.4;
  CHECK(prof.step_probability(DomainId::Enigma, 3, 2) == 0.4);
  CHECK(prof.step_probability(DomainId::Enigma, 3, 1) == 0.3);
}

TEST_CASE("profiles parse and format") {
  const auto prof = parse_profile(R"(# warm start
[agent]
label = "base"
seed = 77
p.enigma = 0.3
p.knit = 0.25   # short names work
p.default = 0.5
depth.5 = 0.125
step.1 = 1
)");
  CHECK(prof.label == "base");
  CHECK(prof.seed == 77);
  CHECK(prof.step_success.at(DomainId::Enigma) == 0.3);
  CHECK(prof.step_success.at(DomainId::Knitting) == 0.25);
  CHECK(prof.default_success == 0.5);
  CHECK(prof.depth_override.at(5) == 0.125);
  CHECK(prof.step_override.at(1) == 1.0);
  const auto again = parse_profile(format_profile(prof));
  CHECK(format_profile(again) == format_profile(prof));

  CHECK(code_of([] { parse_profile("p.enigma = 1.5"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_profile("p.chess = 0.5"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_profile("temperature = 0.7"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_profile("p.enigma 0.5"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_profile("depth.0 = 0.5"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_profile("seed = -1"); }) == ErrorCode::ConfigError);
}

TEST_CASE("extreme probabilities") {
  const auto tasks = tasks_at(3, 5, 1);
  for (double p : {0.0, 1.0}) {
    const auto prof = AgentProfile::uniform("x", p, 9);
    for (const auto& t : tasks) {
      const auto chain = decompose(t);
      const auto rec = simulate_composite(t, chain, prof, 16);
      REQUIRE(rec.samples.size() == 16);
      CHECK(successes(rec, t.answer) == (p == 1.0 ? 16 : 0));
      for (const auto& s : rec.samples) {
        // failures are still well-formed elements
        const auto boxed = extract_boxed(s);
        REQUIRE(boxed.has_value());
        CHECK(try_parse_element(t.domain, *boxed).has_value());
      }
      for (const auto& step : chain.steps) {
        CHECK(successes(simulate_atomic(chain, step, prof, 8), step.truth) == (p == 1.0 ? 8 : 0));
      }
    }
  }
}

TEST_CASE("composite success rate is the product of step rates") {
  constexpr int kSamples = 4000;
  const auto tasks = tasks_at(2, 1, 2);
  auto prof = AgentProfile::uniform("x", 0.5, 3);
  prof.step_override[2] = 0.8;
  for (const auto& t : tasks) {
    const auto c = successes(simulate_composite(t, decompose(t), prof, kSamples), t.answer);
    const double p = 0.4;
    const double sd = std::sqrt(kSamples * p * (1 - p));
    CHECK(std::abs(c - kSamples * p) < 5 * sd);
  }
}

TEST_CASE("simulation is deterministic") {
  const auto tasks = tasks_at(2, 3, 4);
  const auto prof = AgentProfile::uniform("x", 0.6, 5);
  const auto a = simulate_log(tasks, prof, 12, true, 1);
  const auto b = simulate_log(tasks, prof, 12, true, 4);
  REQUIRE(a.composite.size() == tasks.size());
  REQUIRE(a.steps.size() == tasks.size() * 2);
  for (std::size_t i = 0; i < a.composite.size(); ++i) CHECK(a.composite[i].samples == b.composite[i].samples);
  for (std::size_t i = 0; i < a.steps.size(); ++i) CHECK(a.steps[i].samples == b.steps[i].samples);
  CHECK(a.steps[0].task_id == step_id(tasks[0].task_id, 1));
  CHECK(a.steps[1].task_id == step_id(tasks[0].task_id, 2));

  const auto other = simulate_log(tasks, AgentProfile::uniform("x", 0.6, 6), 12, false);
  CHECK(other.steps.empty());
  bool differs = false;
  for (std::size_t i = 0; i < other.composite.size(); ++i) differs |= other.composite[i].samples != a.composite[i].samples;
  CHECK(differs);
}

TEST_CASE("simulation errors") {
  const auto tasks = tasks_at(2, 1, 7);
  const auto prof = AgentProfile::uniform("x", 0.5, 1);
  const auto chain = decompose(tasks[0]);
  CHECK(code_of([&] { simulate_composite(tasks[1], chain, prof, 4); }) == ErrorCode::IdMismatch);
  CHECK(code_of([&] { simulate_composite(tasks[0], chain, prof, 0); }) == ErrorCode::DomainError);
  AgentProfile partial;
  partial.step_success[DomainId::Enigma] = 0.5;
  CHECK(code_of([&] { simulate_log(tasks, partial, 4); }) == ErrorCode::ProfileMismatch);
}

TEST_CASE("equation tasks are simulated as one step") {
  GenerationConfig cfg;
  cfg.seed = 8;
  for (auto& [d, depths] : cfg.counts) depths.clear();
  cfg.solve_equation_count = 3;
  const auto tasks = generate_dataset(cfg);
  REQUIRE(tasks.size() == 12);
  const auto log = simulate_log(tasks, AgentProfile::uniform("x", 1.0, 1), 4);
  CHECK(log.steps.empty());
  for (std::size_t i = 0; i < tasks.size(); ++i) CHECK(successes(log.composite[i], tasks[i].answer) == 4);
}
