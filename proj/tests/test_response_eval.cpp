#include <doctest.h>

#include <cmath>

#include "algebrarium/algebra.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/notation.hpp"
#include "algebrarium/response_eval.hpp"
#include "algebrarium/taskgen.hpp"

using namespace algebrarium;

namespace {

Element P(DomainId d, const char* text) { return parse_element(d, text); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an algebrarium::Error");
  return ErrorCode::DataFormat;
}

ResponseRecord graded_record(std::string id, int n, int c) {
  ResponseRecord r{std::move(id), std::vector<std::string>(static_cast<std::size_t>(n), "x"), {}};
  r.graded.assign(static_cast<std::size_t>(n), false);
  for (int i = 0; i < c; ++i) r.graded[static_cast<std::size_t>(i)] = true;
  return r;
}

}  // namespace

TEST_CASE("extract_boxed") {
  CHECK(extract_boxed("so the answer is \\boxed{R L}.") == "R L");
  CHECK(extract_boxed("\\boxed{A,B,C} no wait \\boxed{ B,D,B }") == "B,D,B");
  CHECK(extract_boxed("\\boxed{\\text{FWD(a)}}") == "\\text{FWD(a)}");
  CHECK(extract_boxed("\\boxed{R\\#}") == "R#");
  CHECK(extract_boxed("\\boxed{\\epsilon}") == "\xCE\xB5");
  CHECK(extract_boxed("\\boxed{\\varepsilon}") == "\xCE\xB5");
  CHECK(extract_boxed("\\boxed{a\\{b}") == "a\\{b");
  CHECK(extract_boxed("first \\boxed{kp} then \\boxed{kP") == "kp");
  CHECK_FALSE(extract_boxed("\\boxed{kP").has_value());
  CHECK_FALSE(extract_boxed("no marker at all").has_value());
  CHECK_FALSE(extract_boxed("").has_value());
  CHECK(extract_boxed("\\boxed{}") == "");
}

TEST_CASE("grade compares by parsed value") {
  CHECK(grade(std::string("kpP"), P(DomainId::Knitting, "k")));
  CHECK(grade(std::string("R R"), P(DomainId::RubiksCube, "R2")));
  CHECK(grade(std::string("L R"), P(DomainId::RubiksCube, "R L")));
  CHECK(grade(std::string("\xCE\xB5"), identity(DomainId::Knitting)));
  CHECK(grade(std::string(" A,C,Z "), P(DomainId::Enigma, "A,C,Z")));
  CHECK_FALSE(grade(std::string("A,C,Y"), P(DomainId::Enigma, "A,C,Z")));
  CHECK(grade(std::string("FWD(a)"), identity(DomainId::EncryptedHistory)));
  CHECK(grade(std::string("BACK(a)"), identity(DomainId::EncryptedHistory)));
  CHECK_FALSE(grade(std::string("FWD(b)"), identity(DomainId::EncryptedHistory)));
  CHECK_FALSE(grade(std::string("gibberish"), P(DomainId::Knitting, "k")));
  CHECK_FALSE(grade(std::nullopt, P(DomainId::Knitting, "k")));
}

TEST_CASE("grade_record") {
  ResponseRecord r{"t", {"\\boxed{R2}", "\\boxed{R R}", "R2", "\\boxed{R#}"}, {}};
  grade_record(r, P(DomainId::RubiksCube, "R2"));
  CHECK(r.graded == std::vector<bool>{true, true, false, false});
}

TEST_CASE("classify thresholds") {
  const ClassificationConfig cfg;
  CHECK(cfg.epsilon() == doctest::Approx(3.0 / 128));
  CHECK(cfg.delta() == 0.125);
  CHECK(classify(0.0) == CapabilityState::Null);
  CHECK(classify(std::nextafter(3.0 / 128, 0.0)) == CapabilityState::Null);
  CHECK(classify(3.0 / 128) == CapabilityState::Transitional);
  CHECK(classify(std::nextafter(0.125, 0.0)) == CapabilityState::Transitional);
  CHECK(classify(0.125) == CapabilityState::Feasible);
  CHECK(classify(1.0) == CapabilityState::Feasible);
  CHECK(code_of([] { classify(0.5, ClassificationConfig{8, 8}); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { classify(0.5, ClassificationConfig{16, 8}); }) == ErrorCode::ConfigError);
  CHECK(classify(0.15, ClassificationConfig{32, 4}) == CapabilityState::Transitional);
  CHECK(code_of([] { classify(1.5); }) == ErrorCode::DomainError);
  for (auto s : {CapabilityState::Null, CapabilityState::Transitional, CapabilityState::Feasible}) {
    CHECK(parse_state(to_string(s)) == s);
  }
}

TEST_CASE("classification at n = 128 by success count") {
  // c / 128 < 3/128 iff c < 3; c / 128 >= 1/8 iff c >= 16
  for (int c = 0; c <= 128; ++c) {
    const auto e = estimate(graded_record("t", 128, c));
    CHECK(e.c == c);
    CHECK(e.p_hat == doctest::Approx(c / 128.0));
    const auto want = c < 3 ? CapabilityState::Null : c < 16 ? CapabilityState::Transitional : CapabilityState::Feasible;
    CHECK(e.state == want);
  }
}

TEST_CASE("estimate rejects empty or ungraded records") {
  CHECK(code_of([] { estimate(ResponseRecord{"t", {}, {}}); }) == ErrorCode::EmptyRecord);
  CHECK(code_of([] { estimate(ResponseRecord{"t", {"a"}, {}}); }) == ErrorCode::EmptyRecord);
}

TEST_CASE("grade_log") {
  GenerationConfig cfg;
  cfg.seed = 11;
  cfg.counts = {{DomainId::Knitting, {{2, 3}}}};
  const auto tasks = generate_dataset(cfg);
  std::vector<DecompositionChain> chains;
  for (const auto& t : tasks) chains.push_back(decompose(t));
  const auto truths = build_truth_table(tasks, chains);
  CHECK(truths.size() == 3 + 3 * 2);

  const auto& t = tasks[0];
  const auto right = "\\boxed{" + render(t.answer) + "}";
  const auto step = step_id(t.task_id, 2);
  std::vector<ResponseRecord> log{
      {t.task_id, {right, "\\boxed{k}", right, "nothing"}, {}},
      {step, {"\\boxed{" + render(chains[0].steps[1].truth) + "}"}, {}},
  };
  const auto est = grade_log(log, truths);
  REQUIRE(est.size() == 2);
  CHECK(est[0].c == 2);
  CHECK(est[0].n == 4);
  CHECK(est[1].c == 1);
  CHECK(est[1].task_id == step);

  std::vector<ResponseRecord> bad{{"unknown", {"x"}, {}}};
  CHECK(code_of([&] { grade_log(bad, truths); }) == ErrorCode::IdMismatch);
}
