#include "algebrarium/taskgen.hpp"

#include <cstdio>
#include <sstream>

#include "algebrarium/algebra.hpp"
#include "algebrarium/cube.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/knitting.hpp"
#include "algebrarium/parallel.hpp"

namespace algebrarium {

std::string_view to_string(TaskMode m) noexcept {
  return m == TaskMode::ForwardEval ? "forward_eval" : "solve_equation";
}

std::string_view to_string(Split s) noexcept { return s == Split::Train ? "train" : "test"; }

std::optional<TaskMode> parse_mode(std::string_view s) noexcept {
  if (s == "forward_eval") return TaskMode::ForwardEval;
  if (s == "solve_equation") return TaskMode::SolveEquation;
  return std::nullopt;
}

std::optional<Split> parse_split(std::string_view s) noexcept {
  if (s == "train") return Split::Train;
  if (s == "test") return Split::Test;
  return std::nullopt;
}

std::string step_id(std::string_view task_id, int j) {
  return std::string(task_id) + "#s" + std::to_string(j);
}

std::map<DomainId, DepthCounts> GenerationConfig::default_counts() {
  std::map<DomainId, DepthCounts> counts;
  for (DomainId d : kAllDomains) counts[d] = {{1, 3200}, {2, 50}, {3, 50}, {4, 50}, {5, 50}};
  return counts;
}

namespace {

void check_range(const IntRange& r, std::int64_t floor, const char* name) {
  if (r.lo > r.hi || r.lo < floor) {
    throw Error(ErrorCode::ConfigError, std::string(name) + " range [" + std::to_string(r.lo) + ", " +
                                            std::to_string(r.hi) + "] is empty or out of bounds");
  }
}

constexpr char kKnitLetters[] = {'k', 'p', 'K', 'P'};

Element sample_knit(std::int64_t length, rng::Stream& stream) {
  // First letter: 4 choices; every later letter: the 3 that do not cancel.
  // Each reduced word of the given length is therefore equally likely.
  std::string word;
  for (std::int64_t i = 0; i < length; ++i) {
    char c;
    do {
      c = kKnitLetters[stream.uniform_int(0, 3)];
    } while (!word.empty() && c == knitting::inverse_letter(word.back()));
    word.push_back(c);
  }
  return Element::knit(word);
}

Element sample_cube(std::int64_t length, rng::Stream& stream) {
  // Rejection over all 18^length token strings keeps the canonical ones, so
  // the result is uniform over canonical sequences of exactly this length.
  constexpr int kMaxDraws = 1'000'000;
  std::vector<CubeToken> tokens(static_cast<std::size_t>(length));
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    for (auto& t : tokens) {
      t.face = cube::kFaces[stream.uniform_int(0, 5)];
      t.turns = static_cast<std::uint8_t>(stream.uniform_int(1, 3));
    }
    if (cube::canonical_moves(tokens) == tokens) return Element::cube(tokens);
  }
  throw Error(ErrorCode::ConfigError, "cube length " + std::to_string(length) + " too long to sample");
}

bool is_degenerate(const ExpressionTask& t) {
  if (t.answer.is_identity()) return true;
  for (const auto& op : t.operands) {
    if (op == t.answer) return true;
  }
  return false;
}

struct Slot {
  DomainId domain;
  Split split;
  TaskMode mode;
  int depth;
  std::size_t index;
};

std::string make_task_id(std::uint64_t seed, const Slot& s) {
  const std::uint64_t h = rng::mix({seed, static_cast<std::uint64_t>(s.domain), static_cast<std::uint64_t>(s.split),
                                    static_cast<std::uint64_t>(s.mode), static_cast<std::uint64_t>(s.depth),
                                    static_cast<std::uint64_t>(s.index), 0x1D});
  char buf[96];
  if (s.mode == TaskMode::SolveEquation) {
    std::snprintf(buf, sizeof buf, "%s-%s-solve-%05zu-%08x", short_name(s.domain).data(), to_string(s.split).data(),
                  s.index, static_cast<unsigned>(h & 0xFFFFFFFFu));
  } else {
    std::snprintf(buf, sizeof buf, "%s-%s-d%d-%05zu-%08x", short_name(s.domain).data(), to_string(s.split).data(),
                  s.depth, s.index, static_cast<unsigned>(h & 0xFFFFFFFFu));
  }
  return buf;
}

ExpressionTask build_task(const GenerationConfig& cfg, const Slot& s) {
  rng::Stream stream(rng::mix({cfg.seed, static_cast<std::uint64_t>(s.domain), static_cast<std::uint64_t>(s.split),
                               static_cast<std::uint64_t>(s.mode), static_cast<std::uint64_t>(s.depth),
                               static_cast<std::uint64_t>(s.index)}));
  const std::string id = make_task_id(cfg.seed, s);
  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    std::vector<Element> operands;
    const int count = s.mode == TaskMode::SolveEquation ? 2 : s.depth + 1;
    operands.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) operands.push_back(sample_element(s.domain, cfg.bounds, stream));
    Element answer = s.mode == TaskMode::SolveEquation ? solve_for_x(operands[0], operands[1])
                                                       : fold_chain(operands);
    ExpressionTask task{id, s.domain, s.depth, std::move(operands), s.mode, std::move(answer), s.split};
    if (!cfg.reject_degenerate || !is_degenerate(task)) return task;
  }
  throw Error(ErrorCode::ResampleExhausted, "no non-degenerate task for " + id + " after " +
                                                std::to_string(kMaxResampleAttempts) + " attempts");
}

}  // namespace

void validate(const GenerationConfig& cfg) {
  check_range(cfg.bounds.cipher_magnitude, 0, "cipher magnitude");
  check_range(cfg.bounds.knit_length, 0, "knit length");
  check_range(cfg.bounds.cube_length, 0, "cube length");
  if (cfg.solve_equation_count < 0) throw Error(ErrorCode::ConfigError, "negative solve_equation_count");
  for (const auto& [domain, depths] : cfg.counts) {
    for (const auto& [depth, count] : depths) {
      if (depth < 1) throw Error(ErrorCode::ConfigError, "depth must be >= 1, got " + std::to_string(depth));
      if (count < 0) throw Error(ErrorCode::ConfigError, "negative count at depth " + std::to_string(depth));
    }
  }
}

Element sample_element(DomainId d, const OperandBounds& bounds, rng::Stream& stream) {
  switch (d) {
    case DomainId::EncryptedHistory: {
      check_range(bounds.cipher_magnitude, 0, "cipher magnitude");
      const auto magnitude = stream.uniform_int(bounds.cipher_magnitude.lo, bounds.cipher_magnitude.hi);
      return Element::offset(stream.uniform_int(0, 1) ? magnitude : -magnitude);
    }
    case DomainId::Enigma: {
      const auto r1 = stream.uniform_int(0, 25);
      const auto r2 = stream.uniform_int(0, 25);
      const auto r3 = stream.uniform_int(0, 25);
      return Element::rotors(static_cast<int>(r1), static_cast<int>(r2), static_cast<int>(r3));
    }
    case DomainId::Knitting:
      check_range(bounds.knit_length, 0, "knit length");
      return sample_knit(stream.uniform_int(bounds.knit_length.lo, bounds.knit_length.hi), stream);
    case DomainId::RubiksCube:
      check_range(bounds.cube_length, 0, "cube length");
      return sample_cube(stream.uniform_int(bounds.cube_length.lo, bounds.cube_length.hi), stream);
  }
  throw Error(ErrorCode::ConfigError, "unknown domain");
}

std::vector<ExpressionTask> generate_dataset(const GenerationConfig& cfg, unsigned threads) {
  validate(cfg);
  std::vector<Slot> slots;
  for (DomainId d : kAllDomains) {
    auto it = cfg.counts.find(d);
    if (it == cfg.counts.end()) continue;
    for (const auto& [depth, count] : it->second) {
      const Split split = depth == 1 ? Split::Train : Split::Test;
      for (int i = 0; i < count; ++i) {
        slots.push_back({d, split, TaskMode::ForwardEval, depth, static_cast<std::size_t>(i)});
      }
    }
    for (int i = 0; i < cfg.solve_equation_count; ++i) {
      slots.push_back({d, Split::Train, TaskMode::SolveEquation, 1, static_cast<std::size_t>(i)});
    }
  }

  std::vector<std::optional<ExpressionTask>> built(slots.size());
  parallel_for(slots.size(), threads, [&](std::size_t i) { built[i] = build_task(cfg, slots[i]); });

  std::vector<ExpressionTask> tasks;
  tasks.reserve(built.size());
  for (auto& t : built) tasks.push_back(std::move(*t));
  return tasks;
}

DecompositionChain decompose(const ExpressionTask& t) {
  if (t.mode != TaskMode::ForwardEval) {
    throw Error(ErrorCode::UnsupportedMode, "cannot decompose solve_equation task " + t.task_id);
  }
  if (t.operands.size() < 2) throw Error(ErrorCode::EmptyChain, "task " + t.task_id + " has fewer than 2 operands");
  DecompositionChain chain{t.task_id, t.domain, {}};
  chain.steps.reserve(t.operands.size() - 1);
  Element prefix = t.operands[0];
  for (std::size_t j = 1; j < t.operands.size(); ++j) {
    Element truth = combine(prefix, t.operands[j]);
    chain.steps.push_back({static_cast<int>(j), prefix, t.operands[j], truth});
    prefix = std::move(truth);
  }
  return chain;
}

std::uint64_t config_hash(const GenerationConfig& cfg) {
  std::ostringstream os;
  os << "seed=" << cfg.seed << ";eh=" << cfg.bounds.cipher_magnitude.lo << ',' << cfg.bounds.cipher_magnitude.hi
     << ";knit=" << cfg.bounds.knit_length.lo << ',' << cfg.bounds.knit_length.hi
     << ";cube=" << cfg.bounds.cube_length.lo << ',' << cfg.bounds.cube_length.hi
     << ";reject=" << cfg.reject_degenerate << ";solve=" << cfg.solve_equation_count;
  for (const auto& [domain, depths] : cfg.counts) {
    os << ';' << to_string(domain) << ':';
    for (const auto& [depth, count] : depths) os << depth << '=' << count << ',';
  }
  return rng::fnv1a(os.str());
}

}  // namespace algebrarium
