#include <benchmark/benchmark.h>

#include <vector>

#include "algebrarium/analytics.hpp"
#include "algebrarium/cube.hpp"
#include "algebrarium/knitting.hpp"
#include "algebrarium/response_eval.hpp"
#include "algebrarium/simulator.hpp"
#include "algebrarium/taskgen.hpp"

using namespace algebrarium;

namespace {

std::vector<std::vector<CubeToken>> random_cube_words(std::size_t count, int len) {
  rng::Stream s(1);
  std::vector<std::vector<CubeToken>> out(count);
  for (auto& w : out) {
    w.resize(static_cast<std::size_t>(len));
    for (auto& t : w) t = {static_cast<Face>(s.uniform_int(0, 5)), static_cast<std::uint8_t>(s.uniform_int(1, 3))};
  }
  return out;
}

void BM_CubeCanonicalize(benchmark::State& state) {
  const auto words = random_cube_words(256, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cube::canonical_moves(words[i++ % words.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CubeCanonicalize)->Arg(4)->Arg(16)->Arg(64);

void BM_KnitReduce(benchmark::State& state) {
  rng::Stream s(2);
  static constexpr char kLetters[] = {'k', 'p', 'K', 'P'};
  std::string word(static_cast<std::size_t>(state.range(0)), 'k');
  for (auto& c : word) c = kLetters[s.uniform_int(0, 3)];
  for (auto _ : state) benchmark::DoNotOptimize(knitting::reduce(word));
}
BENCHMARK(BM_KnitReduce)->Arg(8)->Arg(64);

void BM_GenerateDefaultDataset(benchmark::State& state) {
  GenerationConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) {
    auto tasks = generate_dataset(cfg, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(tasks.data());
  }
}
BENCHMARK(BM_GenerateDefaultDataset)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_EmpiricalPassK(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double acc = 0.0;
    for (int k = 1; k <= n; k *= 2) acc += empirical_pass_k(n, n / 4, k);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EmpiricalPassK)->Arg(128)->Arg(1024);

void BM_GradeRecord(benchmark::State& state) {
  GenerationConfig cfg;
  cfg.seed = 3;
  for (auto& [d, depths] : cfg.counts) depths = {{5, 1}};
  const auto tasks = generate_dataset(cfg);
  const auto& task = tasks[static_cast<std::size_t>(state.range(0))];
  auto rec = simulate_composite(task, decompose(task), AgentProfile::uniform("b", 0.5, 1), 128);
  for (auto _ : state) {
    grade_record(rec, task.answer);
    benchmark::DoNotOptimize(rec.graded);
  }
  state.SetItemsProcessed(state.iterations() * 128);
  state.SetLabel(std::string(to_string(task.domain)));
}
BENCHMARK(BM_GradeRecord)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
