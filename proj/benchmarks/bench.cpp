#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "teamaut/comm.hpp"
#include "teamaut/parser.hpp"
#include "teamaut/realise.hpp"

using namespace teamaut;

namespace {

ModelDocument load(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void bm_team(benchmark::State& state) {
  auto doc = load("race.ta");
  System sys = doc.plain_system();
  SyncTypeSpec spec = doc.plain_spec();
  for (auto _ : state) benchmark::DoNotOptimize(team(sys, spec));
}
BENCHMARK(bm_team);

void bm_reachability(benchmark::State& state) {
  auto doc = load("race.ta");
  TeamAutomaton ta = team(doc.plain_system(), doc.plain_spec());
  for (auto _ : state) benchmark::DoNotOptimize(reachable(ta.lts));
}
BENCHMARK(bm_reachability);

void bm_bisimulation(benchmark::State& state) {
  auto doc = load("race_global.ta");
  auto res = realise_pipeline(doc.global.sig, doc.global.spec, doc.global);
  Lts<Interaction> lhs = reachable_part(interactions_of_team(res.team.lts));
  Lts<Interaction> rhs = reachable_part(doc.global.lts);
  for (auto _ : state) benchmark::DoNotOptimize(bisimilar(lhs, rhs));
}
BENCHMARK(bm_bisimulation);

void bm_responsiveness(benchmark::State& state) {
  auto doc = load("race.ta");
  System sys = doc.plain_system();
  SyncTypeSpec spec = doc.plain_spec();
  for (auto _ : state)
    benchmark::DoNotOptimize(is_responsive(sys, spec, Mode::Weak));
}
BENCHMARK(bm_responsiveness);

}  // namespace

BENCHMARK_MAIN();
