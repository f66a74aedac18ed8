// Serial reference vs OpenMP paths: a seeding campaign (parallel over
// mutants) and one repair run (parallel inside each MaxSMT level).

#include "tarep/model_io.hpp"
#include "tarep/seeder.hpp"

#include <benchmark/benchmark.h>

using namespace tarep;

namespace {

const ModelFile& bundle() {
  static const ModelFile m = load_model(std::filesystem::path(TAREP_MODELS_DIR) / "client_db.json");
  return m;
}

// Bound and urgency mutants keep one iteration around a second.
void BM_Campaign(benchmark::State& state) {
  const auto& m = bundle();
  CampaignOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto c = campaign(m.network, m.property, {RepairKind::Bound, RepairKind::Urgency}, o);
    benchmark::DoNotOptimize(c.rows);
  }
  state.SetLabel(o.parallel ? "openmp" : "serial");
}
BENCHMARK(BM_Campaign)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RepairRun(benchmark::State& state) {
  const auto& m = bundle();
  static const auto trace = check(m.network, m.property).trace;
  const auto kind = static_cast<RepairKind>(state.range(1));
  RepairOptions o;
  o.parallel = state.range(0) != 0;
  o.check_admissibility = false;
  for (auto _ : state) {
    auto run = run_repair(m.network, m.property, kind, trace, o);
    benchmark::DoNotOptimize(run.records);
  }
  state.SetLabel(std::string(to_string(kind)) + (o.parallel ? " openmp" : " serial"));
}
BENCHMARK(BM_RepairRun)
    ->ArgsProduct({{0, 1}, {static_cast<long>(RepairKind::ClockRef), static_cast<long>(RepairKind::Reset)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
