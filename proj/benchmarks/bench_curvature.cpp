#include <benchmark/benchmark.h>

#include "homcurv/certify.hpp"

using namespace homcurv;

namespace {

const HomogeneousSpace& space_for(int index) {
  static const std::vector<HomogeneousSpace> spaces = {
      catalog_build("wallach6"), catalog_build("stiefel"), catalog_build("berger13"),
      catalog_build("sp3mix")};
  return spaces.at(static_cast<std::size_t>(index));
}

Plane plane_for(const HomogeneousSpace& s) {
  auto rng = linalg::make_stream(7);
  return {linalg::gaussian_vector(rng, s.dim_p()), linalg::gaussian_vector(rng, s.dim_p())};
}

void BM_Sectional(benchmark::State& state) {
  const HomogeneousSpace& s = space_for(static_cast<int>(state.range(0)));
  const MetricEndo g = sample_metric(s, commutant_basis(s), 1);
  const CurvatureEvaluator ev(s, g.matrix);
  const Plane p = plane_for(s);
  for (auto _ : state) benchmark::DoNotOptimize(ev.evaluate(p.x, p.y));
  state.SetLabel(s.label());
}
BENCHMARK(BM_Sectional)->DenseRange(0, 3);

void BM_SectionalGradient(benchmark::State& state) {
  const HomogeneousSpace& s = space_for(static_cast<int>(state.range(0)));
  const MetricEndo g = sample_metric(s, commutant_basis(s), 1);
  const CurvatureEvaluator ev(s, g.matrix);
  const Plane p = plane_for(s);
  double value = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(ev.sectional_gradient(p.x, p.y, &value));
  state.SetLabel(s.label());
}
BENCHMARK(BM_SectionalGradient)->DenseRange(0, 3);

void BM_DecomposeIsotypic(benchmark::State& state) {
  const HomogeneousSpace& s = space_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_isotypic(s));
  state.SetLabel(s.label());
}
BENCHMARK(BM_DecomposeIsotypic)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_MinSectional(benchmark::State& state) {
  const HomogeneousSpace& s = space_for(0);
  const MetricEndo g = normal_metric(s);
  CertifyConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_sectional(s, g, cfg).min_sectional);
}
BENCHMARK(BM_MinSectional)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
