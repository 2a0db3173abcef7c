#include "pseudocurve/branch_model.hpp"
#include "pseudocurve/cusp_combinatorics.hpp"
#include "pseudocurve/polynomial.hpp"
#include "pseudocurve/node_geometry.hpp"
#include "pseudocurve/saddle_residue.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace pseudocurve;

void BM_ExactInertia(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<GaussianRational> p;
  for (int j = 0; j < k; ++j) p.emplace_back(Rational(j + 1, 3), Rational(2 - j, 5));
  const ResidueForm f(k, 0, Polynomial(p));
  for (auto _ : state) benchmark::DoNotOptimize(inertia(f));
}
BENCHMARK(BM_ExactInertia)->DenseRange(1, 6);

void BM_NodalOracle(benchmark::State& state) {
  const auto types = enumerate_cusp_types(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const auto& p : types) total += nodal_number_oracle(p);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(types.size()));
}
BENCHMARK(BM_NodalOracle)->Arg(15)->Arg(30);

void BM_IntersectionMultiplicity(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const Polynomial c1[] = {Polynomial::monomial(1, a), Polynomial::monomial(1, a + 1)};
  const Polynomial c2[] = {Polynomial::monomial(1, a + 2), Polynomial::monomial(1, a + 1)};
  const Branch b1s = Branch::from_coordinates(c1, 4 * a + 8);
  const Branch b2s = Branch::from_coordinates(c2, 4 * a + 8);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_multiplicity(b1s, b2s));
}
BENCHMARK(BM_IntersectionMultiplicity)->Arg(2)->Arg(3)->Arg(5);

void BM_BandEnergy(benchmark::State& state) {
  std::vector<LaurentMode> modes;
  for (int m = -5; m <= 5; ++m) modes.push_back({m, {{1.0 / (1 + m * m), 0.5}, {0.0, 1.0}}});
  const CylinderMap u(std::move(modes), {0.0, 10.0});
  for (auto _ : state) {
    double s = 0.0;
    for (int k = 0; k < 10; ++k) s += band_energy(u, k);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BandEnergy);

void BM_VolumeIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(volume_identity({0.1, 0.0}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VolumeIdentity)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
