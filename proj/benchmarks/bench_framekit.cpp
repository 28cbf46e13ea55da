#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "framekit/analysis.hpp"
#include "framekit/generators.hpp"
#include "framekit/gramian.hpp"
#include "framekit/operators.hpp"
#include "framekit/topology.hpp"

namespace {

using namespace framekit;

void BM_Gramian(benchmark::State& state) {
  const auto fam = random_family(static_cast<std::size_t>(state.range(0)), 4,
                                 Field::Complex, 42);
  for (auto _ : state) {
    Gramian u = gramian(fam);
    benchmark::DoNotOptimize(u);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Gramian)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_HermitianEigenvalues(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto fam = random_family(4 * n, n, Field::Complex, 7);
  const Gramian u = gramian(fam);
  for (auto _ : state) {
    Spectrum spec = hermitian_eigenvalues(u);
    benchmark::DoNotOptimize(spec);
  }
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_QuotientDirect(benchmark::State& state) {
  const auto fam = dirichlet_family(0.5, 0.0, static_cast<std::size_t>(state.range(0))).family;
  const std::vector<Scalar> v{Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
  for (auto _ : state) {
    double n = quotient_N(v, fam, QuotientForm::Direct);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_QuotientDirect)->Arg(10000)->Arg(100000);

void BM_AnalysisSynthesis(benchmark::State& state) {
  const auto fam = random_family(static_cast<std::size_t>(state.range(0)), 4,
                                 Field::Complex, 11);
  const auto tv = random_family(8, 4, Field::Complex, 13);
  for (auto _ : state) {
    TestFamily round_trip = synthesis(fam, analysis(fam, tv));
    benchmark::DoNotOptimize(round_trip);
  }
}
BENCHMARK(BM_AnalysisSynthesis)->Arg(256)->Arg(4096);

void BM_CertifyParsevalPath(benchmark::State& state) {
  const std::size_t n = 3;
  std::vector<double> weights(6 * n, 1.0);
  const auto u = auxiliary_family(weights, n, Field::Real, {}, AuxiliaryMode::Orthonormal, 3);
  const auto v = auxiliary_family(weights, n, Field::Real, {}, AuxiliaryMode::Orthonormal, 4);
  const PathSpec path = make_path(u, v, PathMode::Parseval, 5);
  for (auto _ : state) {
    PathCertification cert = certify_path(path, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_CertifyParsevalPath)->Arg(21)->Arg(101);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
