#include <benchmark/benchmark.h>

#include "jordan/rmatrix/rmatrix.hpp"
#include "jordan/sl2/reps.hpp"
#include "jordan/tmatrix/tmatrix.hpp"

using namespace jordan;

namespace {

// Two h-deformed spin-j tensor-square generators, the shape of a contraction product.
std::pair<PolyMatrix, PolyMatrix> operands(unsigned twice_j) {
  auto r = build_h_rep(Spin{twice_j});
  auto id = PolyMatrix::identity(r["T"].rows());
  auto a = kron(r["T"], r["H"]) + kron(r["X"], id);
  auto b = kron(r["Tinv"], r["Y"]) + kron(id, r["T"]);
  return {a, b};
}

void BM_MultiplySerial(benchmark::State& state) {
  auto [a, b] = operands(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_MultiplyParallel(benchmark::State& state) {
  auto [a, b] = operands(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}

void BM_ContractR(benchmark::State& state) {
  Spin j{static_cast<unsigned>(state.range(0))};
  PairLabels labels{{kHalf, MultiPoly(Symbol::z1)}, {j, MultiPoly(Symbol::z2)}};
  for (auto _ : state) benchmark::DoNotOptimize(contract_R(labels));
}

void BM_ContractT(benchmark::State& state) {
  Spin j{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(contract_T(j, MultiPoly(Symbol::z)));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

BENCHMARK(BM_ContractR)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContractT)->DenseRange(1, 2, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
