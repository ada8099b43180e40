#include <benchmark/benchmark.h>

#include <random>

#include "exalg/fock.hpp"
#include "exalg/geometry.hpp"
#include "exalg/spaces.hpp"
#include "exalg/star.hpp"

namespace {

using namespace exalg;

Multivector random_mv(std::mt19937& rng, int n, int terms) {
  std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1u);
  std::normal_distribution<double> coef;
  Multivector m(n, Field::Complex);
  for (int k = 0; k < terms; ++k)
    m.add_term(bits(rng), Scalar(coef(rng), coef(rng)));
  return m;
}

void BM_Wedge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(12345);
  Multivector a = random_mv(rng, n, 16);
  Multivector b = random_mv(rng, n, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge(a, b));
  }
}
BENCHMARK(BM_Wedge)->Arg(6)->Arg(10)->Arg(14);

void BM_ContractLeft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(12345);
  Multivector a = random_mv(rng, n, 16);
  Multivector b = random_mv(rng, n, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(contract_left(a, b));
  }
}
BENCHMARK(BM_ContractLeft)->Arg(6)->Arg(10)->Arg(14);

void BM_Regressive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(99);
  Orientation omega(n);
  Multivector a = random_mv(rng, n, 32);
  Multivector b = random_mv(rng, n, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(regressive(a, b, omega));
  }
}
BENCHMARK(BM_Regressive)->Arg(6)->Arg(10);

void BM_SupercommutatorClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1u);
  for (auto _ : state) {
    SignedIndex s = supercommutator_closed(MultiIndex(bits(rng), n),
                                           MultiIndex(bits(rng), n),
                                           MultiIndex(bits(rng), n));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SupercommutatorClosed)->Arg(10)->Arg(16);

void BM_SupercommutatorDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1u);
  for (auto _ : state) {
    MultiIndex i(bits(rng), n), j(bits(rng), n), k(bits(rng), n);
    benchmark::DoNotOptimize(
        supercommutator_direct(i, j, Multivector::basis(k)));
  }
}
BENCHMARK(BM_SupercommutatorDirect)->Arg(10)->Arg(16);

void BM_InnerSpace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(31);
  Multivector m = random_mv(rng, n, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inner_space(m));
  }
}
BENCHMARK(BM_InnerSpace)->Arg(6)->Arg(8)->Arg(10);

void BM_FactorizeMaximal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(32);
  // A multivector with a guaranteed nontrivial inner space.
  Multivector core = random_mv(rng, n, 6);
  Multivector e1 = Multivector::basis(MultiIndex::single(1, n));
  Multivector m = wedge(e1, core);
  if (m.is_zero()) m = e1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize_maximal(m));
  }
}
BENCHMARK(BM_FactorizeMaximal)->Arg(6)->Arg(8);

void BM_PrincipalAngles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(33);
  std::normal_distribution<double> coef;
  Eigen::MatrixXcd v(n, n / 2), w(n, n / 2);
  for (int c = 0; c < n / 2; ++c)
    for (int r = 0; r < n; ++r) {
      v(r, c) = Scalar(coef(rng), coef(rng));
      w(r, c) = Scalar(coef(rng), coef(rng));
    }
  for (auto _ : state) {
    benchmark::DoNotOptimize(principal_angles(v, w));
  }
}
BENCHMARK(BM_PrincipalAngles)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
