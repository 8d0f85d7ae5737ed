#include <oscroll/constructions.hpp>
#include <oscroll/discriminant.hpp>
#include <oscroll/linalg.hpp>
#include <oscroll/scroll.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace oscroll;

namespace {

exact::QMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
  exact::QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      exact::Rat q(num(gen), den(gen));
      q.canonicalize();
      m(i, j) = q;
    }
  return m;
}

void BM_RankExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n + 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(exact::rank_exact(m));
}
BENCHMARK(BM_RankExact)->Arg(8)->Arg(16)->Arg(32);

void BM_MinorsGcd(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  // (1, t, t^(d-1), t^d) is flexed at t = 0, so the gcd never becomes constant.
  const auto c = constructions::monomial_curve({0, 1, d - 1, d}, d);
  const auto m = curves::jet_matrix(c, 2, curves::Chart::affine);
  for (auto _ : state) benchmark::DoNotOptimize(exact::minors_gcd(m, 3));
}
BENCHMARK(BM_MinorsGcd)->Arg(4)->Arg(6)->Arg(8);

void BM_GenericOscDim(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto sc = constructions::rational_normal_scroll({r, r + 1});
  for (auto _ : state) benchmark::DoNotOptimize(scrolls::generic_osc_dim(sc, static_cast<std::size_t>(r)));
}
BENCHMARK(BM_GenericOscDim)->Arg(2)->Arg(3)->Arg(5);

void BM_DegreeViaOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto sc = constructions::rational_normal_scroll({1, d});
  const scrolls::FlexComponent g{scrolls::ComponentKind::segre_subscroll, std::nullopt, {0}, 2};
  for (auto _ : state) benchmark::DoNotOptimize(discr::degree_via_oracle(sc, g, 5));
}
BENCHMARK(BM_DegreeViaOracle)->Arg(3)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
