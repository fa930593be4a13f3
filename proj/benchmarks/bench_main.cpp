#include <benchmark/benchmark.h>

#include <random>

#include "whframes/algebra.hpp"
#include "whframes/exact_linalg.hpp"
#include "whframes/group.hpp"
#include "whframes/mub.hpp"
#include "whframes/sic.hpp"

using namespace whframes;

namespace {

algebra::AlgebraicNumber random_element(const algebra::TowerPtr& t, std::mt19937_64& rng, double density) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<algebra::Rational> c(t->total_degree());
  for (auto& x : c)
    if (u(rng) < density) x = algebra::Rational(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return {t, std::move(c)};
}

void BM_TowerMultiply(benchmark::State& state, algebra::TowerPtr (*tower)(), double density) {
  std::mt19937_64 rng(1);
  const auto t = tower();
  const auto x = random_element(t, rng, density), y = random_element(t, rng, density);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK_CAPTURE(BM_TowerMultiply, appendix8, algebra::appendix_tower, 1.0);
BENCHMARK_CAPTURE(BM_TowerMultiply, grassl96_sparse, algebra::grassl_tower, 0.1);
BENCHMARK_CAPTURE(BM_TowerMultiply, grassl96_dense, algebra::grassl_tower, 1.0);

void BM_TowerInverse(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto x = random_element(algebra::grassl_tower(), rng, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_TowerInverse)->Unit(benchmark::kMillisecond);

void BM_ExactSicPair(benchmark::State& state) {
  const auto orbit = sic::heisenberg_orbit(sic::grassl_fiducial());
  const auto& vs = std::get<0>(orbit.vectors);
  const auto c0 = algebra::conj(vs[0]);
  for (auto _ : state) benchmark::DoNotOptimize(algebra::abs_squared(algebra::inner_preconj(c0, vs[7])));
}
BENCHMARK(BM_ExactSicPair)->Unit(benchmark::kMicrosecond);

void BM_OrbitFramePotential(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  Eigen::VectorXcd v(d);
  for (int j = 0; j < d; ++j) v(j) = {n(rng), n(rng)};
  v.normalize();
  for (auto _ : state) benchmark::DoNotOptimize(sic::orbit_frame_potential(v));
}
BENCHMARK(BM_OrbitFramePotential)->DenseRange(2, 8, 2);

void BM_SearchFiducial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sic::search_fiducial(d, 4, 1).potential);
}
BENCHMARK(BM_SearchFiducial)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

void BM_AppendixGraph(benchmark::State& state) {
  const auto& vs = mub::appendix_vectors();
  for (auto _ : state) benchmark::DoNotOptimize(mub::unbiasedness_graph(vs, 6).n);
}
BENCHMARK(BM_AppendixGraph)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
