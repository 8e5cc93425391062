#include <benchmark/benchmark.h>

#include <random>

#include "blockscope/adjoint.hpp"
#include "blockscope/corpus.hpp"
#include "blockscope/pipoints.hpp"

using namespace blockscope;

namespace {

Mat random_mat(const Field& f, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, f.size() - 1);
  Mat m(f, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = static_cast<Elem>(d(rng));
  return m;
}

void BM_Rank(benchmark::State& s) {
  const Field& f = Field::get(static_cast<int>(s.range(1)), static_cast<int>(s.range(2)));
  Mat m = random_mat(f, static_cast<int>(s.range(0)), 1);
  for (auto _ : s) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Args({64, 2, 1})->Args({64, 3, 1})->Args({128, 2, 1})->Args({128, 2, 2})->Args({256, 2, 1});

void BM_Multiply(benchmark::State& s) {
  const Field& f = Field::get(2);
  const int n = static_cast<int>(s.range(0));
  Mat a = random_mat(f, n, 2), b = random_mat(f, n, 3);
  for (auto _ : s) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(64)->Arg(128);

void BM_Analyze(benchmark::State& s, const char* name) {
  HopfAlgebra h = builtin_algebra(name);
  for (auto _ : s) benchmark::DoNotOptimize(analyze(h));
}
BENCHMARK_CAPTURE(BM_Analyze, S3_p2, "kS3@p2");
BENCHMARK_CAPTURE(BM_Analyze, D8_p2, "kD8@p2");
BENCHMARK_CAPTURE(BM_Analyze, sl2_p3, "u(sl2)@p3")->Unit(benchmark::kMillisecond);

void BM_Cohomology(benchmark::State& s, const char* name) {
  HopfAlgebra h = builtin_algebra(name);
  const int cap = static_cast<int>(s.range(0));
  for (auto _ : s) {
    CohomologyEngine e(h, cap);
    benchmark::DoNotOptimize(e.ring().names.size());
  }
}
BENCHMARK_CAPTURE(BM_Cohomology, E2_p2, "k(Z/2xZ/2)@p2")->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cohomology, D8_p2, "kD8@p2")->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cohomology, S3_p3, "kS3@p3")->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HochschildDims(benchmark::State& s, const char* name) {
  Analysis an = analyze(builtin_algebra(name));
  for (auto _ : s) benchmark::DoNotOptimize(hochschild_dims(an, 6));
}
BENCHMARK_CAPTURE(BM_HochschildDims, S3_p2, "kS3@p2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HochschildDims, Q8_p2, "kQ8@p2")->Unit(benchmark::kMillisecond);

void BM_FlatTest(benchmark::State& s, const char* name) {
  CohomologyEngine e(builtin_algebra(name), 4);
  PiPoints pp(e);
  auto sample = pp.sample_p_nilpotents(256, 5);
  size_t i = 0;
  for (auto _ : s) benchmark::DoNotOptimize(flat_test(e.hopf(), sample[i++ % sample.size()]));
}
BENCHMARK_CAPTURE(BM_FlatTest, D8_p2, "kD8@p2");
BENCHMARK_CAPTURE(BM_FlatTest, sl2_p3, "u(sl2)@p3");

void BM_FlatClasses(benchmark::State& s, const char* name) {
  CohomologyEngine e(builtin_algebra(name), 6);
  for (auto _ : s) {
    PiPoints pp(e);
    benchmark::DoNotOptimize(pp.flat_classes().size());
  }
}
BENCHMARK_CAPTURE(BM_FlatClasses, E2_p2, "k(Z/2xZ/2)@p2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FlatClasses, S3_p2, "kS3@p2")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
