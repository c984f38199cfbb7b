// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qlorentz/fock.hpp"
#include "qlorentz/lorentz.hpp"
#include "qlorentz/rewrite.hpp"

using namespace qlorentz;

namespace {

// A dense element with many terms: (J1 + K2 + BJ3)^2 in the four-mode algebra.
NormalForm wide_form() {
  const auto env = rotation_boost_generators().env();
  return normal_order("(J1 + K2 + BJ3)^2", &env);
}

void BM_NormalFormProduct(benchmark::State& state) {
  const NormalForm x = wide_form();
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, x));
  state.counters["terms"] = static_cast<double>(x.size());
}

void BM_NormalFormProductSerial(benchmark::State& state) {
  const NormalForm x = wide_form();
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(x, x));
  state.counters["terms"] = static_cast<double>(x.size());
}

FloatMatrix block_matrix(int n) {
  const auto env = rotation_boost_generators().env();
  return represent_float(normal_order("J1*K2 + BJ3", &env), FockBlock::lorentz(n, n), 1.3);
}

void BM_FloatMatrixProduct(benchmark::State& state) {
  const FloatMatrix m = block_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(m, m));
  state.counters["dim"] = static_cast<double>(m.rows());
}

void BM_FloatMatrixProductSerial(benchmark::State& state) {
  const FloatMatrix m = block_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(m, m));
  state.counters["dim"] = static_cast<double>(m.rows());
}

const WordSum& words() {
  static const WordSum w = expand_words(parse("(ad1*a2 + ad2*a1 + qpow(1,1)*ad1*a1)^3"));
  return w;
}

void BM_WordEvaluation(benchmark::State& state) {
  const FockBlock b = FockBlock::pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(represent_words(words(), b, QValue(Rational(3, 2))));
}

void BM_WordEvaluationSerial(benchmark::State& state) {
  const FockBlock b = FockBlock::pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(represent_words_serial(words(), b, QValue(Rational(3, 2))));
}

}  // namespace

BENCHMARK(BM_NormalFormProduct)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormProductSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FloatMatrixProduct)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FloatMatrixProductSerial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_WordEvaluation)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WordEvaluationSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
