#include <benchmark/benchmark.h>

#include "jetalg/expression.hpp"
#include "jetalg/fixtures.hpp"
#include "jetalg/jet.hpp"
#include "jetalg/jet_field.hpp"
#include "jetalg/pbw.hpp"
#include "jetalg/sampler.hpp"
#include "jetalg/semidirect.hpp"
#include "jetalg/text_input.hpp"
#include "jetalg/transition.hpp"

using namespace jetalg;

namespace {

void BM_PolyMul(benchmark::State& state) {
  const auto vars = fixtures::chart("affine2")->vars();
  const Poly p = parse_poly("x1^3 - 2*x1*x2 + 5*x2^2 - 7/3", vars).pow(static_cast<unsigned>(state.range(0)));
  const Poly q = parse_poly("x1 + x2 + 1", vars).pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMul)->Arg(2)->Arg(4)->Arg(8);

void BM_EllipticMul(benchmark::State& state) {
  const ChartPtr e = fixtures::chart("elliptic");
  const RingElem f = parse_expression("x^2*y + 3*x - 1/y", e);
  for (auto _ : state) benchmark::DoNotOptimize(f * f * f);
}
BENCHMARK(BM_EllipticMul);

void BM_JetOf(benchmark::State& state) {
  const ChartPtr e = fixtures::chart("elliptic");
  const RingElem f = parse_expression("x*y + 1/y", e);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jet_of(f, k));
}
BENCHMARK(BM_JetOf)->DenseRange(1, 4);

void BM_JetMul(benchmark::State& state) {
  const ChartPtr e = fixtures::chart("elliptic");
  const auto k = static_cast<unsigned>(state.range(0));
  const Jet a = jet_of(parse_expression("x*y + 1/y", e), k), b = delta(parse_expression("x^2 - y", e), k);
  for (auto _ : state) benchmark::DoNotOptimize(jet_mul(a, b));
}
BENCHMARK(BM_JetMul)->DenseRange(1, 4);

void BM_JetFieldBracket(benchmark::State& state) {
  const ChartPtr c = fixtures::chart("affine2");
  const auto k = static_cast<unsigned>(state.range(0));
  Rng rng(1);
  const JetField u = random_jet_field(rng, c, k), w = random_jet_field(rng, c, k);
  for (auto _ : state) benchmark::DoNotOptimize(jf_bracket(u, w));
}
BENCHMARK(BM_JetFieldBracket)->DenseRange(1, 4);

void BM_PhiPsi(benchmark::State& state) {
  const ChartPtr c = fixtures::chart("elliptic");
  const auto k = static_cast<unsigned>(state.range(0));
  Rng rng(2);
  const JetField u = random_jet_field(rng, c, k);
  for (auto _ : state) benchmark::DoNotOptimize(psi(phi(u), k));
}
BENCHMARK(BM_PhiPsi)->DenseRange(1, 4);

void BM_PbwNormalize(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const auto word = random_word(rng, 2, 3, len);
  for (auto _ : state) benchmark::DoNotOptimize(pbw_normalize(word, 2, 3));
}
BENCHMARK(BM_PbwNormalize)->DenseRange(2, 5);

void BM_TransitionFormula(benchmark::State& state) {
  const Atlas p1 = fixtures::atlas("p1");
  const TransitionPair& tp = p1.transition(0, 1);
  const MultiIndex m{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(transition_l(m, 0, tp, 4));
}
BENCHMARK(BM_TransitionFormula)->DenseRange(1, 3);

void BM_TransitionViaIso(benchmark::State& state) {
  const Atlas p1 = fixtures::atlas("p1");
  const TransitionPair& tp = p1.transition(0, 1);
  const MultiIndex m{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(transition_via_iso(m, 0, tp, 4));
}
BENCHMARK(BM_TransitionViaIso)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
