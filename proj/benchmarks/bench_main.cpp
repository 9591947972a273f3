#include <benchmark/benchmark.h>

#include <random>

#include "qs3/isomap.hpp"
#include "qs3/ktheory.hpp"
#include "qs3/operators.hpp"
#include "qs3/rewrite.hpp"

using namespace qs3;

namespace {

Word random_word(const AlgebraPresentation& pres, std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 2 * pres.num_gens() - 1);
  Word w;
  for (int i = 0; i < len; ++i) {
    int c = pick(rng);
    w.push_back(gen_letter(c / 2, c % 2));
  }
  return w;
}

void BM_NormalForm(benchmark::State& state) {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.37);
  std::mt19937_64 rng(42);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(pres, rng, static_cast<int>(state.range(0))));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(words[i++ % words.size()], pres));
  }
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_Multiply(benchmark::State& state) {
  AlgebraPresentation pres = AlgebraPresentation::sphere_pq(0.5, 0.3, 0.37);
  std::mt19937_64 rng(43);
  NCElement e1(pres), e2(pres);
  for (int i = 0; i < 4; ++i) {
    e1 += normal_form(random_word(pres, rng, 5), pres);
    e2 += normal_form(random_word(pres, rng, 5), pres);
  }
  for (auto _ : state) benchmark::DoNotOptimize(multiply(e1, e2));
}
BENCHMARK(BM_Multiply);

void BM_EvaluateElement(benchmark::State& state) {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.37);
  RepSpec rho = RepSpec::rho(0.0, 0.0, 0.37);
  std::mt19937_64 rng(44);
  NCElement e(pres);
  for (int i = 0; i < 4; ++i) e += normal_form(random_word(pres, rng, 6), pres);
  Cutoff c{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(rho, e, c));
}
BENCHMARK(BM_EvaluateElement)->Arg(8)->Arg(16)->Arg(24);

void BM_RelationResiduals(benchmark::State& state) {
  RepSpec rho = RepSpec::rho(0.3, 0.7, 0.37);
  Cutoff c{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(relation_residuals(rho, c));
}
BENCHMARK(BM_RelationResiduals)->Arg(12)->Arg(24);

void BM_IndependenceRank(benchmark::State& state) {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(0.37);
  std::vector<Monomial> mons = basis_monomials(pres, Bounds{1, 1, 1});
  Cutoff c{10, 6};
  for (auto _ : state) benchmark::DoNotOptimize(independence_rank(pres, mons, c));
}
BENCHMARK(BM_IndependenceRank);

void BM_GImage(benchmark::State& state) {
  RepSpec rho = RepSpec::rho(0.5, 0.5, 0.3);
  Cutoff c{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(g_image(0, rho, c));
}
BENCHMARK(BM_GImage)->Arg(16)->Arg(24);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(45);
  std::uniform_int_distribution<int> entry(-20, 20);
  int n = static_cast<int>(state.range(0));
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8);

void BM_SolveSixTerm(benchmark::State& state) {
  SixTermData data = six_term_preset("s3-quantum");
  for (auto _ : state) benchmark::DoNotOptimize(solve_six_term(data));
}
BENCHMARK(BM_SolveSixTerm);

}  // namespace

BENCHMARK_MAIN();
