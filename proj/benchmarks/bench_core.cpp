#include <benchmark/benchmark.h>

#include "pgk/decisions.hpp"
#include "pgk/presets.hpp"

using namespace pgk;

static void BM_GarsideDiscoveryB4(benchmark::State& state) {
  auto spec = load_preset("B4");
  for (auto _ : state)
    benchmark::DoNotOptimize(find_minimal_garside(spec, {0, 1, 2}));
}
BENCHMARK(BM_GarsideDiscoveryB4);

static void BM_GreedyNormalForm(benchmark::State& state) {
  auto spec = load_preset("B4");
  auto gs = find_minimal_garside(spec, {0, 1, 2});
  Word w = spec.parse_word(
      "s1 s2 s3 s1 s2 s3 s2 s1 s3 s2 s1 s3 s1 s2 s3 s1");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_word(gs, w));
}
BENCHMARK(BM_GreedyNormalForm);

static void BM_GroupNormalForm(benchmark::State& state) {
  auto spec = load_preset("B4");
  auto gs = find_minimal_garside(spec, {0, 1, 2});
  SignedWord w = spec.parse_signed_word(
      "s1 s2- s3 s1- s2 s3- s2 s1- s3 s2- s1 s3-");
  for (auto _ : state) benchmark::DoNotOptimize(group_nf(gs, w));
}
BENCHMARK(BM_GroupNormalForm);

static void BM_TreeBuildB3B3(benchmark::State& state) {
  auto spec = load_preset("B3B3");
  auto cp = derive_complements(spec);
  for (auto _ : state) benchmark::DoNotOptimize(build_fc_tree(spec, cp));
}
BENCHMARK(BM_TreeBuildB3B3);

static void BM_WordProblemB3B3(benchmark::State& state) {
  auto spec = load_preset("B3B3");
  auto tree = build_fc_tree(spec, derive_complements(spec));
  SignedWord w1 = spec.parse_signed_word("a b c b a- c b- a c-");
  SignedWord w2 = spec.parse_signed_word("a c b c a- c b- a c-");
  for (auto _ : state)
    benchmark::DoNotOptimize(word_problem(tree, w1, w2));
}
BENCHMARK(BM_WordProblemB3B3);

static void BM_CosetMembership(benchmark::State& state) {
  auto spec = load_preset("B3B3");
  auto tree = build_fc_tree(spec, derive_complements(spec));
  SignedWord w = spec.parse_signed_word("b b a a- c c- b-");
  std::vector<AtomId> p{1};
  for (auto _ : state)
    benchmark::DoNotOptimize(coset_membership(tree, w, p));
}
BENCHMARK(BM_CosetMembership);

static void BM_OracleClosure(benchmark::State& state) {
  auto spec = load_preset("B3B3");
  Word w = spec.parse_word("a b a c b c a b");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_closure(w, spec));
}
BENCHMARK(BM_OracleClosure);

BENCHMARK_MAIN();
