#include <benchmark/benchmark.h>

#include "pgroup/enumerate.hpp"
#include "pgroup/functors.hpp"
#include "pgroup/magma.hpp"
#include "pgroup/symset.hpp"
#include "pgroup/words.hpp"

namespace {

using namespace pgroup;

BinaryPartialGroup group_fixture(PartialMagma magma) {
  return *find_dagger(magma).group;
}

void BM_membership_length6(benchmark::State& state) {
  const BinaryPartialGroup z4 = group_fixture(cyclic_group(4));
  const Word w = {Element{1}, Element{2}, Element{3}, Element{1}, Element{2}, Element{3}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bp_membership(z4, w));
  }
}
BENCHMARK(BM_membership_length6);

void BM_big_embed_klein(benchmark::State& state) {
  const BinaryPartialGroup klein = group_fixture(klein_four_group());
  const int truncation = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(big_embed(klein, truncation));
  }
}
BENCHMARK(BM_big_embed_klein)->Arg(4)->Arg(5)->Arg(6);

void BM_small_embed_klein(benchmark::State& state) {
  const BinaryPartialGroup klein = group_fixture(klein_four_group());
  const int truncation = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(small_embed(klein, truncation));
  }
}
BENCHMARK(BM_small_embed_klein)->Arg(4)->Arg(5);

void BM_validate_partial_group(benchmark::State& state) {
  const BinaryPartialGroup z3 = group_fixture(cyclic_group(3));
  const TruncatedPartialGroup X = big_embed(z3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_partial_group(X));
  }
}
BENCHMARK(BM_validate_partial_group)->Arg(4)->Arg(5);

void BM_classify_size3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_bpgs(3));
  }
}
BENCHMARK(BM_classify_size3);

void BM_canonical_form(benchmark::State& state) {
  const PartialMagma klein = klein_four_group();
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(klein));
  }
}
BENCHMARK(BM_canonical_form);

}  // namespace

BENCHMARK_MAIN();
