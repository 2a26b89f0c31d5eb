#include <benchmark/benchmark.h>

#include "regsg/biorder.hpp"
#include "regsg/corpus.hpp"
#include "regsg/cxn_from_ind.hpp"
#include "regsg/ind_from_cxn.hpp"
#include "regsg/inductive_groupoid.hpp"
#include "regsg/semigroup_cxn.hpp"

namespace {

  // Benchmarks take the corpus index as their argument.
  regsg::FiniteSemigroup member(benchmark::State const& state) {
    return regsg::corpus::by_name(regsg::corpus::names().at(static_cast<std::size_t>(state.range(0))));
  }

  void corpus_args(benchmark::internal::Benchmark* b) {
    for (std::size_t i = 0; i < regsg::corpus::names().size(); ++i) {
      b->Arg(static_cast<int64_t>(i));
    }
  }

  void BM_Green(benchmark::State& state) {
    auto const S = member(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(regsg::green(S));
    }
    state.SetLabel(S.name());
  }
  BENCHMARK(BM_Green)->Apply(corpus_args);

  void BM_InductiveGroupoid(benchmark::State& state) {
    auto const S = member(state);
    for (auto _ : state) {
      regsg::InductiveGroupoid IG(S);
      benchmark::DoNotOptimize(IG.morphisms().size());
    }
    state.SetLabel(S.name());
  }
  BENCHMARK(BM_InductiveGroupoid)->Apply(corpus_args);

  void BM_InductiveAxioms(benchmark::State& state) {
    auto const               S = member(state);
    regsg::InductiveGroupoid IG(S);
    for (auto _ : state) {
      benchmark::DoNotOptimize(regsg::verify_inductive_axioms(IG.groupoid(), 4));
    }
    state.SetLabel(S.name());
  }
  BENCHMARK(BM_InductiveAxioms)->Apply(corpus_args);

  void BM_Reconstruct(benchmark::State& state) {
    auto const               S = member(state);
    regsg::InductiveGroupoid IG(S);
    auto const               P = regsg::p_classes(IG.groupoid());
    for (auto _ : state) {
      benchmark::DoNotOptimize(regsg::reconstruct_semigroup(IG.groupoid(), P));
    }
    state.SetLabel(S.name());
  }
  BENCHMARK(BM_Reconstruct)->Apply(corpus_args);

  void BM_SemigroupCxn(benchmark::State& state) {
    auto const S = member(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(regsg::build_GammaS(S));
    }
    state.SetLabel(S.name());
  }
  BENCHMARK(BM_SemigroupCxn)->Apply(corpus_args);

  void BM_GammaGroupoid(benchmark::State& state) {
    auto const S = member(state);
    auto const X = regsg::build_GammaS(S);
    for (auto _ : state) {
      benchmark::DoNotOptimize(regsg::build_G_Gamma(X));
    }
    state.SetLabel(S.name());
  }
  BENCHMARK(BM_GammaGroupoid)->Apply(corpus_args);

  void BM_GroupoidCxn(benchmark::State& state) {
    auto const               S = member(state);
    regsg::InductiveGroupoid IG(S);
    for (auto _ : state) {
      benchmark::DoNotOptimize(regsg::build_GammaG(IG));
    }
    state.SetLabel(S.name());
  }
  BENCHMARK(BM_GroupoidCxn)->Apply(corpus_args);

  void BM_Isomorphism(benchmark::State& state) {
    auto const S = member(state);
    auto const T = regsg::build_S_Gamma(regsg::build_GammaS(S)).semigroup;
    for (auto _ : state) {
      benchmark::DoNotOptimize(regsg::find_isomorphism(S, T));
    }
    state.SetLabel(S.name());
  }
  BENCHMARK(BM_Isomorphism)->Apply(corpus_args);

  // T_n for n = 2, 3, 4: 4, 27 and 256 elements.
  void BM_FullTransformations(benchmark::State& state) {
    std::size_t const                       n = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<std::uint32_t>> gens(3, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      gens[0][i] = (i + 1) % n;
      gens[1][i] = i < 2 ? 1 - i : i;
      gens[2][i] = i == 1 ? 0 : i;
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(regsg::from_generators(n, gens));
    }
  }
  BENCHMARK(BM_FullTransformations)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
