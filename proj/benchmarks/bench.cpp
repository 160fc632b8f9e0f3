#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "mufix/chain.hpp"
#include "mufix/datalog.hpp"
#include "mufix/term.hpp"

namespace {

using namespace mufix;

FunctorExpr list_shape(std::size_t alphabet) {
  std::vector<Elem> letters;
  for (std::size_t i = 0; i < alphabet; ++i)
    letters.push_back(Elem::atom("a" + std::to_string(i)));
  return FunctorExpr::sum(
      FunctorExpr::one(),
      FunctorExpr::prod(FunctorExpr::constant("A", FinSet::of(letters)),
                        FunctorExpr::id()));
}

// Stage sizes grow as (|A|+1)-ary trees; the stage count is the knob.
void BM_BuildChain(benchmark::State& state) {
  FunctorExpr functor = list_shape(2);
  std::size_t stages = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Chain chain = build_chain(functor, stages, 1u << 20);
    benchmark::DoNotOptimize(chain.stages.back().size());
  }
}
BENCHMARK(BM_BuildChain)->Arg(6)->Arg(9)->Arg(12);

// Fold out of a converged constant-functor algebra into a two-point target.
void BM_FoldViaChain(benchmark::State& state) {
  std::vector<Elem> ks;
  for (int i = 0; i < state.range(0); ++i)
    ks.push_back(Elem::atom("k" + std::to_string(i)));
  FunctorExpr functor = FunctorExpr::constant("K", FinSet::of(ks));
  ChainResult result = run_chain(functor);
  FinSet carrier = FinSet::of({Elem::atom("u"), Elem::atom("v")});
  Algebra target(functor, carrier,
                 FinFn::from_fn(apply_obj(functor, carrier), carrier,
                                [&](const Elem&) { return Elem::atom("u"); }));
  for (auto _ : state) {
    FinFn fold = fold_via_chain(result.chain, *result.converged_at, target);
    benchmark::DoNotOptimize(fold);
  }
}
BENCHMARK(BM_FoldViaChain)->Arg(64)->Arg(256)->Arg(1024);

std::string path_graph_program(int nodes) {
  std::string src =
      "path(X,Y) :- edge(X,Y).\n"
      "path(X,Z) :- edge(X,Y), path(Y,Z).\n";
  for (int i = 0; i + 1 < nodes; ++i)
    src += "edge(n" + std::to_string(i) + ",n" + std::to_string(i + 1) + ").\n";
  return src;
}

void BM_LeastModelNaive(benchmark::State& state) {
  Program program =
      parse_program(path_graph_program(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    ModelResult result = least_model(program);
    benchmark::DoNotOptimize(result.model.size());
  }
}
BENCHMARK(BM_LeastModelNaive)->Arg(8)->Arg(16)->Arg(24);

void BM_LeastModelSemiNaive(benchmark::State& state) {
  Program program =
      parse_program(path_graph_program(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    FinSet model = semi_naive(program);
    benchmark::DoNotOptimize(model.size());
  }
}
BENCHMARK(BM_LeastModelSemiNaive)->Arg(8)->Arg(16)->Arg(24);

void BM_EnumerateTerms(benchmark::State& state) {
  FunctorExpr functor = list_shape(2);
  std::size_t depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    TermUniverse universe = enumerate_terms(functor, depth, 1u << 20);
    benchmark::DoNotOptimize(universe.terms().size());
  }
}
BENCHMARK(BM_EnumerateTerms)->Arg(6)->Arg(9)->Arg(12);

void BM_CataDeepNumeral(benchmark::State& state) {
  FunctorExpr nat =
      FunctorExpr::sum(FunctorExpr::one(), FunctorExpr::id());
  FinSet carrier = FinSet::of({Elem::atom("even"), Elem::atom("odd")});
  Algebra parity(
      nat, carrier,
      FinFn::from_pairs(apply_obj(nat, carrier), carrier,
                        {{Elem::inl(Elem::unit()), Elem::atom("even")},
                         {Elem::inr(Elem::atom("even")), Elem::atom("odd")},
                         {Elem::inr(Elem::atom("odd")), Elem::atom("even")}}));
  Elem term = Elem::in(Elem::inl(Elem::unit()));
  for (int i = 0; i < state.range(0); ++i) term = Elem::in(Elem::inr(term));
  for (auto _ : state) {
    Elem value = cata(nat, parity, term);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_CataDeepNumeral)->Arg(64)->Arg(512)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
