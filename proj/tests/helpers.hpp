#ifndef MUFIX_TESTS_HELPERS_HPP
#define MUFIX_TESTS_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mufix/finset.hpp"
#include "mufix/functor.hpp"

namespace tst {

inline mufix::Elem atom(const std::string& name) {
  return mufix::Elem::atom(name);
}

inline mufix::FinSet atoms(const std::vector<std::string>& names) {
  std::vector<mufix::Elem> elems;
  for (const auto& name : names) elems.push_back(mufix::Elem::atom(name));
  return mufix::FinSet::of(std::move(elems));
}

inline mufix::FinSet atoms(std::initializer_list<std::string> names) {
  return atoms(std::vector<std::string>(names));
}

// The functor family most tests revolve around.
inline mufix::FunctorExpr nat_shape() {  // 1 + X
  return mufix::FunctorExpr::sum(mufix::FunctorExpr::one(),
                                 mufix::FunctorExpr::id());
}

inline mufix::FunctorExpr list_shape(std::initializer_list<std::string> k) {
  return mufix::FunctorExpr::sum(
      mufix::FunctorExpr::one(),
      mufix::FunctorExpr::prod(mufix::FunctorExpr::constant("A", atoms(k)),
                               mufix::FunctorExpr::id()));
}

// The functor corpus the laws and chain tests sweep over.
struct NamedFunctor {
  std::string label;
  mufix::FunctorExpr functor;
};

inline std::vector<NamedFunctor> corpus() {
  using mufix::FunctorExpr;
  return {
      {"K", FunctorExpr::constant("K", atoms({"k1", "k2"}))},
      {"X", FunctorExpr::id()},
      {"1 + X", nat_shape()},
      {"1 + A * X", list_shape({"a", "b"})},
      {"A * X", FunctorExpr::prod(FunctorExpr::constant("A", atoms({"a"})),
                                  FunctorExpr::id())},
      {"0 + K", FunctorExpr::sum(FunctorExpr::zero(),
                                 FunctorExpr::constant("K", atoms({"k"})))},
  };
}

// All subsets of a small atom pool, and with them every identity and
// composition sample the functor laws can be checked against exhaustively.
inline std::vector<mufix::FinSet> all_small_sets(
    const std::vector<std::string>& pool) {
  std::vector<mufix::FinSet> sets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    std::vector<mufix::Elem> members;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(atom(pool[i]));
    sets.push_back(mufix::FinSet::of(std::move(members)));
  }
  return sets;
}

inline std::vector<std::pair<mufix::FinFn, mufix::FinFn>> all_composable_pairs(
    const std::vector<mufix::FinSet>& sets) {
  std::vector<std::pair<mufix::FinFn, mufix::FinFn>> pairs;
  for (const auto& x : sets)
    for (const auto& y : sets)
      for (const auto& z : sets)
        for (const auto& inner : mufix::all_functions(x, y))
          for (const auto& outer : mufix::all_functions(y, z))
            pairs.emplace_back(outer, inner);  // compose(outer, inner)
  return pairs;
}

}  // namespace tst

#endif
