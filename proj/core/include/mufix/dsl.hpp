#ifndef MUFIX_DSL_HPP
#define MUFIX_DSL_HPP

#include <map>
#include <string>
#include <string_view>

#include "mufix/functor.hpp"

namespace mufix {

// Functor files look like
//
//   # machines with two registers
//   K = { k1, k2 }
//   F = 1 + K * X
//
// Set lines declare named constant sets of atoms (possibly empty: `A = { }`).
// Exactly one line must bind F to a functor expression over 0, 1, X, the
// declared set names, + and *, with * binding tighter and parentheses
// allowed. '#' starts a comment. The names F and X are reserved.
struct FunctorFile {
  std::map<std::string, FinSet> sets;
  FunctorExpr functor;
};

FunctorFile parse_functor_file(std::string_view source);

// Just the expression grammar, resolving names against sets.
FunctorExpr parse_functor_expr(std::string_view source,
                               const std::map<std::string, FinSet>& sets);

// Canonical element syntax: '*', identifiers, L(t), R(t), (t,u), in(t).
Elem parse_elem(std::string_view source);

// Algebra files describe a target algebra for a known functor:
//
//   functor = 1 + X        # optional, cross-checked against the functor
//   carrier = { even, odd }
//   L(*) -> even
//   R(even) -> odd
//   R(odd) -> even
//
// The mapping lines must cover the functor applied to the carrier exactly
// once each. Violations throw AlgebraMalformed and the message echoes the
// expected domain.
Algebra parse_algebra_file(std::string_view source, const FunctorExpr& functor,
                           const std::map<std::string, FinSet>& sets);

}  // namespace mufix

#endif
