#ifndef MUFIX_TERM_HPP
#define MUFIX_TERM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mufix/functor.hpp"

namespace mufix {

inline constexpr std::size_t kDefaultDepthBound = 4;

// A term is an element of the form in(t) where t has the shape the functor
// dictates, with further terms at the Id positions. depth(in(t)) is one more
// than the deepest term inside t, or 1 when t contains none.
std::size_t term_depth(const Elem& term);

// All terms of depth <= depth_bound, kept per depth: levels[k] holds the
// terms of depth <= k, so levels[0] is empty and levels.back() is the whole
// universe. Each level is the in-image of the functor applied to the level
// below, which makes the level sizes follow the chain stage sizes exactly.
struct TermUniverse {
  FunctorExpr functor;
  std::size_t depth_bound;
  std::vector<FinSet> levels;

  const FinSet& terms() const { return levels.back(); }
};

TermUniverse enumerate_terms(const FunctorExpr& functor, std::size_t depth,
                             std::size_t cap = kDefaultCardinalityCap);

// The wrap map apply_obj(functor, terms of depth <= d-1) -> terms of depth
// <= d, x |-> in(x), and its inverse. A bounded universe truncates the real
// thing: wrapping the universe's own top level would overflow the bound,
// which is why the pair is only partial. Throws DepthOverflow when the bound
// is 0 and nothing can be wrapped at all.
FinFn in_map(const TermUniverse& universe);
FinFn out_map(const TermUniverse& universe);

// Evaluates a term in an algebra by structural recursion: each layer is
// pushed through the structure map after the sub-terms are evaluated.
// Throws FunctorMismatch when the algebra is for another functor and
// MalformedTerm when the term does not fit the functor's shape.
Elem cata(const FunctorExpr& functor, const Algebra& target, const Elem& term);

// The bijection between the n-th chain stage and the terms of depth <= n,
// built without the chain module: stages are recomputed here by iterating
// apply_obj, and the map is wrap . F(previous). n must be at most the
// universe's depth bound.
FinFn stage_term_bijection(const TermUniverse& universe, std::size_t n);

// Shape tests used for readable term output: 1 + X gives numerals, printed
// #n; 1 + K * X gives lists over K, printed [a,b]. Anything else prints in
// canonical element syntax.
bool is_numeral_shape(const FunctorExpr& functor);
bool is_list_shape(const FunctorExpr& functor);
std::optional<std::size_t> numeral_value(const Elem& term);
std::string pretty_term(const FunctorExpr& functor, const Elem& term);

}  // namespace mufix

#endif
