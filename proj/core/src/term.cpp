#include "mufix/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "mufix/errors.hpp"

namespace mufix {

namespace {

// Deepest term directly inside one functor layer; 0 when there is none.
std::size_t layer_depth(const Elem& e) {
  switch (e.kind()) {
    case Elem::Kind::In:
      return term_depth(e);
    case Elem::Kind::Inl:
    case Elem::Kind::Inr:
      return layer_depth(e.child());
    case Elem::Kind::Pair:
      return std::max(layer_depth(e.first()), layer_depth(e.second()));
    case Elem::Kind::Unit:
    case Elem::Kind::Atom:
      return 0;
  }
  throw std::logic_error("unhandled element kind");
}

}  // namespace

std::size_t term_depth(const Elem& term) {
  if (!term.is(Elem::Kind::In))
    throw MalformedTerm("not a term (missing in wrap): " + term.repr());
  return 1 + layer_depth(term.child());
}

TermUniverse enumerate_terms(const FunctorExpr& functor, std::size_t depth,
                             std::size_t cap) {
  TermUniverse universe{functor, depth, {FinSet()}};
  for (std::size_t d = 1; d <= depth; ++d) {
    const FinSet& below = universe.levels.back();
    std::size_t predicted = apply_obj_size(functor, below.size());
    if (predicted > cap)
      throw StageExplosion("terms of depth " + std::to_string(d) +
                           " would number " + std::to_string(predicted) +
                           ", over the cap of " + std::to_string(cap));
    std::vector<Elem> wrapped;
    FinSet layer = apply_obj(functor, below);
    wrapped.reserve(layer.size());
    for (const Elem& e : layer) wrapped.push_back(Elem::in(e));
    universe.levels.push_back(FinSet::of(std::move(wrapped)));
  }
  return universe;
}

FinFn in_map(const TermUniverse& universe) {
  if (universe.depth_bound == 0)
    throw DepthOverflow(
        "no room to wrap: every wrapped element has depth at least 1");
  const FinSet& below = universe.levels[universe.depth_bound - 1];
  return FinFn::from_fn(apply_obj(universe.functor, below), universe.terms(),
                        [](const Elem& e) { return Elem::in(e); });
}

FinFn out_map(const TermUniverse& universe) {
  if (universe.depth_bound == 0)
    throw DepthOverflow(
        "no room to unwrap: a universe of depth 0 has no terms");
  const FinSet& below = universe.levels[universe.depth_bound - 1];
  return FinFn::from_fn(universe.terms(),
                        apply_obj(universe.functor, below),
                        [](const Elem& e) { return e.child(); });
}

Elem cata(const FunctorExpr& functor, const Algebra& target,
          const Elem& term) {
  if (!(target.functor() == functor))
    throw FunctorMismatch("algebra is for functor " +
                          target.functor().to_string() + ", term layer is " +
                          functor.to_string());
  if (!term.is(Elem::Kind::In))
    throw MalformedTerm("not a term (missing in wrap): " + term.repr());
  Elem evaluated_layer =
      map_layer(functor, term.child(),
                [&](const Elem& sub) { return cata(functor, target, sub); });
  if (!target.structure().domain().contains(evaluated_layer))
    throw MalformedTerm("evaluated layer " + evaluated_layer.repr() +
                        " is outside the structure map's domain");
  return target.structure()(evaluated_layer);
}

FinFn stage_term_bijection(const TermUniverse& universe, std::size_t n) {
  if (n > universe.depth_bound)
    throw std::invalid_argument("universe only reaches depth " +
                                std::to_string(universe.depth_bound));
  FinSet stage;  // starts as the empty stage
  FinFn bij = FinFn::from_pairs(stage, universe.levels[0], {});
  for (std::size_t k = 0; k < n; ++k) {
    FinFn lifted = apply_mor(universe.functor, bij);
    bij = FinFn::from_fn(lifted.domain(), universe.levels[k + 1],
                         [&](const Elem& e) { return Elem::in(lifted(e)); });
  }
  return bij;
}

bool is_numeral_shape(const FunctorExpr& functor) {
  return functor.is(FunctorExpr::Kind::Sum) &&
         functor.lhs().is(FunctorExpr::Kind::One) &&
         functor.rhs().is(FunctorExpr::Kind::Id);
}

bool is_list_shape(const FunctorExpr& functor) {
  return functor.is(FunctorExpr::Kind::Sum) &&
         functor.lhs().is(FunctorExpr::Kind::One) &&
         functor.rhs().is(FunctorExpr::Kind::Prod) &&
         functor.rhs().lhs().is(FunctorExpr::Kind::Const) &&
         functor.rhs().rhs().is(FunctorExpr::Kind::Id);
}

std::optional<std::size_t> numeral_value(const Elem& term) {
  std::size_t n = 0;
  Elem cursor = term;
  for (;;) {
    if (!cursor.is(Elem::Kind::In)) return std::nullopt;
    Elem layer = cursor.child();
    if (layer.is(Elem::Kind::Inl)) {
      return layer.child().is(Elem::Kind::Unit) ? std::optional(n)
                                                : std::nullopt;
    }
    if (!layer.is(Elem::Kind::Inr)) return std::nullopt;
    ++n;
    cursor = layer.child();
  }
}

namespace {

std::optional<std::vector<std::string>> list_items(const Elem& term) {
  std::vector<std::string> items;
  Elem cursor = term;
  for (;;) {
    if (!cursor.is(Elem::Kind::In)) return std::nullopt;
    Elem layer = cursor.child();
    if (layer.is(Elem::Kind::Inl)) {
      if (!layer.child().is(Elem::Kind::Unit)) return std::nullopt;
      return items;
    }
    if (!layer.is(Elem::Kind::Inr) || !layer.child().is(Elem::Kind::Pair))
      return std::nullopt;
    Elem head = layer.child().first();
    if (!head.is(Elem::Kind::Atom)) return std::nullopt;
    items.push_back(head.atom_name());
    cursor = layer.child().second();
  }
}

}  // namespace

std::string pretty_term(const FunctorExpr& functor, const Elem& term) {
  if (is_numeral_shape(functor)) {
    if (auto n = numeral_value(term)) return "#" + std::to_string(*n);
  } else if (is_list_shape(functor)) {
    if (auto items = list_items(term)) {
      std::string out = "[";
      for (std::size_t i = 0; i < items->size(); ++i) {
        if (i > 0) out += ",";
        out += (*items)[i];
      }
      return out + "]";
    }
  }
  return term.repr();
}

}  // namespace mufix
