#include <doctest.h>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "mufix/chain.hpp"
#include "mufix/errors.hpp"
#include "mufix/term.hpp"

using namespace mufix;
using tst::atom;
using tst::atoms;

namespace {

Elem numeral(std::size_t n) {
  Elem t = Elem::in(Elem::inl(Elem::unit()));
  for (std::size_t i = 0; i < n; ++i) t = Elem::in(Elem::inr(t));
  return t;
}

Elem list_term(const std::vector<std::string>& items) {
  Elem t = Elem::in(Elem::inl(Elem::unit()));
  for (auto it = items.rbegin(); it != items.rend(); ++it)
    t = Elem::in(Elem::inr(Elem::pair(atom(*it), t)));
  return t;
}

}  // namespace

TEST_CASE("depth counts the longest chain of wraps") {
  CHECK(term_depth(numeral(0)) == 1);
  CHECK(term_depth(numeral(1)) == 2);
  CHECK(term_depth(numeral(4)) == 5);
  CHECK(term_depth(list_term({})) == 1);
  CHECK(term_depth(list_term({"a"})) == 2);
  CHECK(term_depth(list_term({"a", "b"})) == 3);
  CHECK_THROWS_AS(term_depth(atom("a")), MalformedTerm);
  CHECK_THROWS_AS(term_depth(Elem::inl(Elem::unit())), MalformedTerm);
}

TEST_CASE("numeral terms up to depth 3 are exactly #0, #1, #2") {
  TermUniverse universe = enumerate_terms(tst::nat_shape(), 3);
  REQUIRE(universe.levels.size() == 4);
  CHECK(universe.levels[0].empty());
  CHECK(universe.levels[1] == FinSet::of({numeral(0)}));
  CHECK(universe.levels[2] == FinSet::of({numeral(0), numeral(1)}));
  CHECK(universe.terms() == FinSet::of({numeral(0), numeral(1), numeral(2)}));
}

TEST_CASE("list terms up to depth 2 are the lists of length at most one") {
  TermUniverse universe = enumerate_terms(tst::list_shape({"a", "b"}), 2);
  CHECK(universe.terms() ==
        FinSet::of({list_term({}), list_term({"a"}), list_term({"b"})}));
}

TEST_CASE("level sizes repeat the chain stage sizes") {
  for (const auto& [label, functor] : tst::corpus()) {
    CAPTURE(label);
    TermUniverse universe = enumerate_terms(functor, 5);
    std::size_t expected = 0;
    for (const FinSet& level : universe.levels) {
      CHECK(level.size() == expected);
      expected = apply_obj_size(functor, expected);
    }
  }
}

TEST_CASE("every enumerated term respects its level's depth bound") {
  TermUniverse universe = enumerate_terms(tst::list_shape({"a", "b"}), 4);
  for (std::size_t k = 1; k < universe.levels.size(); ++k)
    for (const Elem& t : universe.levels[k]) CHECK(term_depth(t) <= k);
}

TEST_CASE("term enumeration honours the cardinality cap") {
  CHECK_THROWS_AS(enumerate_terms(tst::list_shape({"a", "b"}), 16, 1000),
                  StageExplosion);
}

TEST_CASE("wrap and unwrap are mutually inverse on a bounded universe") {
  TermUniverse universe = enumerate_terms(tst::nat_shape(), 3);
  FinFn wrap = in_map(universe);
  FinFn unwrap = out_map(universe);
  CHECK(wrap.domain() == apply_obj(tst::nat_shape(), universe.levels[2]));
  CHECK(wrap.codomain() == universe.terms());
  CHECK(unwrap.domain() == universe.terms());
  CHECK(compose(unwrap, wrap) == identity_fn(wrap.domain()));
  CHECK(compose(wrap, unwrap) == identity_fn(universe.terms()));
  CHECK(wrap(Elem::inl(Elem::unit())) == numeral(0));
  CHECK(unwrap(numeral(2)) == Elem::inr(numeral(1)));
}

TEST_CASE("a depth bound of zero leaves nothing to wrap") {
  TermUniverse universe = enumerate_terms(tst::nat_shape(), 0);
  CHECK(universe.terms().empty());
  CHECK_THROWS_AS(in_map(universe), DepthOverflow);
  CHECK_THROWS_AS(out_map(universe), DepthOverflow);
}

TEST_CASE("evaluating numerals for parity lands on even and odd correctly") {
  FinSet carrier = atoms({"even", "odd"});
  Algebra parity(tst::nat_shape(), carrier,
                 FinFn::from_pairs(apply_obj(tst::nat_shape(), carrier), carrier,
                                   {{Elem::inl(Elem::unit()), atom("even")},
                                    {Elem::inr(atom("even")), atom("odd")},
                                    {Elem::inr(atom("odd")), atom("even")}}));
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(cata(tst::nat_shape(), parity, numeral(n)) ==
          atom(n % 2 == 0 ? "even" : "odd"));
}

TEST_CASE("evaluating lists for length parity ignores the items") {
  FunctorExpr shape = tst::list_shape({"a", "b"});
  FinSet carrier = atoms({"even", "odd"});
  std::vector<std::pair<Elem, Elem>> assignment{
      {Elem::inl(Elem::unit()), atom("even")}};
  for (const char* item : {"a", "b"}) {
    assignment.push_back({Elem::inr(Elem::pair(atom(item), atom("even"))), atom("odd")});
    assignment.push_back({Elem::inr(Elem::pair(atom(item), atom("odd"))), atom("even")});
  }
  Algebra length_parity(shape, carrier,
                        FinFn::from_pairs(apply_obj(shape, carrier), carrier,
                                          assignment));
  CHECK(cata(shape, length_parity, list_term({})) == atom("even"));
  CHECK(cata(shape, length_parity, list_term({"a"})) == atom("odd"));
  CHECK(cata(shape, length_parity, list_term({"b", "a"})) == atom("even"));
  CHECK(cata(shape, length_parity, list_term({"a", "a", "b"})) == atom("odd"));
}

TEST_CASE("evaluation rejects foreign functors and malformed terms") {
  FinSet carrier = atoms({"u"});
  Algebra target(tst::nat_shape(), carrier,
                 FinFn::from_pairs(apply_obj(tst::nat_shape(), carrier), carrier,
                                   {{Elem::inl(Elem::unit()), atom("u")},
                                    {Elem::inr(atom("u")), atom("u")}}));
  CHECK_THROWS_AS(cata(tst::list_shape({"a"}), target, list_term({})),
                  FunctorMismatch);
  CHECK_THROWS_AS(cata(tst::nat_shape(), target, atom("a")), MalformedTerm);
  CHECK_THROWS_AS(
      cata(tst::nat_shape(), target, Elem::in(Elem::pair(atom("a"), atom("b")))),
      MalformedTerm);
}

TEST_CASE("evaluating with wrap as the structure map changes nothing") {
  FunctorExpr shape = tst::list_shape({"a", "b"});
  TermUniverse universe = enumerate_terms(shape, 3);
  // Extend wrap to a total map on F(carrier): layers whose wrap would leave
  // the depth bound get an arbitrary default. Recursion over terms that fit
  // the bound never reaches those layers, so evaluation must be the identity.
  const FinSet& carrier = universe.terms();
  FinFn structure =
      FinFn::from_fn(apply_obj(shape, carrier), carrier, [&](const Elem& e) {
        Elem wrapped = Elem::in(e);
        return carrier.contains(wrapped) ? wrapped : list_term({});
      });
  Algebra self(shape, carrier, structure);
  for (const Elem& t : carrier) CHECK(cata(shape, self, t) == t);
}

TEST_CASE("stage elements and terms line up through the bijection") {
  TermUniverse universe = enumerate_terms(tst::list_shape({"a", "b"}), 3);
  FinFn bij = stage_term_bijection(universe, 2);
  CHECK(is_bijection(bij));
  CHECK(bij.codomain() == universe.levels[2]);
  CHECK(bij.domain().size() == 3);
  // Stage 2 of 1 + A * X is {L(*), R((a,L(*))), R((b,L(*)))}; the bijection
  // wraps each layer with in at every level.
  CHECK(bij(Elem::inl(Elem::unit())) == list_term({}));
  CHECK(bij(Elem::inr(Elem::pair(atom("a"), Elem::inl(Elem::unit())))) ==
        list_term({"a"}));
  CHECK_THROWS_AS(stage_term_bijection(universe, 4), std::invalid_argument);
}

TEST_CASE("shape detection singles out numerals and lists") {
  CHECK(is_numeral_shape(tst::nat_shape()));
  CHECK(!is_numeral_shape(tst::list_shape({"a"})));
  CHECK(is_list_shape(tst::list_shape({"a"})));
  CHECK(!is_list_shape(tst::nat_shape()));
  CHECK(!is_list_shape(FunctorExpr::constant("K", atoms({"k"}))));
}

TEST_CASE("numeral values read off the wrap count") {
  CHECK(numeral_value(numeral(0)) == 0);
  CHECK(numeral_value(numeral(7)) == 7);
  CHECK(!numeral_value(atom("a")).has_value());
  CHECK(!numeral_value(Elem::in(atom("a"))).has_value());
}

TEST_CASE("pretty printing uses #n for numerals and brackets for lists") {
  CHECK(pretty_term(tst::nat_shape(), numeral(3)) == "#3");
  CHECK(pretty_term(tst::list_shape({"a", "b"}), list_term({})) == "[]");
  CHECK(pretty_term(tst::list_shape({"a", "b"}), list_term({"a", "b"})) ==
        "[a,b]");
  FunctorExpr k = FunctorExpr::constant("K", atoms({"k"}));
  CHECK(pretty_term(k, Elem::in(atom("k"))) == "in(k)");
}
