#include <doctest.h>

#include "helpers.hpp"
#include "mufix/errors.hpp"
#include "mufix/functor.hpp"

using namespace mufix;
using tst::atom;
using tst::atoms;

TEST_CASE("object action of the leaf functors") {
  FinSet xy = atoms({"x", "y"});
  CHECK(apply_obj(FunctorExpr::zero(), xy) == FinSet());
  CHECK(apply_obj(FunctorExpr::one(), xy) == FinSet::of({Elem::unit()}));
  CHECK(apply_obj(FunctorExpr::id(), xy) == xy);
  FinSet k = atoms({"k1", "k2"});
  CHECK(apply_obj(FunctorExpr::constant("K", k), xy) == k);
  CHECK(apply_obj(FunctorExpr::constant("K", k), FinSet()) == k);
}

TEST_CASE("products pair every combination") {
  FunctorExpr f =
      FunctorExpr::prod(FunctorExpr::constant("A", atoms({"a", "b"})),
                        FunctorExpr::id());
  FinSet result = apply_obj(f, atoms({"x", "y"}));
  CHECK(result == FinSet::of({Elem::pair(atom("a"), atom("x")),
                              Elem::pair(atom("a"), atom("y")),
                              Elem::pair(atom("b"), atom("x")),
                              Elem::pair(atom("b"), atom("y"))}));
}

TEST_CASE("sums stay tagged even when the summands are disjoint") {
  FinSet empty;
  CHECK(apply_obj(tst::nat_shape(), empty) ==
        FinSet::of({Elem::inl(Elem::unit())}));

  FunctorExpr zero_plus_k = FunctorExpr::sum(
      FunctorExpr::zero(), FunctorExpr::constant("K", atoms({"k"})));
  CHECK(apply_obj(zero_plus_k, empty) == FinSet::of({Elem::inr(atom("k"))}));
}

TEST_CASE("predicted sizes match materialized sizes") {
  for (const auto& [label, functor] : tst::corpus()) {
    CAPTURE(label);
    for (const FinSet& x : tst::all_small_sets({"p", "q", "r"}))
      CHECK(apply_obj_size(functor, x.size()) == apply_obj(functor, x).size());
  }
}

TEST_CASE("morphism action rewrites only the Id positions") {
  FinFn f = FinFn::from_pairs(atoms({"x"}), atoms({"y"}),
                              {{atom("x"), atom("y")}});
  FinFn lifted = apply_mor(tst::nat_shape(), f);
  CHECK(lifted(Elem::inl(Elem::unit())) == Elem::inl(Elem::unit()));
  CHECK(lifted(Elem::inr(atom("x"))) == Elem::inr(atom("y")));
  CHECK(lifted.domain() == apply_obj(tst::nat_shape(), f.domain()));
  CHECK(lifted.codomain() == apply_obj(tst::nat_shape(), f.codomain()));
}

TEST_CASE("functor laws hold across the corpus, exhaustively on small sets") {
  auto sets = tst::all_small_sets({"p", "q"});
  auto pairs = tst::all_composable_pairs(sets);
  for (const auto& [label, functor] : tst::corpus()) {
    CAPTURE(label);
    LawReport report = check_functor_laws(functor, sets, pairs);
    CHECK(report.ok());
    CHECK(report.identity_checks == sets.size());
    CHECK(report.composition_checks == pairs.size());
  }
}

TEST_CASE("layer rewriting rejects elements of the wrong shape") {
  FunctorExpr nat = tst::nat_shape();
  auto keep = [](const Elem& e) { return e; };
  CHECK_THROWS_AS(map_layer(nat, Elem::unit(), keep), MalformedTerm);
  CHECK_THROWS_AS(map_layer(nat, Elem::pair(atom("a"), atom("b")), keep),
                  MalformedTerm);
  CHECK_THROWS_AS(map_layer(FunctorExpr::zero(), Elem::unit(), keep),
                  MalformedTerm);
  CHECK_THROWS_AS(
      map_layer(FunctorExpr::constant("K", atoms({"k"})), atom("z"), keep),
      MalformedTerm);
  CHECK_THROWS_AS(map_layer(FunctorExpr::one(), atom("a"), keep),
                  MalformedTerm);
}

TEST_CASE("structural equality ignores constant names but not contents") {
  FunctorExpr a = FunctorExpr::constant("A", atoms({"a"}));
  FunctorExpr b = FunctorExpr::constant("B", atoms({"a"}));
  FunctorExpr c = FunctorExpr::constant("A", atoms({"b"}));
  CHECK(a == b);
  CHECK(a != c);
  CHECK(tst::nat_shape() == tst::nat_shape());
  CHECK(tst::nat_shape() != tst::list_shape({"a"}));
}

TEST_CASE("rendering honours precedence") {
  CHECK(tst::nat_shape().to_string() == "1 + X");
  CHECK(tst::list_shape({"a", "b"}).to_string() == "1 + A * X");
  FunctorExpr grouped = FunctorExpr::prod(
      tst::nat_shape(), FunctorExpr::constant("K", atoms({"k"})));
  CHECK(grouped.to_string() == "(1 + X) * K");
  FunctorExpr right_sum =
      FunctorExpr::sum(FunctorExpr::zero(),
                       FunctorExpr::sum(FunctorExpr::one(), FunctorExpr::id()));
  CHECK(right_sum.to_string() == "0 + (1 + X)");
}

TEST_CASE("algebra construction checks the structure map's frame") {
  FunctorExpr nat = tst::nat_shape();
  FinSet carrier = atoms({"even", "odd"});
  FinFn good = FinFn::from_pairs(apply_obj(nat, carrier), carrier,
                                 {{Elem::inl(Elem::unit()), atom("even")},
                                  {Elem::inr(atom("even")), atom("odd")},
                                  {Elem::inr(atom("odd")), atom("even")}});
  CHECK_NOTHROW(Algebra(nat, carrier, good));

  FinFn wrong_domain = identity_fn(carrier);
  CHECK_THROWS_AS(Algebra(nat, carrier, wrong_domain), std::invalid_argument);

  FinFn wrong_codomain = identity_fn(apply_obj(nat, carrier));
  CHECK_THROWS_AS(Algebra(nat, carrier, wrong_codomain),
                  std::invalid_argument);
}
