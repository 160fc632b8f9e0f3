#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mufix/datalog.hpp"
#include "mufix/errors.hpp"

using namespace mufix;
using tst::atom;
using tst::atoms;

namespace {

const char* kTransitiveClosure =
    "path(X,Y) :- edge(X,Y).\n"
    "path(X,Z) :- edge(X,Y), path(Y,Z).\n";

std::string tc_program(const std::vector<std::pair<int, int>>& edges) {
  std::string src = kTransitiveClosure;
  for (auto [a, b] : edges)
    src += "edge(n" + std::to_string(a) + ",n" + std::to_string(b) + ").\n";
  return src;
}

// Independent reachability oracle: breadth-first search over the edge list.
std::set<std::pair<int, int>> reachable_pairs(
    int nodes, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> result;
  for (int start = 0; start < nodes; ++start) {
    std::vector<bool> seen(nodes, false);
    std::vector<int> frontier{start};
    while (!frontier.empty()) {
      int at = frontier.back();
      frontier.pop_back();
      for (auto [a, b] : edges)
        if (a == at && !seen[b]) {
          seen[b] = true;
          frontier.push_back(b);
        }
    }
    for (int end = 0; end < nodes; ++end)
      if (seen[end]) result.insert({start, end});
  }
  return result;
}

FinSet path_atoms(const std::set<std::pair<int, int>>& pairs) {
  std::vector<Elem> elems;
  for (auto [a, b] : pairs)
    elems.push_back(
        atom("path(n" + std::to_string(a) + ",n" + std::to_string(b) + ")"));
  return FinSet::of(std::move(elems));
}

FinSet restrict_to(const FinSet& interpretation, const std::string& predicate) {
  std::vector<Elem> kept;
  for (const Elem& e : interpretation)
    if (e.atom_name().rfind(predicate + "(", 0) == 0 ||
        e.atom_name() == predicate)
      kept.push_back(e);
  return FinSet::of(std::move(kept));
}

}  // namespace

TEST_CASE("parsing splits facts and rules and tracks constants") {
  Program program = parse_program(
      "% tiny graph\n"
      "edge(a,b).\n"
      "edge(b,c).\n"
      "path(X,Y) :- edge(X,Y).\n"
      "path(X,Z) :- edge(X,Y), path(Y,Z).\n");
  REQUIRE(program.rules.size() == 4);
  CHECK(program.rules[0].is_fact());
  CHECK(program.rules[0].head.text() == "edge(a,b)");
  CHECK(!program.rules[2].is_fact());
  CHECK(program.rules[3].text() == "path(X,Z) :- edge(X,Y), path(Y,Z).");
  CHECK(program.constants == std::vector<std::string>{"a", "b", "c"});
  CHECK(program.arities.at("edge") == 2);
  CHECK(program.arities.at("path") == 2);
}

TEST_CASE("terms are split into variables and constants by first letter") {
  Program program = parse_program(
      "e(a). p(X,a,B2,b7) :- e(X), e(B2). q :- p(U,V,W,T).");
  const DlAtom& head = program.rules[1].head;
  CHECK(head.args[0].kind == DlTerm::Kind::Variable);
  CHECK(head.args[1].kind == DlTerm::Kind::Constant);
  CHECK(head.args[2].kind == DlTerm::Kind::Variable);
  CHECK(head.args[3].kind == DlTerm::Kind::Constant);
  CHECK(program.arities.at("q") == 0);
}

TEST_CASE("syntax errors carry line and column positions") {
  CHECK_THROWS_WITH_AS(parse_program("p(a)"), "1:5: expected '.' at the end of the clause",
                       SyntaxError);
  CHECK_THROWS_WITH_AS(parse_program("p(a,).\n"), "1:5: expected an identifier",
                       SyntaxError);
  CHECK_THROWS_WITH_AS(parse_program("p(a).\nq :. \n"),
                       "2:4: expected '-' to finish ':-'", SyntaxError);
  CHECK_THROWS_WITH_AS(parse_program("p(a b).\n"),
                       "1:5: expected ')' or ',' in the argument list",
                       SyntaxError);
  CHECK_THROWS_AS(parse_program(".\n"), SyntaxError);
}

TEST_CASE("head variables must occur in the body") {
  CHECK_THROWS_WITH_AS(
      parse_program("p(X) :- q(Y)."),
      "unsafe rule 'p(X) :- q(Y).': head variable X does not occur in the body",
      UnsafeRule);
  CHECK_THROWS_AS(parse_program("p(X)."), UnsafeRule);
  CHECK_NOTHROW(parse_program("p(a). q(X) :- p(X)."));
}

TEST_CASE("a predicate keeps one arity across the program") {
  CHECK_THROWS_WITH_AS(parse_program("p(a,b).\np(c).\n"),
                       "predicate p used with arity 2 and 1 (line 2)",
                       ArityMismatch);
  CHECK_THROWS_AS(parse_program("p. q :- p(a)."), ArityMismatch);
}

TEST_CASE("the herbrand base pairs every predicate with every tuple") {
  Program program = parse_program("edge(a,b). path(X,Y) :- edge(X,Y).");
  FinSet base = herbrand_base(program);
  CHECK(base.size() == 8);  // 2 predicates x 2^2 constant pairs
  CHECK(base.contains(atom("edge(a,a)")));
  CHECK(base.contains(atom("path(b,a)")));

  Program propositional = parse_program("p. q :- p.");
  CHECK(herbrand_base(propositional) == atoms({"p", "q"}));
}

TEST_CASE("the herbrand base cap fires before materialization") {
  // 7 constants at arity 3 is 343 atoms; a cap of 100 must refuse.
  std::string src = "t(a1,a2,a3).\nt(a4,a5,a6).\nt(a7,a7,a7).\n";
  Program program = parse_program(src);
  CHECK_THROWS_AS(herbrand_base(program, 100), StageExplosion);
  CHECK(herbrand_base(program, 343).size() == 343);
}

TEST_CASE("one consequence step returns facts plus fired rule heads only") {
  Program program = parse_program(
      "edge(a,b). edge(b,c).\n"
      "path(X,Y) :- edge(X,Y).\n"
      "path(X,Z) :- edge(X,Y), path(Y,Z).\n");
  FinSet facts = tp_step(program, FinSet::of({}));
  CHECK(facts == atoms({"edge(a,b)", "edge(b,c)"}));

  // The step is the pure consequence operator: it does not union its input
  // back in, so an atom that nothing derives disappears.
  FinSet with_noise = tp_step(program, atoms({"path(c,a)"}));
  CHECK(with_noise == atoms({"edge(a,b)", "edge(b,c)"}));

  FinSet second = tp_step(program, facts);
  CHECK(second ==
        atoms({"edge(a,b)", "edge(b,c)", "path(a,b)", "path(b,c)"}));
}

TEST_CASE("a three-node chain closes transitively in the least model") {
  Program program = parse_program(tc_program({{1, 2}, {2, 3}}));
  ModelResult result = least_model(program);
  CHECK(restrict_to(result.model, "path") ==
        atoms({"path(n1,n2)", "path(n1,n3)", "path(n2,n3)"}));
  // Facts, then direct edges as paths, then the composite: 3 growths.
  CHECK(result.iterations == 3);
  CHECK(result.trace.front().empty());
  CHECK(result.trace.back() == result.model);
  CHECK(check_fixed(consequence_operator(program), result.model));
}

TEST_CASE("propositional programs work without any constants") {
  Program program = parse_program("p. q :- p. r :- q, p. s :- s.");
  ModelResult result = least_model(program);
  CHECK(result.model == atoms({"p", "q", "r"}));
  CHECK(semi_naive(program) == result.model);
}

TEST_CASE("semi-naive evaluation matches the naive least model") {
  Program program = parse_program(tc_program({{0, 1}, {1, 2}, {2, 3}}));
  FinSet fast = semi_naive(program);
  CHECK(fast == least_model(program).model);
  CHECK(restrict_to(fast, "path").size() == 6);
}

TEST_CASE("the least model matches breadth-first reachability") {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  Program program = parse_program(tc_program(edges));
  FinSet expected = path_atoms(reachable_pairs(4, edges));
  CHECK(restrict_to(least_model(program).model, "path") == expected);
}

TEST_CASE("random graphs agree between naive, semi-naive and the oracle") {
  std::mt19937 rng(7);
  for (int round = 0; round < 25; ++round) {
    int nodes = 2 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < nodes; ++a)
      for (int b = 0; b < nodes; ++b)
        if (rng() % 3 == 0) edges.push_back({a, b});
    if (edges.empty()) continue;
    Program program = parse_program(tc_program(edges));
    ModelResult naive = least_model(program);
    CHECK(semi_naive(program) == naive.model);
    CHECK(restrict_to(naive.model, "path") ==
          path_atoms(reachable_pairs(nodes, edges)));
  }
}

TEST_CASE("the consequence operator is monotone on small bases") {
  Program program = parse_program("p. q :- p. r :- p, q.");
  MonotoneOp op = consequence_operator(program);
  MonotoneReport report = check_monotone(op);
  CHECK(report.exhaustive);
  CHECK(report.monotone());

  LeastReport least = check_least(op, least_model(program).model);
  CHECK(least.least());
}

TEST_CASE("model computation respects the herbrand cap") {
  std::string src = "t(a1,a2,a3).\nt(a4,a5,a6).\nt(a7,a7,a7).\n";
  Program program = parse_program(src);
  CHECK_THROWS_AS(least_model(program, 100), StageExplosion);
  CHECK_THROWS_AS(semi_naive(program, 100), StageExplosion);
  CHECK_THROWS_AS(consequence_operator(program, 100), StageExplosion);
}

TEST_CASE("rule text round-trips through the printer") {
  Program program = parse_program("p(a). r(X) :- p(X), q(X,b).");
  CHECK(program.rules[0].text() == "p(a).");
  CHECK(program.rules[1].text() == "r(X) :- p(X), q(X,b).");
}
