#ifndef MUFIX_DATALOG_HPP
#define MUFIX_DATALOG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mufix/lattice.hpp"

namespace mufix {

// Positive Datalog: no negation anywhere, so every program has a least
// model. Ground atoms double as set elements (atom kind, name = the printed
// form), which plugs interpretations straight into the powerset lattice.

struct DlTerm {
  enum class Kind { Constant, Variable };
  Kind kind;
  std::string name;

  bool operator==(const DlTerm&) const = default;
};

struct DlAtom {
  std::string predicate;
  std::vector<DlTerm> args;

  bool ground() const;
  // Printed form: p, or p(a,b). Only valid for ground atoms.
  std::string text() const;

  bool operator==(const DlAtom&) const = default;
};

struct DlRule {
  DlAtom head;
  std::vector<DlAtom> body;  // empty for facts

  bool is_fact() const { return body.empty(); }
  std::string text() const;
};

struct Program {
  std::vector<DlRule> rules;
  std::vector<std::string> constants;             // sorted, duplicate-free
  std::map<std::string, std::size_t> arities;     // predicate -> arity
};

// Surface syntax:
//   fact:  atom '.'
//   rule:  atom ':-' atom (',' atom)* '.'
//   atom:  ident | ident '(' term (',' term)* ')'
//   term:  constant (starts lowercase or with a digit)
//        | variable (starts uppercase)
//   '%' starts a comment that runs to the end of the line.
//
// Throws SyntaxError with line:column, UnsafeRule when a head variable does
// not occur in the body, ArityMismatch when a predicate is used at two
// different arities.
Program parse_program(std::string_view source);

// Every predicate applied to every tuple of program constants. Throws
// StageExplosion when it would exceed cap.
FinSet herbrand_base(const Program& program,
                     std::size_t cap = kDefaultCardinalityCap);

// Immediate consequences of the interpretation: heads of rules whose bodies
// are satisfied. Facts are always included; the input itself is not.
FinSet tp_step(const Program& program, const FinSet& interpretation);

// The consequence operator packaged over the Herbrand base, ready for
// kleene_lfp and the lattice checks.
MonotoneOp consequence_operator(const Program& program,
                                std::size_t cap = kDefaultCardinalityCap);

struct ModelResult {
  FinSet model;
  std::size_t iterations;
  std::vector<FinSet> trace;
};

// Least model by Kleene iteration of tp_step from the empty interpretation.
ModelResult least_model(const Program& program,
                        std::size_t cap = kDefaultCardinalityCap);

// Least model again, but each round only instantiates rules against atoms
// that are new since the previous round. Must agree with least_model
// exactly; tests and the CLI hold it to that.
FinSet semi_naive(const Program& program,
                  std::size_t cap = kDefaultCardinalityCap);

}  // namespace mufix

#endif
