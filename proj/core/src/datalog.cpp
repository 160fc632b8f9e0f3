#include "mufix/datalog.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "mufix/errors.hpp"

namespace mufix {

bool DlAtom::ground() const {
  return std::all_of(args.begin(), args.end(), [](const DlTerm& t) {
    return t.kind == DlTerm::Kind::Constant;
  });
}

std::string DlAtom::text() const {
  if (args.empty()) return predicate;
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ",";
    out += args[i].name;
  }
  return out + ")";
}

std::string DlRule::text() const {
  std::string out = head.text();
  // head.text() is fine for non-ground atoms too: names print verbatim.
  for (std::size_t i = 0; i < body.size(); ++i)
    out += (i == 0 ? " :- " : ", ") + body[i].text();
  return out + ".";
}

namespace {

struct Cursor {
  std::string_view source;
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool done() const { return offset >= source.size(); }
  char peek() const { return source[offset]; }
  void advance() {
    if (source[offset] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++offset;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message);
  }

  void skip_blank_and_comments() {
    while (!done()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '%') {
        while (!done() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  bool ident_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    if (done() || !std::isalnum(static_cast<unsigned char>(peek())))
      fail("expected an identifier");
    std::string out;
    while (!done() && ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  void expect(char c, const std::string& what) {
    if (done() || peek() != c) fail("expected " + what);
    advance();
  }
};

DlTerm make_term(std::string name) {
  DlTerm::Kind kind = std::isupper(static_cast<unsigned char>(name[0]))
                          ? DlTerm::Kind::Variable
                          : DlTerm::Kind::Constant;
  return DlTerm{kind, std::move(name)};
}

DlAtom parse_atom(Cursor& cur) {
  DlAtom atom;
  atom.predicate = cur.ident();
  cur.skip_blank_and_comments();
  if (!cur.done() && cur.peek() == '(') {
    cur.advance();
    for (;;) {
      cur.skip_blank_and_comments();
      atom.args.push_back(make_term(cur.ident()));
      cur.skip_blank_and_comments();
      if (!cur.done() && cur.peek() == ',') {
        cur.advance();
        continue;
      }
      cur.expect(')', "')' or ',' in the argument list");
      break;
    }
  }
  return atom;
}

void note_atom(const DlAtom& atom, Program& program, const Cursor& cur) {
  auto [it, fresh] =
      program.arities.emplace(atom.predicate, atom.args.size());
  if (!fresh && it->second != atom.args.size())
    throw ArityMismatch("predicate " + atom.predicate + " used with arity " +
                        std::to_string(it->second) + " and " +
                        std::to_string(atom.args.size()) + " (line " +
                        std::to_string(cur.line) + ")");
  for (const DlTerm& t : atom.args)
    if (t.kind == DlTerm::Kind::Constant) {
      auto pos = std::lower_bound(program.constants.begin(),
                                  program.constants.end(), t.name);
      if (pos == program.constants.end() || *pos != t.name)
        program.constants.insert(pos, t.name);
    }
}

void check_range_restricted(const DlRule& rule) {
  std::set<std::string> body_vars;
  for (const DlAtom& atom : rule.body)
    for (const DlTerm& t : atom.args)
      if (t.kind == DlTerm::Kind::Variable) body_vars.insert(t.name);
  for (const DlTerm& t : rule.head.args)
    if (t.kind == DlTerm::Kind::Variable && !body_vars.count(t.name))
      throw UnsafeRule("unsafe rule '" + rule.text() + "': head variable " +
                       t.name + " does not occur in the body");
}

}  // namespace

Program parse_program(std::string_view source) {
  Program program;
  Cursor cur{source};
  for (;;) {
    cur.skip_blank_and_comments();
    if (cur.done()) break;

    DlRule rule;
    rule.head = parse_atom(cur);
    cur.skip_blank_and_comments();
    if (!cur.done() && cur.peek() == ':') {
      cur.advance();
      cur.expect('-', "'-' to finish ':-'");
      for (;;) {
        cur.skip_blank_and_comments();
        rule.body.push_back(parse_atom(cur));
        cur.skip_blank_and_comments();
        if (!cur.done() && cur.peek() == ',') {
          cur.advance();
          continue;
        }
        break;
      }
    }
    cur.expect('.', "'.' at the end of the clause");

    note_atom(rule.head, program, cur);
    for (const DlAtom& atom : rule.body) note_atom(atom, program, cur);
    check_range_restricted(rule);
    program.rules.push_back(std::move(rule));
  }
  return program;
}

namespace {

std::size_t herbrand_base_size(const Program& program) {
  constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  for (const auto& [predicate, arity] : program.arities) {
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (program.constants.empty()) {
        tuples = 0;
        break;
      }
      if (tuples > kSaturated / program.constants.size()) {
        tuples = kSaturated;
        break;
      }
      tuples *= program.constants.size();
    }
    total = total > kSaturated - tuples ? kSaturated : total + tuples;
  }
  return total;
}

void ensure_base_fits(const Program& program, std::size_t cap) {
  std::size_t size = herbrand_base_size(program);
  if (size > cap)
    throw StageExplosion("Herbrand base would have " + std::to_string(size) +
                         " atoms, over the cap of " + std::to_string(cap));
}

// The printed forms are unambiguous because constants and predicates are
// identifiers, so splitting on the punctuation recovers the atom.
DlAtom decode_ground_atom(const std::string& text) {
  DlAtom atom;
  auto open = text.find('(');
  if (open == std::string::npos) {
    atom.predicate = text;
    return atom;
  }
  atom.predicate = text.substr(0, open);
  std::size_t start = open + 1;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] == ',' || text[i] == ')') {
      atom.args.push_back(
          DlTerm{DlTerm::Kind::Constant, text.substr(start, i - start)});
      start = i + 1;
    }
  }
  return atom;
}

using AtomIndex = std::map<std::string, std::vector<DlAtom>>;

AtomIndex index_by_predicate(const FinSet& interpretation) {
  AtomIndex index;
  for (const Elem& e : interpretation) {
    DlAtom atom = decode_ground_atom(e.repr());
    index[atom.predicate].push_back(std::move(atom));
  }
  return index;
}

using Subst = std::map<std::string, std::string>;

bool unify(const DlAtom& pattern, const DlAtom& fact, Subst& subst,
           std::vector<std::string>& undo) {
  if (pattern.args.size() != fact.args.size()) return false;
  std::size_t bound_here = 0;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    const DlTerm& t = pattern.args[i];
    const std::string& value = fact.args[i].name;
    if (t.kind == DlTerm::Kind::Constant) {
      if (t.name == value) continue;
    } else {
      auto [it, fresh] = subst.emplace(t.name, value);
      if (fresh) {
        undo.push_back(t.name);
        ++bound_here;
        continue;
      }
      if (it->second == value) continue;
    }
    // Mismatch: roll back what this call bound.
    for (std::size_t k = 0; k < bound_here; ++k) {
      subst.erase(undo.back());
      undo.pop_back();
    }
    return false;
  }
  return true;
}

std::string substituted_text(const DlAtom& atom, const Subst& subst) {
  if (atom.args.empty()) return atom.predicate;
  std::string out = atom.predicate + "(";
  for (std::size_t i = 0; i < atom.args.size(); ++i) {
    if (i > 0) out += ",";
    const DlTerm& t = atom.args[i];
    out += t.kind == DlTerm::Kind::Constant ? t.name : subst.at(t.name);
  }
  return out + ")";
}

// Matches body atoms left to right, drawing candidates for position i from
// *sources[i]; emits the grounded head for every complete match.
void match_body(const DlRule& rule, std::size_t idx,
                const std::vector<const AtomIndex*>& sources, Subst& subst,
                std::vector<Elem>& out) {
  if (idx == rule.body.size()) {
    out.push_back(Elem::atom(substituted_text(rule.head, subst)));
    return;
  }
  const DlAtom& pattern = rule.body[idx];
  auto candidates = sources[idx]->find(pattern.predicate);
  if (candidates == sources[idx]->end()) return;
  for (const DlAtom& fact : candidates->second) {
    std::vector<std::string> undo;
    if (!unify(pattern, fact, subst, undo)) continue;
    match_body(rule, idx + 1, sources, subst, out);
    for (const std::string& var : undo) subst.erase(var);
  }
}

}  // namespace

FinSet herbrand_base(const Program& program, std::size_t cap) {
  ensure_base_fits(program, cap);
  std::vector<Elem> atoms;
  for (const auto& [predicate, arity] : program.arities) {
    if (arity == 0) {
      atoms.push_back(Elem::atom(predicate));
      continue;
    }
    if (program.constants.empty()) continue;
    std::vector<std::size_t> odometer(arity, 0);
    for (;;) {
      std::string text = predicate + "(";
      for (std::size_t i = 0; i < arity; ++i) {
        if (i > 0) text += ",";
        text += program.constants[odometer[i]];
      }
      atoms.push_back(Elem::atom(text + ")"));

      std::size_t pos = arity;
      bool rolled_over = true;
      while (pos > 0) {
        --pos;
        if (++odometer[pos] < program.constants.size()) {
          rolled_over = false;
          break;
        }
        odometer[pos] = 0;
      }
      if (rolled_over) break;
    }
  }
  return FinSet::of(std::move(atoms));
}

FinSet tp_step(const Program& program, const FinSet& interpretation) {
  AtomIndex index = index_by_predicate(interpretation);
  std::vector<Elem> derived;
  for (const DlRule& rule : program.rules) {
    std::vector<const AtomIndex*> sources(rule.body.size(), &index);
    Subst subst;
    match_body(rule, 0, sources, subst, derived);
  }
  return FinSet::of(std::move(derived));
}

MonotoneOp consequence_operator(const Program& program, std::size_t cap) {
  PowersetLattice lattice(herbrand_base(program, cap));
  return MonotoneOp{
      lattice, [program](const FinSet& i) { return tp_step(program, i); }};
}

ModelResult least_model(const Program& program, std::size_t cap) {
  KleeneResult fixed = kleene_lfp(consequence_operator(program, cap));
  return ModelResult{std::move(fixed.fixed_point), fixed.iterations,
                     std::move(fixed.trace)};
}

FinSet semi_naive(const Program& program, std::size_t cap) {
  ensure_base_fits(program, cap);

  FinSet total = tp_step(program, FinSet());  // just the facts
  FinSet delta = total;
  while (!delta.empty()) {
    AtomIndex total_index = index_by_predicate(total);
    AtomIndex delta_index = index_by_predicate(delta);
    std::vector<Elem> derived;
    for (const DlRule& rule : program.rules) {
      // Every round must use at least one atom from the last delta, so pivot
      // each body position through it in turn.
      for (std::size_t pivot = 0; pivot < rule.body.size(); ++pivot) {
        std::vector<const AtomIndex*> sources(rule.body.size(), &total_index);
        sources[pivot] = &delta_index;
        Subst subst;
        match_body(rule, 0, sources, subst, derived);
      }
    }
    delta = set_difference(FinSet::of(std::move(derived)), total);
    total = set_union(total, delta);
  }
  return total;
}

}  // namespace mufix
