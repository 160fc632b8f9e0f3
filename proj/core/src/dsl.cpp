#include "mufix/dsl.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "mufix/errors.hpp"

namespace mufix {

namespace {

bool ident_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}
bool ident_char(char c) { return ident_start(c) || c == '_'; }

// Single-line scanner; parse errors carry the 1-based line they came from.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(line_no) + ": " + message);
  }

  void skip_spaces() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_spaces();
    return pos >= text.size();
  }
  char peek() {
    skip_spaces();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!eat(c)) fail("expected " + what);
  }
  std::string ident() {
    skip_spaces();
    if (pos >= text.size() || !ident_start(text[pos]))
      fail("expected an identifier");
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

// expr := term ('+' term)* ; term := factor ('*' factor)*
// factor := '0' | '1' | 'X' | set name | '(' expr ')'
FunctorExpr parse_expr(Cursor& cur, const std::map<std::string, FinSet>& sets);

FunctorExpr parse_factor(Cursor& cur,
                         const std::map<std::string, FinSet>& sets) {
  if (cur.eat('(')) {
    FunctorExpr inner = parse_expr(cur, sets);
    cur.expect(')', "')'");
    return inner;
  }
  char c = cur.peek();
  if (c == '0') {
    ++cur.pos;
    return FunctorExpr::zero();
  }
  if (c == '1') {
    ++cur.pos;
    return FunctorExpr::one();
  }
  std::string name = cur.ident();
  if (name == "X") return FunctorExpr::id();
  auto it = sets.find(name);
  if (it == sets.end()) cur.fail("unknown constant set " + name);
  return FunctorExpr::constant(name, it->second);
}

FunctorExpr parse_term(Cursor& cur, const std::map<std::string, FinSet>& sets) {
  FunctorExpr left = parse_factor(cur, sets);
  while (cur.eat('*')) left = FunctorExpr::prod(left, parse_factor(cur, sets));
  return left;
}

FunctorExpr parse_expr(Cursor& cur, const std::map<std::string, FinSet>& sets) {
  FunctorExpr left = parse_term(cur, sets);
  while (cur.eat('+')) left = FunctorExpr::sum(left, parse_term(cur, sets));
  return left;
}

FinSet parse_set_literal(Cursor& cur) {
  cur.expect('{', "'{'");
  std::vector<Elem> atoms;
  if (!cur.eat('}')) {
    for (;;) {
      atoms.push_back(Elem::atom(cur.ident()));
      if (cur.eat(',')) continue;
      cur.expect('}', "'}' or ',' in the set");
      break;
    }
  }
  return FinSet::of(std::move(atoms));
}

Elem parse_elem_inner(Cursor& cur) {
  if (cur.eat('*')) return Elem::unit();
  if (cur.peek() == '(') {
    ++cur.pos;
    Elem first = parse_elem_inner(cur);
    cur.expect(',', "',' between the pair's parts");
    Elem second = parse_elem_inner(cur);
    cur.expect(')', "')'");
    return Elem::pair(first, second);
  }
  std::string name = cur.ident();
  // L, R and in are only tags when a '(' follows; otherwise plain atoms.
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '(' &&
      (name == "L" || name == "R" || name == "in")) {
    ++cur.pos;
    Elem inner = parse_elem_inner(cur);
    cur.expect(')', "')'");
    if (name == "L") return Elem::inl(inner);
    if (name == "R") return Elem::inr(inner);
    return Elem::in(inner);
  }
  return Elem::atom(name);
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return std::string(line);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::pair<std::size_t, std::string>> content_lines(
    std::string_view source) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= source.size()) {
    auto end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string line = strip_comment(source.substr(start, end - start));
    if (!blank(line)) lines.emplace_back(line_no, std::move(line));
    start = end + 1;
    ++line_no;
  }
  return lines;
}

}  // namespace

FunctorFile parse_functor_file(std::string_view source) {
  std::map<std::string, FinSet> sets;
  std::optional<FunctorExpr> functor;

  for (auto& [line_no, line] : content_lines(source)) {
    Cursor cur{line, 0, line_no};
    std::string name = cur.ident();
    cur.expect('=', "'=' after the name");
    if (name == "F") {
      if (functor) cur.fail("F is already defined");
      functor = parse_expr(cur, sets);
    } else {
      if (name == "X") cur.fail("X names the identity functor, not a set");
      if (cur.peek() != '{')
        cur.fail("a set literal must follow; only F takes an expression");
      if (sets.count(name)) cur.fail("set " + name + " is already defined");
      sets.emplace(name, parse_set_literal(cur));
    }
    if (!cur.done()) cur.fail("trailing input after the definition");
  }

  if (!functor) throw ParseError("the file never defines F");
  return FunctorFile{std::move(sets), *std::move(functor)};
}

FunctorExpr parse_functor_expr(std::string_view source,
                               const std::map<std::string, FinSet>& sets) {
  Cursor cur{source, 0, 1};
  FunctorExpr expr = parse_expr(cur, sets);
  if (!cur.done()) cur.fail("trailing input after the expression");
  return expr;
}

Elem parse_elem(std::string_view source) {
  Cursor cur{source, 0, 1};
  Elem elem = parse_elem_inner(cur);
  if (!cur.done()) cur.fail("trailing input after the element");
  return elem;
}

namespace {

std::string join_reprs(const FinSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += s.at(i).repr();
  }
  return out;
}

}  // namespace

Algebra parse_algebra_file(std::string_view source, const FunctorExpr& functor,
                           const std::map<std::string, FinSet>& sets) {
  std::optional<FinSet> carrier;
  std::vector<std::tuple<std::size_t, Elem, Elem>> entries;

  for (auto& [line_no, line] : content_lines(source)) {
    auto arrow = line.find("->");
    if (arrow != std::string::npos) {
      Cursor lhs{std::string_view(line).substr(0, arrow), 0, line_no};
      Cursor rhs{std::string_view(line).substr(arrow + 2), 0, line_no};
      Elem from = parse_elem_inner(lhs);
      if (!lhs.done()) lhs.fail("trailing input before '->'");
      Elem to = parse_elem_inner(rhs);
      if (!rhs.done()) rhs.fail("trailing input after the image");
      entries.emplace_back(line_no, std::move(from), std::move(to));
      continue;
    }

    Cursor cur{line, 0, line_no};
    std::string name = cur.ident();
    cur.expect('=', "'=' after the name");
    if (name == "carrier") {
      if (carrier) cur.fail("carrier is already defined");
      carrier = parse_set_literal(cur);
    } else if (name == "functor") {
      FunctorExpr declared = parse_expr(cur, sets);
      if (!(declared == functor))
        throw AlgebraMalformed(
            "line " + std::to_string(line_no) + ": the file says functor " +
            declared.to_string() + " but the fold runs over " +
            functor.to_string());
    } else {
      cur.fail("expected carrier, functor or an 'element -> element' line");
    }
    if (!cur.done()) cur.fail("trailing input after the definition");
  }

  if (!carrier) throw AlgebraMalformed("the file never defines the carrier");
  FinSet expected = apply_obj(functor, *carrier);
  std::string domain_note = "; expected domain: " + join_reprs(expected);

  std::vector<std::optional<Elem>> images(expected.size());
  for (auto& [line_no, from, to] : entries) {
    auto slot = expected.index_of(from);
    if (!slot)
      throw AlgebraMalformed("line " + std::to_string(line_no) + ": " +
                             from.repr() + " is not a domain element" +
                             domain_note);
    if (images[*slot])
      throw AlgebraMalformed("line " + std::to_string(line_no) +
                             ": duplicate assignment for " + from.repr() +
                             domain_note);
    if (!carrier->contains(to))
      throw AlgebraMalformed("line " + std::to_string(line_no) + ": image " +
                             to.repr() + " is outside the carrier");
    images[*slot] = std::move(to);
  }

  std::vector<std::pair<Elem, Elem>> assignments;
  assignments.reserve(expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!images[i])
      throw AlgebraMalformed("missing assignment for " +
                             expected.at(i).repr() + domain_note);
    assignments.emplace_back(expected.at(i), *std::move(images[i]));
  }

  return Algebra(functor, *carrier,
                 FinFn::from_pairs(expected, *carrier, assignments));
}

}  // namespace mufix
