#include "mufix/functor.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "mufix/errors.hpp"

namespace mufix {

struct FunctorExpr::Node {
  Kind kind;
  std::string name;  // Const only
  FinSet values;     // Const only
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

FunctorExpr FunctorExpr::zero() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::Zero, "", FinSet(), nullptr, nullptr});
  return FunctorExpr(node);
}

FunctorExpr FunctorExpr::one() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::One, "", FinSet(), nullptr, nullptr});
  return FunctorExpr(node);
}

FunctorExpr FunctorExpr::id() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::Id, "", FinSet(), nullptr, nullptr});
  return FunctorExpr(node);
}

FunctorExpr FunctorExpr::constant(std::string name, FinSet values) {
  if (name.empty())
    throw std::invalid_argument("constant set needs a name");
  return FunctorExpr(std::make_shared<const Node>(
      Node{Kind::Const, std::move(name), std::move(values), nullptr, nullptr}));
}

FunctorExpr FunctorExpr::sum(const FunctorExpr& lhs, const FunctorExpr& rhs) {
  return FunctorExpr(std::make_shared<const Node>(
      Node{Kind::Sum, "", FinSet(), lhs.node_, rhs.node_}));
}

FunctorExpr FunctorExpr::prod(const FunctorExpr& lhs, const FunctorExpr& rhs) {
  return FunctorExpr(std::make_shared<const Node>(
      Node{Kind::Prod, "", FinSet(), lhs.node_, rhs.node_}));
}

FunctorExpr::Kind FunctorExpr::kind() const { return node_->kind; }

const std::string& FunctorExpr::const_name() const {
  if (kind() != Kind::Const)
    throw std::logic_error("const_name on " + to_string());
  return node_->name;
}

const FinSet& FunctorExpr::const_values() const {
  if (kind() != Kind::Const)
    throw std::logic_error("const_values on " + to_string());
  return node_->values;
}

FunctorExpr FunctorExpr::lhs() const {
  if (kind() != Kind::Sum && kind() != Kind::Prod)
    throw std::logic_error("lhs on " + to_string());
  return FunctorExpr(node_->lhs);
}

FunctorExpr FunctorExpr::rhs() const {
  if (kind() != Kind::Sum && kind() != Kind::Prod)
    throw std::logic_error("rhs on " + to_string());
  return FunctorExpr(node_->rhs);
}

bool FunctorExpr::operator==(const FunctorExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Id:
      return true;
    case Kind::Const:
      return const_values() == other.const_values();
    case Kind::Sum:
    case Kind::Prod:
      return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

namespace {

// + is 0, * is 1; higher binds tighter, leaves never need parens.
int precedence(FunctorExpr::Kind kind) {
  switch (kind) {
    case FunctorExpr::Kind::Sum:
      return 0;
    case FunctorExpr::Kind::Prod:
      return 1;
    default:
      return 2;
  }
}

void render(const FunctorExpr& f, int context, std::string& out) {
  int mine = precedence(f.kind());
  bool parens = mine < context;
  if (parens) out += '(';
  switch (f.kind()) {
    case FunctorExpr::Kind::Zero:
      out += '0';
      break;
    case FunctorExpr::Kind::One:
      out += '1';
      break;
    case FunctorExpr::Kind::Id:
      out += 'X';
      break;
    case FunctorExpr::Kind::Const:
      out += f.const_name();
      break;
    case FunctorExpr::Kind::Sum:
      render(f.lhs(), 0, out);
      out += " + ";
      render(f.rhs(), 1, out);
      break;
    case FunctorExpr::Kind::Prod:
      render(f.lhs(), 1, out);
      out += " * ";
      render(f.rhs(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string FunctorExpr::to_string() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

FinSet apply_obj(const FunctorExpr& f, const FinSet& x) {
  switch (f.kind()) {
    case FunctorExpr::Kind::Zero:
      return FinSet();
    case FunctorExpr::Kind::One:
      return FinSet::of({Elem::unit()});
    case FunctorExpr::Kind::Const:
      return f.const_values();
    case FunctorExpr::Kind::Id:
      return x;
    case FunctorExpr::Kind::Sum: {
      std::vector<Elem> tagged;
      FinSet left = apply_obj(f.lhs(), x);
      FinSet right = apply_obj(f.rhs(), x);
      tagged.reserve(left.size() + right.size());
      for (const Elem& e : left) tagged.push_back(Elem::inl(e));
      for (const Elem& e : right) tagged.push_back(Elem::inr(e));
      return FinSet::of(std::move(tagged));
    }
    case FunctorExpr::Kind::Prod: {
      FinSet left = apply_obj(f.lhs(), x);
      FinSet right = apply_obj(f.rhs(), x);
      std::vector<Elem> pairs;
      pairs.reserve(left.size() * right.size());
      for (const Elem& a : left)
        for (const Elem& b : right) pairs.push_back(Elem::pair(a, b));
      return FinSet::of(std::move(pairs));
    }
  }
  throw std::logic_error("unhandled functor kind");
}

std::size_t apply_obj_size(const FunctorExpr& f, std::size_t n) {
  constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();
  switch (f.kind()) {
    case FunctorExpr::Kind::Zero:
      return 0;
    case FunctorExpr::Kind::One:
      return 1;
    case FunctorExpr::Kind::Const:
      return f.const_values().size();
    case FunctorExpr::Kind::Id:
      return n;
    case FunctorExpr::Kind::Sum: {
      std::size_t a = apply_obj_size(f.lhs(), n);
      std::size_t b = apply_obj_size(f.rhs(), n);
      return a > kSaturated - b ? kSaturated : a + b;
    }
    case FunctorExpr::Kind::Prod: {
      std::size_t a = apply_obj_size(f.lhs(), n);
      std::size_t b = apply_obj_size(f.rhs(), n);
      if (a == 0 || b == 0) return 0;
      return a > kSaturated / b ? kSaturated : a * b;
    }
  }
  throw std::logic_error("unhandled functor kind");
}

Elem map_layer(const FunctorExpr& f, const Elem& e,
               const std::function<Elem(const Elem&)>& at_id) {
  switch (f.kind()) {
    case FunctorExpr::Kind::Zero:
      throw MalformedTerm("no element fits the empty functor, got " +
                          e.repr());
    case FunctorExpr::Kind::One:
      if (!e.is(Elem::Kind::Unit))
        throw MalformedTerm("expected * where the functor is 1, got " +
                            e.repr());
      return e;
    case FunctorExpr::Kind::Const:
      if (!f.const_values().contains(e))
        throw MalformedTerm("element " + e.repr() +
                            " is not in the constant set " + f.const_name());
      return e;
    case FunctorExpr::Kind::Id:
      return at_id(e);
    case FunctorExpr::Kind::Sum:
      if (e.is(Elem::Kind::Inl))
        return Elem::inl(map_layer(f.lhs(), e.child(), at_id));
      if (e.is(Elem::Kind::Inr))
        return Elem::inr(map_layer(f.rhs(), e.child(), at_id));
      throw MalformedTerm("expected a tagged element for a sum, got " +
                          e.repr());
    case FunctorExpr::Kind::Prod:
      if (!e.is(Elem::Kind::Pair))
        throw MalformedTerm("expected a pair for a product, got " + e.repr());
      return Elem::pair(map_layer(f.lhs(), e.first(), at_id),
                        map_layer(f.rhs(), e.second(), at_id));
  }
  throw std::logic_error("unhandled functor kind");
}

FinFn apply_mor(const FunctorExpr& f, const FinFn& fn) {
  FinSet domain = apply_obj(f, fn.domain());
  FinSet codomain = apply_obj(f, fn.codomain());
  return FinFn::from_fn(domain, codomain, [&](const Elem& e) {
    return map_layer(f, e, [&](const Elem& x) { return fn(x); });
  });
}

LawReport check_functor_laws(
    const FunctorExpr& f, const std::vector<FinSet>& identity_samples,
    const std::vector<std::pair<FinFn, FinFn>>& composition_samples) {
  LawReport report;
  for (const FinSet& x : identity_samples) {
    ++report.identity_checks;
    if (!(apply_mor(f, identity_fn(x)) == identity_fn(apply_obj(f, x)))) {
      report.violations.push_back(
          {LawViolation::Law::Identity,
           "identity law fails on a set of size " + std::to_string(x.size())});
    }
  }
  for (const auto& [g, h] : composition_samples) {
    ++report.composition_checks;
    FinFn lifted_whole = apply_mor(f, compose(g, h));
    FinFn composed_lifts = compose(apply_mor(f, g), apply_mor(f, h));
    if (!(lifted_whole == composed_lifts)) {
      report.violations.push_back(
          {LawViolation::Law::Composition,
           "composition law fails for a pair through a middle set of size " +
               std::to_string(h.codomain().size())});
    }
  }
  return report;
}

Algebra::Algebra(FunctorExpr functor, FinSet carrier, FinFn structure)
    : functor_(std::move(functor)),
      carrier_(std::move(carrier)),
      structure_(std::move(structure)) {
  if (!(structure_.domain() == apply_obj(functor_, carrier_)))
    throw std::invalid_argument(
        "algebra structure map domain is not the functor applied to the "
        "carrier");
  if (!(structure_.codomain() == carrier_))
    throw std::invalid_argument(
        "algebra structure map codomain is not the carrier");
}

}  // namespace mufix
