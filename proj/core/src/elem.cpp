#include "mufix/elem.hpp"

#include <stdexcept>
#include <utility>

namespace mufix {

struct Elem::Node {
  Kind kind;
  std::string name;  // Atom only
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;  // Pair only
  std::string repr;
};

Elem Elem::unit() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::Unit, "", nullptr, nullptr, "*"});
  return Elem(node);
}

Elem Elem::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  std::string repr = name;
  return Elem(std::make_shared<const Node>(
      Node{Kind::Atom, std::move(name), nullptr, nullptr, std::move(repr)}));
}

Elem Elem::inl(const Elem& inner) {
  return Elem(std::make_shared<const Node>(Node{
      Kind::Inl, "", inner.node_, nullptr, "L(" + inner.repr() + ")"}));
}

Elem Elem::inr(const Elem& inner) {
  return Elem(std::make_shared<const Node>(Node{
      Kind::Inr, "", inner.node_, nullptr, "R(" + inner.repr() + ")"}));
}

Elem Elem::pair(const Elem& first, const Elem& second) {
  return Elem(std::make_shared<const Node>(
      Node{Kind::Pair, "", first.node_, second.node_,
           "(" + first.repr() + "," + second.repr() + ")"}));
}

Elem Elem::in(const Elem& inner) {
  return Elem(std::make_shared<const Node>(
      Node{Kind::In, "", inner.node_, nullptr, "in(" + inner.repr() + ")"}));
}

Elem::Kind Elem::kind() const { return node_->kind; }

const std::string& Elem::atom_name() const {
  if (kind() != Kind::Atom) throw std::logic_error("not an atom: " + repr());
  return node_->name;
}

Elem Elem::child() const {
  switch (kind()) {
    case Kind::Inl:
    case Kind::Inr:
    case Kind::In:
      return Elem(node_->a);
    default:
      throw std::logic_error("no child in " + repr());
  }
}

Elem Elem::first() const {
  if (kind() != Kind::Pair) throw std::logic_error("not a pair: " + repr());
  return Elem(node_->a);
}

Elem Elem::second() const {
  if (kind() != Kind::Pair) throw std::logic_error("not a pair: " + repr());
  return Elem(node_->b);
}

const std::string& Elem::repr() const { return node_->repr; }

}  // namespace mufix
