#ifndef MUFIX_ELEM_HPP
#define MUFIX_ELEM_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <string>

namespace mufix {

// One element of a finite set. Elements are immutable trees; copies share
// nodes. The canonical serialization is computed once at construction and
// doubles as the ordering key, so two elements are equal exactly when they
// print the same:
//
//   *          unit
//   name       atom (name taken verbatim; parsers restrict it to identifiers)
//   L(t) R(t)  left/right injection into a tagged sum
//   (t,u)      pair
//   in(t)      structure wrap of a term
class Elem {
 public:
  enum class Kind { Unit, Atom, Inl, Inr, Pair, In };

  static Elem unit();
  static Elem atom(std::string name);
  static Elem inl(const Elem& inner);
  static Elem inr(const Elem& inner);
  static Elem pair(const Elem& first, const Elem& second);
  static Elem in(const Elem& inner);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // Atom only.
  const std::string& atom_name() const;
  // Inl, Inr and In only.
  Elem child() const;
  // Pair only.
  Elem first() const;
  Elem second() const;

  const std::string& repr() const;

  bool operator==(const Elem& other) const { return repr() == other.repr(); }
  std::strong_ordering operator<=>(const Elem& other) const {
    return repr() <=> other.repr();
  }

 private:
  struct Node;
  explicit Elem(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace mufix

#endif
