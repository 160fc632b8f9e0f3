#ifndef MUFIX_FUNCTOR_HPP
#define MUFIX_FUNCTOR_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mufix/finset.hpp"

namespace mufix {

// Polynomial set functor built from 0, 1, named constant sets, the identity
// X, and binary sums/products. Immutable; copies share nodes. Structural
// equality ignores constant-set names and compares the sets themselves.
class FunctorExpr {
 public:
  enum class Kind { Zero, One, Const, Id, Sum, Prod };

  static FunctorExpr zero();
  static FunctorExpr one();
  static FunctorExpr id();
  static FunctorExpr constant(std::string name, FinSet values);
  static FunctorExpr sum(const FunctorExpr& lhs, const FunctorExpr& rhs);
  static FunctorExpr prod(const FunctorExpr& lhs, const FunctorExpr& rhs);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // Const only.
  const std::string& const_name() const;
  const FinSet& const_values() const;
  // Sum and Prod only.
  FunctorExpr lhs() const;
  FunctorExpr rhs() const;

  bool operator==(const FunctorExpr& other) const;

  // Renders with the grammar the parser accepts: * binds tighter than +,
  // constant sets print their names.
  std::string to_string() const;

 private:
  struct Node;
  explicit FunctorExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Action on a set: 0 -> {}, 1 -> {*}, K -> K, X -> x, sums are tagged with
// L/R, products are pairs.
FinSet apply_obj(const FunctorExpr& f, const FinSet& x);

// |apply_obj(f, x)| for |x| = n, without materializing anything. Saturates
// instead of overflowing, so comparisons against any realistic cap stay
// meaningful.
std::size_t apply_obj_size(const FunctorExpr& f, std::size_t n);

// Action on a function: rewrites every Id position through fn. The result
// has domain apply_obj(f, fn.domain()) and codomain apply_obj(f, fn.codomain()).
FinFn apply_mor(const FunctorExpr& f, const FinFn& fn);

// Rewrites the Id positions of one element of apply_obj(f, X) through at_id.
// Throws MalformedTerm when the element does not have the shape f dictates.
Elem map_layer(const FunctorExpr& f, const Elem& e,
               const std::function<Elem(const Elem&)>& at_id);

struct LawViolation {
  enum class Law { Identity, Composition };
  Law law;
  std::string detail;
};

struct LawReport {
  std::size_t identity_checks = 0;
  std::size_t composition_checks = 0;
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks apply_mor(f, id_X) == id_{apply_obj(f,X)} on each set, and
// apply_mor(f, g . h) == apply_mor(f, g) . apply_mor(f, h) on each
// composable pair.
LawReport check_functor_laws(
    const FunctorExpr& f, const std::vector<FinSet>& identity_samples,
    const std::vector<std::pair<FinFn, FinFn>>& composition_samples);

// An f-algebra: structure : apply_obj(f, carrier) -> carrier. Validated at
// construction.
class Algebra {
 public:
  Algebra(FunctorExpr functor, FinSet carrier, FinFn structure);

  const FunctorExpr& functor() const { return functor_; }
  const FinSet& carrier() const { return carrier_; }
  const FinFn& structure() const { return structure_; }

 private:
  FunctorExpr functor_;
  FinSet carrier_;
  FinFn structure_;
};

}  // namespace mufix

#endif
