#ifndef MUFIX_FINSET_HPP
#define MUFIX_FINSET_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mufix/elem.hpp"

namespace mufix {

inline constexpr std::size_t kDefaultCardinalityCap = 100000;

// Finite set of elements, kept sorted by canonical serialization and
// duplicate-free. Equality is literal set equality.
class FinSet {
 public:
  FinSet() = default;
  static FinSet of(std::vector<Elem> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Elem& at(std::size_t i) const { return elems_.at(i); }
  bool contains(const Elem& e) const;
  std::optional<std::size_t> index_of(const Elem& e) const;

  std::vector<Elem>::const_iterator begin() const { return elems_.begin(); }
  std::vector<Elem>::const_iterator end() const { return elems_.end(); }

  bool operator==(const FinSet& other) const { return elems_ == other.elems_; }

 private:
  std::vector<Elem> elems_;
};

bool is_subset(const FinSet& inner, const FinSet& outer);
FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_difference(const FinSet& a, const FinSet& b);

// Total function between finite sets; images are stored aligned with the
// domain's order, so the mapping itself is canonical too.
class FinFn {
 public:
  // Every domain element must be assigned exactly once and every image must
  // lie in the codomain; violations are programming errors here (the file
  // parsers report friendlier diagnostics before building a FinFn).
  static FinFn from_pairs(FinSet domain, FinSet codomain,
                          const std::vector<std::pair<Elem, Elem>>& assignments);
  static FinFn from_fn(FinSet domain, FinSet codomain,
                       const std::function<Elem(const Elem&)>& fn);

  const FinSet& domain() const { return domain_; }
  const FinSet& codomain() const { return codomain_; }

  // Applies the function; the argument must be in the domain.
  const Elem& operator()(const Elem& x) const;
  const Elem& value_at(std::size_t domain_index) const {
    return values_.at(domain_index);
  }

  bool operator==(const FinFn& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ &&
           values_ == other.values_;
  }

 private:
  FinFn(FinSet domain, FinSet codomain, std::vector<Elem> values)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        values_(std::move(values)) {}

  FinSet domain_;
  FinSet codomain_;
  std::vector<Elem> values_;
};

FinFn identity_fn(const FinSet& x);

// compose(g, f) = g after f. Throws DomainMismatch unless
// f.codomain() == g.domain().
FinFn compose(const FinFn& g, const FinFn& f);

bool is_bijection(const FinFn& f);

// Throws NotAnIso when f is not a bijection.
FinFn inverse(const FinFn& f);

// Bijection packaged with its inverse; both composites are checked at
// construction.
class Iso {
 public:
  Iso(FinFn forward, FinFn backward);
  static Iso from_forward(const FinFn& forward);

  const FinFn& forward() const { return forward_; }
  const FinFn& backward() const { return backward_; }

 private:
  FinFn forward_;
  FinFn backward_;
};

// All total functions domain -> codomain in canonical order (images advance
// like an odometer over the codomain). Throws EnumerationTooLarge when
// |codomain|^|domain| exceeds cap.
std::vector<FinFn> all_functions(const FinSet& domain, const FinSet& codomain,
                                 std::size_t cap = kDefaultCardinalityCap);

}  // namespace mufix

#endif
