#include "mufix/finset.hpp"

#include <algorithm>
#include <stdexcept>

#include "mufix/errors.hpp"

namespace mufix {

FinSet FinSet::of(std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  FinSet s;
  s.elems_ = std::move(elems);
  return s;
}

bool FinSet::contains(const Elem& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::optional<std::size_t> FinSet::index_of(const Elem& e) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
  if (it == elems_.end() || !(*it == e)) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

bool is_subset(const FinSet& inner, const FinSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<Elem> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(merged));
  return FinSet::of(std::move(merged));
}

FinSet set_difference(const FinSet& a, const FinSet& b) {
  std::vector<Elem> rest;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(rest));
  return FinSet::of(std::move(rest));
}

FinFn FinFn::from_pairs(FinSet domain, FinSet codomain,
                        const std::vector<std::pair<Elem, Elem>>& assignments) {
  std::vector<std::optional<Elem>> slots(domain.size());
  for (const auto& [key, value] : assignments) {
    auto index = domain.index_of(key);
    if (!index)
      throw std::invalid_argument("assignment for " + key.repr() +
                                  " which is not in the domain");
    if (slots[*index])
      throw std::invalid_argument("duplicate assignment for " + key.repr());
    if (!codomain.contains(value))
      throw std::invalid_argument("value " + value.repr() +
                                  " is not in the codomain");
    slots[*index] = value;
  }
  std::vector<Elem> values;
  values.reserve(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (!slots[i])
      throw std::invalid_argument("no assignment for " + domain.at(i).repr());
    values.push_back(*std::move(slots[i]));
  }
  return FinFn(std::move(domain), std::move(codomain), std::move(values));
}

FinFn FinFn::from_fn(FinSet domain, FinSet codomain,
                     const std::function<Elem(const Elem&)>& fn) {
  std::vector<Elem> values;
  values.reserve(domain.size());
  for (const Elem& x : domain) {
    Elem y = fn(x);
    if (!codomain.contains(y))
      throw std::invalid_argument("value " + y.repr() + " for " + x.repr() +
                                  " is not in the codomain");
    values.push_back(std::move(y));
  }
  return FinFn(std::move(domain), std::move(codomain), std::move(values));
}

const Elem& FinFn::operator()(const Elem& x) const {
  auto index = domain_.index_of(x);
  if (!index)
    throw DomainMismatch("element " + x.repr() + " is not in the domain");
  return values_[*index];
}

FinFn identity_fn(const FinSet& x) {
  return FinFn::from_fn(x, x, [](const Elem& e) { return e; });
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (!(f.codomain() == g.domain()))
    throw DomainMismatch(
        "compose: codomain of the inner function differs from the domain "
        "of the outer one");
  return FinFn::from_fn(f.domain(), g.codomain(),
                        [&](const Elem& x) { return g(f(x)); });
}

bool is_bijection(const FinFn& f) {
  if (f.domain().size() != f.codomain().size()) return false;
  std::vector<Elem> image;
  image.reserve(f.domain().size());
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    image.push_back(f.value_at(i));
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    return false;  // not injective
  return FinSet::of(std::move(image)) == f.codomain();
}

FinFn inverse(const FinFn& f) {
  if (!is_bijection(f))
    throw NotAnIso("inverse requested for a function that is not a bijection");
  std::vector<std::pair<Elem, Elem>> flipped;
  flipped.reserve(f.domain().size());
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    flipped.emplace_back(f.value_at(i), f.domain().at(i));
  return FinFn::from_pairs(f.codomain(), f.domain(), flipped);
}

Iso::Iso(FinFn forward, FinFn backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  if (!(compose(backward_, forward_) == identity_fn(forward_.domain())) ||
      !(compose(forward_, backward_) == identity_fn(backward_.domain())))
    throw NotAnIso("the two maps are not mutually inverse");
}

Iso Iso::from_forward(const FinFn& forward) {
  return Iso(forward, inverse(forward));
}

std::vector<FinFn> all_functions(const FinSet& domain, const FinSet& codomain,
                                 std::size_t cap) {
  if (domain.empty()) {
    return {FinFn::from_pairs(domain, codomain, {})};
  }
  if (codomain.empty()) return {};  // no total function into the empty set

  std::size_t count = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (count > cap / codomain.size())
      throw EnumerationTooLarge("more than " + std::to_string(cap) +
                                " functions to enumerate");
    count *= codomain.size();
  }

  std::vector<FinFn> out;
  out.reserve(count);
  std::vector<std::size_t> odometer(domain.size(), 0);
  for (;;) {
    std::vector<std::pair<Elem, Elem>> assignment;
    assignment.reserve(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i)
      assignment.emplace_back(domain.at(i), codomain.at(odometer[i]));
    out.push_back(FinFn::from_pairs(domain, codomain, assignment));

    std::size_t pos = domain.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < codomain.size()) break;
      odometer[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace mufix
