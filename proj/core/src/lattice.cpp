#include "mufix/lattice.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "mufix/errors.hpp"

namespace mufix {

namespace {

std::string show(const FinSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += s.at(i).repr();
  }
  return out + "}";
}

FinSet from_mask(const FinSet& universe, std::uint64_t mask) {
  std::vector<Elem> members;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) members.push_back(universe.at(i));
  return FinSet::of(std::move(members));
}

FinSet checked_step(const MonotoneOp& op, const FinSet& point) {
  FinSet next = op.step(point);
  if (!op.lattice.valid_point(next))
    throw std::invalid_argument("step left the lattice universe");
  return next;
}

}  // namespace

std::vector<FinSet> PowersetLattice::all_subsets(std::size_t cap) const {
  if (universe_.size() > cap || universe_.size() >= 64)
    throw EnumerationTooLarge("universe of " +
                              std::to_string(universe_.size()) +
                              " elements has too many subsets (cap " +
                              std::to_string(cap) + ")");
  std::vector<FinSet> subsets;
  std::uint64_t total = std::uint64_t{1} << universe_.size();
  subsets.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    subsets.push_back(from_mask(universe_, mask));
  return subsets;
}

KleeneResult kleene_lfp(const MonotoneOp& op) {
  KleeneResult result{FinSet(), 0, {FinSet()}};
  for (;;) {
    const FinSet& current = result.trace.back();
    FinSet next = checked_step(op, current);
    if (next == current) {
      // Assign before the push_back: current points into the trace vector
      // and would dangle once it reallocates.
      result.fixed_point = current;
      result.trace.push_back(std::move(next));
      return result;
    }
    if (!is_subset(current, next))
      throw NotAscending("step dropped elements going from " + show(current) +
                         " to " + show(next));
    result.trace.push_back(std::move(next));
    ++result.iterations;
  }
}

bool check_fixed(const MonotoneOp& op, const FinSet& candidate) {
  return checked_step(op, candidate) == candidate;
}

MonotoneReport check_monotone(const MonotoneOp& op,
                              std::size_t exhaustive_cap, std::size_t samples,
                              std::uint64_t seed) {
  MonotoneReport report;
  const FinSet& universe = op.lattice.universe();

  if (universe.size() <= exhaustive_cap && universe.size() < 64) {
    report.exhaustive = true;
    // One step evaluation per subset, then pair comparisons on cached masks.
    std::uint64_t total = std::uint64_t{1} << universe.size();
    std::vector<std::uint64_t> stepped(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      FinSet image = checked_step(op, from_mask(universe, mask));
      std::uint64_t image_mask = 0;
      for (const Elem& e : image)
        image_mask |= std::uint64_t{1} << *universe.index_of(e);
      stepped[mask] = image_mask;
    }
    for (std::uint64_t outer = 0; outer < total; ++outer) {
      // Walks the strict submasks of outer, then the pair (0, outer).
      for (std::uint64_t inner = (outer - 1) & outer;;
           inner = (inner - 1) & outer) {
        ++report.pairs_checked;
        if ((stepped[inner] & ~stepped[outer]) != 0)
          report.violations.push_back(
              {from_mask(universe, inner), from_mask(universe, outer)});
        if (inner == 0) break;
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<Elem> outer_members;
    std::vector<Elem> inner_members;
    for (const Elem& e : universe) {
      std::uint64_t bits = rng();
      if (bits & 1) {
        outer_members.push_back(e);
        if (bits & 2) inner_members.push_back(e);
      }
    }
    FinSet outer = FinSet::of(std::move(outer_members));
    FinSet inner = FinSet::of(std::move(inner_members));
    ++report.pairs_checked;
    if (!is_subset(checked_step(op, inner), checked_step(op, outer)))
      report.violations.push_back({std::move(inner), std::move(outer)});
  }
  return report;
}

LeastReport check_least(const MonotoneOp& op, const FinSet& candidate,
                        std::size_t cap) {
  LeastReport report;
  report.candidate_fixed = check_fixed(op, candidate);
  for (FinSet& subset : op.lattice.all_subsets(cap)) {
    ++report.subsets_checked;
    if (checked_step(op, subset) == subset) {
      if (!is_subset(candidate, subset)) report.not_above.push_back(subset);
      report.fixed_points.push_back(std::move(subset));
    }
  }
  return report;
}

}  // namespace mufix
