#ifndef MUFIX_LATTICE_HPP
#define MUFIX_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mufix/finset.hpp"

namespace mufix {

// 2^n subset enumeration is only attempted for universes up to this size.
inline constexpr std::size_t kDefaultExhaustiveCap = 12;

// The powerset of a fixed universe, ordered by inclusion. Points are plain
// FinSets that must stay inside the universe.
class PowersetLattice {
 public:
  explicit PowersetLattice(FinSet universe) : universe_(std::move(universe)) {}

  const FinSet& universe() const { return universe_; }
  bool valid_point(const FinSet& point) const {
    return is_subset(point, universe_);
  }

  // All subsets, in mask order over the universe's element order. Throws
  // EnumerationTooLarge when the universe is bigger than cap.
  std::vector<FinSet> all_subsets(
      std::size_t cap = kDefaultExhaustiveCap) const;

 private:
  FinSet universe_;
};

// A step function on the lattice, expected to be monotone but checkable when
// it is not known to be.
struct MonotoneOp {
  PowersetLattice lattice;
  std::function<FinSet(const FinSet&)> step;
};

struct KleeneResult {
  FinSet fixed_point;
  std::size_t iterations;       // productive steps, i.e. strict growths
  std::vector<FinSet> trace;    // starts at {} and ends with the repeated set
};

// Iterates step from the empty set until the value repeats. Throws
// NotAscending (with the offending pair in the message) as soon as one step
// fails to contain the previous value, which a monotone operator never does.
KleeneResult kleene_lfp(const MonotoneOp& op);

bool check_fixed(const MonotoneOp& op, const FinSet& candidate);

struct MonotoneViolation {
  FinSet smaller;
  FinSet larger;  // includes smaller, yet step(smaller) is not in step(larger)
};

struct MonotoneReport {
  bool exhaustive = false;
  std::size_t pairs_checked = 0;
  std::vector<MonotoneViolation> violations;
  bool monotone() const { return violations.empty(); }
};

// Checks step(I) subset-of step(J) for nested pairs I within J: every such
// pair when the universe fits the exhaustive cap, deterministic random pairs
// otherwise.
MonotoneReport check_monotone(const MonotoneOp& op,
                              std::size_t exhaustive_cap = kDefaultExhaustiveCap,
                              std::size_t samples = 256,
                              std::uint64_t seed = 1);

struct LeastReport {
  bool candidate_fixed = false;
  std::size_t subsets_checked = 0;
  std::vector<FinSet> fixed_points;   // all of them, in mask order
  std::vector<FinSet> not_above;      // fixed points that miss the candidate
  bool least() const { return candidate_fixed && not_above.empty(); }
};

// Enumerates every subset of the universe, collects the fixed points of
// step, and checks the candidate is contained in each. Exhaustive only:
// throws EnumerationTooLarge past the cap.
LeastReport check_least(const MonotoneOp& op, const FinSet& candidate,
                        std::size_t cap = kDefaultExhaustiveCap);

}  // namespace mufix

#endif
