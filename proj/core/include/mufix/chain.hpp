#ifndef MUFIX_CHAIN_HPP
#define MUFIX_CHAIN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mufix/functor.hpp"

namespace mufix {

inline constexpr std::size_t kDefaultMaxStage = 64;

// Iterated application of a functor starting from the empty set:
// stages[0] = {}, stages[n+1] = apply_obj(functor, stages[n]), with
// links[n] : stages[n] -> stages[n+1] where links[0] is the empty map and
// links[n+1] = apply_mor(functor, links[n]). In this encoding every link is
// an inclusion, so a bijective link means the stage stopped growing.
struct Chain {
  FunctorExpr functor;
  std::vector<FinSet> stages;
  std::vector<FinFn> links;
};

// Builds stages 0..max_stage and links 0..max_stage-1, stopping early once a
// link is a bijection. Throws StageExplosion before materializing any stage
// whose cardinality would exceed cap.
Chain build_chain(const FunctorExpr& functor,
                  std::size_t max_stage = kDefaultMaxStage,
                  std::size_t cap = kDefaultCardinalityCap);

// Least stage whose outgoing link is a bijection, if any was reached.
std::optional<std::size_t> detect_convergence(const Chain& chain);

// The algebra at a converged stage: carrier stages[stage], structure map the
// inverse of the bijective link. Throws NotConverged when the link at that
// stage is missing or not bijective.
Algebra extract_initial_algebra(const Chain& chain, std::size_t stage);

struct ChainResult {
  Chain chain;
  std::optional<std::size_t> converged_at;
  // Present exactly when converged: the algebra above plus the iso between
  // the carrier and the functor applied to it (forward = the link).
  std::optional<Algebra> algebra;
  std::optional<Iso> iso;
};

ChainResult run_chain(const FunctorExpr& functor,
                      std::size_t max_stage = kDefaultMaxStage,
                      std::size_t cap = kDefaultCardinalityCap);

// The unique map out of the converged stage into a target algebra, computed
// by stage recursion: f0 is the empty map, f_{n+1} = structure . F(f_n).
// Throws FunctorMismatch when the target is an algebra for another functor
// and NotConverged when the chain did not converge at stage.
FinFn fold_via_chain(const Chain& chain, std::size_t stage,
                     const Algebra& target);

struct HomSearchReport {
  std::size_t candidates = 0;
  std::vector<FinFn> homomorphisms;
  bool unique() const { return homomorphisms.size() == 1; }
};

// Enumerates every function initial.carrier -> target.carrier and keeps the
// ones h with h . structure = target.structure . F(h). For a true initial
// algebra exactly one survives.
HomSearchReport unique_hom_check(const Algebra& initial, const Algebra& target,
                                 std::size_t cap = kDefaultCardinalityCap);

struct LambekCheck {
  FinFn witness;  // h : carrier -> F(carrier), built as a fold
  bool forward_then_back;  // structure . h == id on the carrier
  bool back_then_forward;  // h . structure == id on F(carrier)
  bool ok() const { return forward_then_back && back_then_forward; }
};

// Folds the converged algebra into (F(carrier), F(structure)) and checks
// that the resulting map and the structure map are mutually inverse.
LambekCheck lambek_verify(const Chain& chain, std::size_t stage);

// Same check, rebuilding the chain from the algebra's functor. The algebra
// must be the one the rebuilt chain converges to.
LambekCheck lambek_verify(const Algebra& initial,
                          std::size_t max_stage = kDefaultMaxStage,
                          std::size_t cap = kDefaultCardinalityCap);

// The unique map from the converged stage to any fixed point: given an iso
// theta : x -> apply_obj(functor, x), folds into the algebra (x, theta^-1).
// Throws NotAnIso when theta is not such an iso.
FinFn morphism_to_fixed_point(const Chain& chain, std::size_t stage,
                              const FinSet& x, const Iso& theta);

FinFn morphism_to_fixed_point(const Algebra& initial, const FinSet& x,
                              const Iso& theta,
                              std::size_t max_stage = kDefaultMaxStage,
                              std::size_t cap = kDefaultCardinalityCap);

}  // namespace mufix

#endif
