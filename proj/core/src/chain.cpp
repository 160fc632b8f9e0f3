#include "mufix/chain.hpp"

#include <stdexcept>
#include <string>

#include "mufix/errors.hpp"

namespace mufix {

Chain build_chain(const FunctorExpr& functor, std::size_t max_stage,
                  std::size_t cap) {
  if (max_stage == 0)
    throw std::invalid_argument("need at least one stage beyond the start");

  Chain chain{functor, {FinSet()}, {}};
  while (chain.links.size() < max_stage) {
    const FinSet& current = chain.stages.back();
    std::size_t predicted = apply_obj_size(functor, current.size());
    if (predicted > cap)
      throw StageExplosion("stage " + std::to_string(chain.stages.size()) +
                           " would have " + std::to_string(predicted) +
                           " elements, over the cap of " + std::to_string(cap));

    chain.stages.push_back(apply_obj(functor, current));
    if (chain.links.empty()) {
      chain.links.push_back(
          FinFn::from_pairs(FinSet(), chain.stages.back(), {}));
    } else {
      chain.links.push_back(apply_mor(functor, chain.links.back()));
    }
    if (is_bijection(chain.links.back())) break;
  }
  return chain;
}

std::optional<std::size_t> detect_convergence(const Chain& chain) {
  for (std::size_t i = 0; i < chain.links.size(); ++i)
    if (is_bijection(chain.links[i])) return i;
  return std::nullopt;
}

Algebra extract_initial_algebra(const Chain& chain, std::size_t stage) {
  if (stage >= chain.links.size() || !is_bijection(chain.links[stage]))
    throw NotConverged("the link at stage " + std::to_string(stage) +
                       " is not a bijection");
  return Algebra(chain.functor, chain.stages[stage],
                 inverse(chain.links[stage]));
}

ChainResult run_chain(const FunctorExpr& functor, std::size_t max_stage,
                      std::size_t cap) {
  ChainResult result{build_chain(functor, max_stage, cap), std::nullopt,
                     std::nullopt, std::nullopt};
  result.converged_at = detect_convergence(result.chain);
  if (result.converged_at) {
    result.algebra = extract_initial_algebra(result.chain, *result.converged_at);
    result.iso = Iso(result.chain.links[*result.converged_at],
                     result.algebra->structure());
  }
  return result;
}

FinFn fold_via_chain(const Chain& chain, std::size_t stage,
                     const Algebra& target) {
  if (!(target.functor() == chain.functor))
    throw FunctorMismatch("target algebra is for functor " +
                          target.functor().to_string() + ", chain is for " +
                          chain.functor.to_string());
  if (stage >= chain.links.size() || !is_bijection(chain.links[stage]))
    throw NotConverged("fold needs a converged stage; stage " +
                       std::to_string(stage) + " is not one");

  FinFn f = FinFn::from_pairs(FinSet(), target.carrier(), {});
  for (std::size_t n = 0; n < stage; ++n)
    f = compose(target.structure(), apply_mor(chain.functor, f));
  return f;
}

HomSearchReport unique_hom_check(const Algebra& initial, const Algebra& target,
                                 std::size_t cap) {
  if (!(target.functor() == initial.functor()))
    throw FunctorMismatch("the two algebras are for different functors");

  HomSearchReport report;
  for (FinFn& h : all_functions(initial.carrier(), target.carrier(), cap)) {
    ++report.candidates;
    FinFn around_initial = compose(h, initial.structure());
    FinFn around_target =
        compose(target.structure(), apply_mor(initial.functor(), h));
    if (around_initial == around_target)
      report.homomorphisms.push_back(std::move(h));
  }
  return report;
}

LambekCheck lambek_verify(const Chain& chain, std::size_t stage) {
  Algebra initial = extract_initial_algebra(chain, stage);
  FinSet image = apply_obj(chain.functor, initial.carrier());
  Algebra shifted(chain.functor, image,
                  apply_mor(chain.functor, initial.structure()));
  FinFn witness = fold_via_chain(chain, stage, shifted);
  return LambekCheck{
      witness,
      compose(initial.structure(), witness) == identity_fn(initial.carrier()),
      compose(witness, initial.structure()) == identity_fn(image)};
}

namespace {

// Rebuilds the chain behind an algebra handed over without one and checks it
// really is the algebra that chain converges to.
std::pair<Chain, std::size_t> rebuild_chain_for(const Algebra& initial,
                                                std::size_t max_stage,
                                                std::size_t cap) {
  Chain chain = build_chain(initial.functor(), max_stage, cap);
  auto stage = detect_convergence(chain);
  if (!stage)
    throw NotConverged("the functor's chain does not converge within " +
                       std::to_string(max_stage) + " stages");
  Algebra rebuilt = extract_initial_algebra(chain, *stage);
  if (!(rebuilt.carrier() == initial.carrier()) ||
      !(rebuilt.structure() == initial.structure()))
    throw NotConverged(
        "the algebra is not the one its functor's chain converges to");
  return {std::move(chain), *stage};
}

}  // namespace

LambekCheck lambek_verify(const Algebra& initial, std::size_t max_stage,
                          std::size_t cap) {
  auto [chain, stage] = rebuild_chain_for(initial, max_stage, cap);
  return lambek_verify(chain, stage);
}

FinFn morphism_to_fixed_point(const Chain& chain, std::size_t stage,
                              const FinSet& x, const Iso& theta) {
  if (!(theta.forward().domain() == x))
    throw NotAnIso("theta does not start at the given fixed point");
  if (!(theta.forward().codomain() == apply_obj(chain.functor, x)))
    throw FunctorMismatch(
        "theta does not land in the chain's functor applied to the fixed "
        "point");
  Algebra target(chain.functor, x, theta.backward());
  return fold_via_chain(chain, stage, target);
}

FinFn morphism_to_fixed_point(const Algebra& initial, const FinSet& x,
                              const Iso& theta, std::size_t max_stage,
                              std::size_t cap) {
  auto [chain, stage] = rebuild_chain_for(initial, max_stage, cap);
  return morphism_to_fixed_point(chain, stage, x, theta);
}

}  // namespace mufix
