#ifndef SIGMA_DIFF_RING_HPP
#define SIGMA_DIFF_RING_HPP

#include "sigma/ambient.hpp"
#include "sigma/groebner.hpp"

namespace sigma {

// sigma^t applied to a difference polynomial: every shift index moves up by
// t, coefficients stay fixed (sigma is the identity on Q).
Polynomial shift(const Polynomial& p, unsigned t);

// Generators of the truncated sigma-ideal: every shift of every generator
// that stays within level N, together with the invertibility relations.
std::vector<Polynomial> truncation_generators(const GroupSpec& spec, unsigned N);

// E_i^N: the ideal generated by shifts of the generators up to level N,
// contracted to the level-<=i coordinates. Throws LevelTooSmall for N < i.
IdealBasis prolongation_ideal(const GroupSpec& spec, unsigned i, unsigned N);

struct ClosureOptions {
  unsigned lookahead = 2;
  unsigned budget_extra = 8;  // prolongation cap: N <= i + budget_extra
};

struct ClosureOutcome {
  IdealBasis ideal;      // stabilized level-i ideal (grevlex over the level universe)
  bool verified = false;  // one-step generation from level i-1 confirmed (true at i = 0)
  unsigned settled_n = 0;  // first N with E_i^N = E_i^(N+lookahead)
};

// Scans N = i, i+1, ... until E_i^N agrees with E_i^(N+lookahead); then, for
// i >= 1, additionally checks that the level-(i-1) ideal and its shift
// generate the level-i ideal. Throws BudgetExceeded past the cap.
ClosureOutcome closure_ideal(const GroupSpec& spec, unsigned i, const ClosureOptions& opt = {});

// Same, reusing an already-stabilized level-(i-1) ideal.
ClosureOutcome closure_ideal_step(const GroupSpec& spec, unsigned i, const ClosureOptions& opt,
                                  const IdealBasis* below);

struct ClosureResult {
  enum class Kind { Reflexive, WellMixed, Perfect };
  std::vector<Polynomial> generators;
  Kind kind;
  unsigned bound = 0;
  bool closed_flag = false;
};

// Fixpoint of adjoining sigma-preimages, working in the level-<=bound ring.
// Preimages come from contracting to the shift->=1 coordinates and renaming
// one step down, which is exact because sigma acts as the free index shift.
ClosureResult reflexive_closure(const GroupSpec& spec, unsigned bound);

// One bounded enrichment pass toward the perfect closure: reflexive closure,
// mixed consequences f*sigma(g) for visibly split basis elements f*g, and
// squarefree parts of univariate eliminants when the level algebra is finite
// dimensional. closed_flag only when the pass adds nothing.
ClosureResult perfect_closure_step(const std::vector<Polynomial>& gens, const GroupSpec& spec,
                                   unsigned bound);

// The mixed/radical enrichment alone (no reflexive pass).
ClosureResult wellmixed_closure_step(const std::vector<Polynomial>& gens, const GroupSpec& spec,
                                     unsigned bound);

}  // namespace sigma

#endif
