#ifndef SIGMA_GROEBNER_HPP
#define SIGMA_GROEBNER_HPP

#include <optional>
#include <vector>

#include "sigma/order.hpp"
#include "sigma/polynomial.hpp"

namespace sigma {

// An ideal presentation: generators over an explicit (finite) variable
// universe with a monomial order. When `groebner` is set the generators are
// the reduced Groebner basis for that order: monic, sorted ascending by
// leading monomial, no term of one element divisible by the leading
// monomial of another. The reduced basis is the canonical form used for
// ideal equality.
struct IdealBasis {
  std::vector<Polynomial> gens;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<VarId> universe;  // sorted ascending
  bool groebner = false;

  bool is_zero_ideal() const { return gens.empty(); }
  bool is_unit_ideal() const {
    return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero_poly();
  }
};

// Buchberger with the coprime and chain criteria, normal (smallest-lcm)
// S-pair selection; returns the reduced basis. Deterministic.
IdealBasis groebner(std::vector<Polynomial> gens, MonomialOrder order,
                    std::vector<VarId> universe);

// Fully reduced remainder modulo a Groebner basis. Zero iff membership.
Polynomial normal_form(const Polynomial& p, const IdealBasis& basis);

// One-sided membership: remainder-zero under plain division by `gens` proves
// membership without a Groebner basis (a nonzero remainder proves nothing).
bool reduces_to_zero(const Polynomial& p, const std::vector<Polynomial>& gens,
                     const MonomialOrder& order);

// Contraction of the ideal to the subring on `keep`, via a block order.
IdealBasis eliminate(const std::vector<Polynomial>& gens, std::vector<VarId> keep,
                     const std::vector<VarId>& universe);
IdealBasis eliminate(const IdealBasis& ideal, std::vector<VarId> keep);

// Krull dimension of the quotient ring: maximum size of a variable subset
// independent modulo the leading-term ideal. Throws UnitIdeal.
unsigned krull_dim(const IdealBasis& basis);

// Number of standard monomials; nullopt when infinite. Unit ideal gives 0
// (the zero ring).
std::optional<std::uint64_t> vecdim(const IdealBasis& basis);

// Standard monomials of total degree <= maxdeg.
std::vector<Monomial> standard_monomials_bounded(const IdealBasis& basis, std::uint64_t maxdeg);

bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

bool in_ideal(const Polynomial& p, const IdealBasis& basis);

// Union of both universes and of the variables supporting the polynomials.
std::vector<VarId> merge_universe(std::vector<VarId> universe,
                                  const std::vector<Polynomial>& polys);

}  // namespace sigma

#endif
