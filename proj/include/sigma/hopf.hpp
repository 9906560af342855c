#ifndef SIGMA_HOPF_HPP
#define SIGMA_HOPF_HPP

#include <string>
#include <vector>

#include "sigma/ambient.hpp"
#include "sigma/groebner.hpp"

namespace sigma {

// Elements of tensor powers of the coordinate ring live in one polynomial
// ring with one disjoint variable copy per tensor slot: factor f of slot s
// becomes factor f*copies + s.
using TensorPolynomial = Polynomial;

AmbientSpec tensor_ambient(const AmbientSpec& a, unsigned copies = 2);
TensorPolynomial tensor_embed(const Polynomial& p, unsigned side, unsigned copies = 2);

// Comultiplication by coordinate substitution, shift-compatible. `left` and
// `right` are the tensor slots receiving the two legs.
TensorPolynomial comultiply(const AmbientSpec& a, const Polynomial& p, unsigned copies = 2,
                            unsigned left = 0, unsigned right = 1);

// Antipode substitution; for GL_n this is the adjugate times the inverse-
// determinant coordinate, so identities involving it hold modulo the
// invertibility relations.
Polynomial antipode(const AmbientSpec& a, const Polynomial& p);

// Evaluation at the identity element.
Rat counit(const AmbientSpec& a, const Polynomial& p);

// Ideal generated by (coordinate - its identity value) for shifts <= level.
IdealBasis augmentation_ideal(const AmbientSpec& a, unsigned level);

struct HopfCheck {
  bool hopf = false;
  std::vector<std::string> failures;
};

// Checks, for every shift of every generator within the level: counit zero,
// antipode stays in the ideal, comultiplication lands in I(u) + I(v) of the
// doubled ring. Sigma-stability holds by construction of the sigma-ideal.
HopfCheck is_hopf_ideal(const GroupSpec& spec, unsigned level);

// Structural axioms of the ambient Hopf algebra, all verified modulo the
// invertibility relations: coassociativity, the counit law and the antipode
// law on every coordinate with shift <= level.
bool check_coassociativity(const AmbientSpec& a, unsigned level);
bool check_counit_law(const AmbientSpec& a, const Polynomial& p);
bool check_antipode_law(const AmbientSpec& a, unsigned level, const Polynomial& p);

}  // namespace sigma

#endif
