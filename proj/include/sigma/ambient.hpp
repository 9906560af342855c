#ifndef SIGMA_AMBIENT_HPP
#define SIGMA_AMBIENT_HPP

#include <string>
#include <vector>

#include "sigma/groebner.hpp"
#include "sigma/polynomial.hpp"

namespace sigma {

enum class FactorKind { Ga, Gm, GLn };

struct Factor {
  FactorKind kind;
  unsigned n = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Product of basic algebraic-group factors. Coordinate layout per factor:
//   Ga(n):  0..n-1                the additive coordinates
//   Gm(n):  0..n-1 / n..2n-1      coordinates and their inverses
//   GLn(n): 0..n^2-1 / n^2        matrix entries (row-major) / inverse det
struct AmbientSpec {
  std::vector<Factor> factors;

  unsigned coord_count(unsigned f) const;
  bool valid_var(VarId v) const;
  friend bool operator==(const AmbientSpec&, const AmbientSpec&) = default;
};

// Whether the coordinate is an inverse marker (iy or idet).
bool is_inverse_coord(const AmbientSpec& a, unsigned factor, unsigned coord);

// All coordinates at exactly shift s / at every shift <= level, ascending.
std::vector<VarId> shift_universe(const AmbientSpec& a, unsigned s);
std::vector<VarId> level_universe(const AmbientSpec& a, unsigned level);

// Determinant of the shift-s matrix of a GL_n factor.
Polynomial det_poly(const AmbientSpec& a, unsigned factor, unsigned s);

// Invertibility relations (y*iy - 1, det*idet - 1) at one shift / up to a level.
std::vector<Polynomial> rabinowitsch(const AmbientSpec& a, unsigned s);
std::vector<Polynomial> rabinowitsch_upto(const AmbientSpec& a, unsigned level);

// Value of the coordinate at the identity element.
Rat identity_value(const AmbientSpec& a, VarId v);

// A difference algebraic subgroup presentation: sigma-ideal generators in the
// shift-indexed coordinates of the ambient group.
struct GroupSpec {
  AmbientSpec ambient;
  std::vector<Polynomial> generators;
  std::string name;

  // Max shift used by any generator.
  unsigned order() const {
    unsigned r = 0;
    for (const auto& g : generators) r = std::max(r, g.max_shift());
    return r;
  }
};

// Throws BadInput when a generator references a coordinate outside the ambient.
void validate_spec(const GroupSpec& spec);

}  // namespace sigma

#endif
