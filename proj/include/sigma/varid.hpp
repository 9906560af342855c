#ifndef SIGMA_VARID_HPP
#define SIGMA_VARID_HPP

#include <compare>
#include <cstdint>

namespace sigma {

// One shift-indexed ambient coordinate sigma^shift(coordinate).
// `factor` indexes the ambient factor, `coord` the coordinate inside it
// (a torus factor of rank n uses 0..n-1 for the coordinates and n..2n-1
// for their inverses; a GL_n factor uses 0..n^2-1 row-major plus n^2 for
// the inverse-determinant coordinate).
//
// The canonical total order ranks higher shifts above lower ones; within
// a shift, by (factor, coord). All monomial orders respect this ranking.
struct VarId {
  std::uint32_t shift = 0;
  std::uint32_t factor = 0;
  std::uint32_t coord = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Reserved factor index for scratch variables (tags local to a single
// computation, never part of an AmbientSpec).
inline constexpr std::uint32_t kAuxFactor = 0xFFFFFFFFu;

inline VarId aux_var(std::uint32_t coord = 0) { return VarId{0, kAuxFactor, coord}; }

inline VarId shifted(VarId v, std::uint32_t t) {
  v.shift += t;
  return v;
}

}  // namespace sigma

#endif
