#ifndef SIGMA_TOWER_HPP
#define SIGMA_TOWER_HPP

#include <optional>
#include <vector>

#include "sigma/diff_ring.hpp"

namespace sigma {

struct TowerLevel {
  unsigned i = 0;
  IdealBasis ideal;   // defining ideal of the i-th order Zariski closure
  unsigned dim = 0;   // Krull dimension of that closure
  bool cor43 = false;  // level generated by the previous level and its shift
  IdealBasis fiber;   // kernel of the projection to level i-1, on shift-i coordinates
  std::optional<std::uint64_t> fiber_vecdim;  // nullopt = infinite
};

struct Tower {
  GroupSpec spec;
  std::vector<TowerLevel> levels;  // 0..L
  ClosureOptions options;

  unsigned depth() const { return static_cast<unsigned>(levels.size()) - 1; }
};

struct InvariantsReport {
  unsigned m = 0;                             // stabilization level
  unsigned sigma_dim = 0;                     // eventual dimension growth per level
  std::optional<unsigned long> order;         // dimension offset; nullopt = infinite
  std::optional<std::uint64_t> limit_degree;  // size of the growth group; nullopt = infinite
  bool verified = false;
  std::vector<std::pair<unsigned, unsigned>> window;  // fitted (i, dim_i) pairs
};

// Builds levels 0..L. The fiber at level 0 is the level-0 closure itself.
// Requires L >= generator order + 2.
Tower build_tower(const GroupSpec& spec, unsigned L, const ClosureOptions& opt = {});

// Fiber of the projection over the identity, as an ideal on the shift-i
// coordinates. Level 0 returns the level ideal itself.
const IdealBasis& kernel_fiber(const Tower& tower, unsigned i);

// Smallest m such that every built level above m satisfies the one-step
// generation identity and has the same fiber as the level below (after the
// index renaming). Throws NotStabilized when fewer than `lookahead` levels
// confirm it.
unsigned stabilization_level(const Tower& tower);

InvariantsReport invariants(const Tower& tower);

// The stabilized fiber renamed to shift-0 coordinates: an algebraic subgroup
// of the ambient factor.
IdealBasis growth_group(const Tower& tower);

// Rename an ideal supported on a single shift layer to shift `target`.
IdealBasis rename_shift_layer(const IdealBasis& src, unsigned from, unsigned target);

}  // namespace sigma

#endif
