#include "sigma/tower.hpp"

#include <algorithm>

#include "sigma/error.hpp"
#include "sigma/hopf.hpp"

namespace sigma {

IdealBasis rename_shift_layer(const IdealBasis& src, unsigned from, unsigned target) {
  auto rename = [from, target](VarId v) {
    if (v.shift != from) throw Error(Err::Internal, "ideal not confined to one shift layer");
    v.shift = target;
    return v;
  };
  IdealBasis out;
  out.order = src.order;
  out.groebner = src.groebner;  // renaming one layer preserves the term order
  for (const auto& g : src.gens) out.gens.push_back(g.map_vars(rename));
  for (VarId v : src.universe) out.universe.push_back(rename(v));
  std::sort(out.universe.begin(), out.universe.end());
  return out;
}

Tower build_tower(const GroupSpec& spec, unsigned L, const ClosureOptions& opt) {
  validate_spec(spec);
  if (L < spec.order() + 2)
    throw Error(Err::LevelTooSmall, "tower depth must reach the generator order plus two");

  Tower tower{spec, {}, opt};
  for (unsigned i = 0; i <= L; ++i) {
    const IdealBasis* below = i == 0 ? nullptr : &tower.levels[i - 1].ideal;
    ClosureOutcome res = closure_ideal_step(spec, i, opt, below);

    TowerLevel lvl;
    lvl.i = i;
    lvl.ideal = std::move(res.ideal);
    lvl.cor43 = res.verified;
    lvl.dim = krull_dim(lvl.ideal);

    if (i == 0) {
      lvl.fiber = lvl.ideal;
    } else {
      std::vector<Polynomial> gens = lvl.ideal.gens;
      for (VarId v : level_universe(spec.ambient, i - 1))
        gens.push_back(Polynomial::var(v) - Polynomial::constant(identity_value(spec.ambient, v)));
      lvl.fiber = eliminate(gens, shift_universe(spec.ambient, i), lvl.ideal.universe);
    }
    lvl.fiber_vecdim = vecdim(lvl.fiber);
    tower.levels.push_back(std::move(lvl));
  }
  return tower;
}

const IdealBasis& kernel_fiber(const Tower& tower, unsigned i) {
  if (i >= tower.levels.size()) throw Error(Err::LevelNotBuilt, "tower level not built");
  return tower.levels[i].fiber;
}

unsigned stabilization_level(const Tower& tower) {
  unsigned L = tower.depth();
  unsigned m = 0;
  for (unsigned i = 1; i <= L; ++i) {
    bool same_fiber = ideal_equal(rename_shift_layer(tower.levels[i].fiber, i, 0),
                                  rename_shift_layer(tower.levels[i - 1].fiber, i - 1, 0));
    if (!(tower.levels[i].cor43 && same_fiber)) m = i;
  }
  if (L < m + tower.options.lookahead)
    throw Error(Err::NotStabilized,
                "no stabilization within depth " + std::to_string(L) +
                    " (last change at level " + std::to_string(m) + ")");
  return m;
}

InvariantsReport invariants(const Tower& tower) {
  InvariantsReport rep;
  rep.m = stabilization_level(tower);
  unsigned L = tower.depth();
  for (unsigned i = rep.m; i <= L; ++i) rep.window.push_back({i, tower.levels[i].dim});

  bool constant_diff = true;
  long d = 0;
  for (std::size_t k = 1; k < rep.window.size(); ++k) {
    long diff = static_cast<long>(rep.window[k].second) -
                static_cast<long>(rep.window[k - 1].second);
    if (k == 1) d = diff;
    else if (diff != d) constant_diff = false;
  }
  if (d < 0) constant_diff = false;  // dimensions may not drop
  rep.sigma_dim = static_cast<unsigned>(std::max(0L, d));

  if (rep.sigma_dim == 0) {
    rep.order = rep.window.front().second;  // dim is flat on the window
  } else {
    rep.order = std::nullopt;
  }
  rep.limit_degree = tower.levels[rep.m].fiber_vecdim;
  rep.verified = constant_diff && rep.window.size() >= tower.options.lookahead + 1;
  return rep;
}

IdealBasis growth_group(const Tower& tower) {
  unsigned m = stabilization_level(tower);
  return rename_shift_layer(tower.levels[m].fiber, m, 0);
}

}  // namespace sigma
