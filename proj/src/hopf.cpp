#include "sigma/hopf.hpp"

#include <algorithm>

#include "sigma/diff_ring.hpp"
#include "sigma/error.hpp"
#include "sigma/parser.hpp"

namespace sigma {

AmbientSpec tensor_ambient(const AmbientSpec& a, unsigned copies) {
  AmbientSpec t;
  for (const Factor& f : a.factors)
    for (unsigned s = 0; s < copies; ++s) t.factors.push_back(f);
  return t;
}

TensorPolynomial tensor_embed(const Polynomial& p, unsigned side, unsigned copies) {
  return p.map_vars([side, copies](VarId v) {
    v.factor = v.factor * copies + side;
    return v;
  });
}

namespace {

VarId slot_var(VarId v, unsigned side, unsigned copies) {
  v.factor = v.factor * copies + side;
  return v;
}

// Determinant of the shift-s matrix with row `skip_r` and column `skip_c`
// removed, expanded by the first remaining row.
Polynomial minor_det(const AmbientSpec& a, unsigned factor, unsigned s, unsigned skip_r,
                     unsigned skip_c) {
  unsigned n = a.factors[factor].n;
  std::vector<unsigned> rows, cols;
  for (unsigned r = 0; r < n; ++r)
    if (r != skip_r) rows.push_back(r);
  for (unsigned c = 0; c < n; ++c)
    if (c != skip_c) cols.push_back(c);

  std::function<Polynomial(std::vector<unsigned>, std::vector<unsigned>)> expand =
      [&](std::vector<unsigned> rr, std::vector<unsigned> cc) -> Polynomial {
    if (rr.empty()) return Polynomial::constant(1);
    Polynomial acc;
    for (std::size_t k = 0; k < cc.size(); ++k) {
      std::vector<unsigned> rest_r(rr.begin() + 1, rr.end());
      std::vector<unsigned> rest_c = cc;
      rest_c.erase(rest_c.begin() + k);
      Polynomial term = Polynomial::var(VarId{s, factor, rr[0] * n + cc[k]}) * expand(rest_r, rest_c);
      acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
  };
  return expand(rows, cols);
}

}  // namespace

TensorPolynomial comultiply(const AmbientSpec& a, const Polynomial& p, unsigned copies,
                            unsigned left, unsigned right) {
  std::map<VarId, Polynomial> cache;
  auto image = [&](VarId v) -> const Polynomial* {
    auto it = cache.find(v);
    if (it != cache.end()) return &it->second;
    if (!a.valid_var(v)) throw Error(Err::BadInput, "coordinate outside the ambient group");
    const Factor& f = a.factors[v.factor];
    Polynomial img;
    switch (f.kind) {
      case FactorKind::Ga:
        img = Polynomial::var(slot_var(v, left, copies)) +
              Polynomial::var(slot_var(v, right, copies));
        break;
      case FactorKind::Gm:
        img = Polynomial::var(slot_var(v, left, copies)) *
              Polynomial::var(slot_var(v, right, copies));
        break;
      case FactorKind::GLn: {
        unsigned n = f.n;
        if (v.coord == n * n) {  // inverse determinant is group-like
          img = Polynomial::var(slot_var(v, left, copies)) *
                Polynomial::var(slot_var(v, right, copies));
        } else {
          unsigned r = v.coord / n, c = v.coord % n;
          for (unsigned l = 0; l < n; ++l)
            img += Polynomial::var(slot_var(VarId{v.shift, v.factor, r * n + l}, left, copies)) *
                   Polynomial::var(slot_var(VarId{v.shift, v.factor, l * n + c}, right, copies));
        }
        break;
      }
    }
    return &cache.emplace(v, std::move(img)).first->second;
  };
  return p.substitute(image);
}

Polynomial antipode(const AmbientSpec& a, const Polynomial& p) {
  std::map<VarId, Polynomial> cache;
  auto image = [&](VarId v) -> const Polynomial* {
    auto it = cache.find(v);
    if (it != cache.end()) return &it->second;
    if (!a.valid_var(v)) throw Error(Err::BadInput, "coordinate outside the ambient group");
    const Factor& f = a.factors[v.factor];
    Polynomial img;
    switch (f.kind) {
      case FactorKind::Ga:
        img = -Polynomial::var(v);
        break;
      case FactorKind::Gm: {
        unsigned j = v.coord < f.n ? v.coord + f.n : v.coord - f.n;
        img = Polynomial::var(VarId{v.shift, v.factor, j});
        break;
      }
      case FactorKind::GLn: {
        unsigned n = f.n;
        if (v.coord == n * n) {
          img = det_poly(a, v.factor, v.shift);
        } else {
          unsigned r = v.coord / n, c = v.coord % n;
          // (X^-1)_rc = idet * (-1)^(r+c) * minor with row c, column r removed.
          Polynomial m = minor_det(a, v.factor, v.shift, c, r);
          img = Polynomial::var(VarId{v.shift, v.factor, n * n}) *
                (((r + c) % 2 == 0) ? m : -m);
        }
        break;
      }
    }
    return &cache.emplace(v, std::move(img)).first->second;
  };
  return p.substitute(image);
}

Rat counit(const AmbientSpec& a, const Polynomial& p) {
  return p.evaluate([&](VarId v) { return identity_value(a, v); });
}

IdealBasis augmentation_ideal(const AmbientSpec& a, unsigned level) {
  std::vector<Polynomial> gens;
  for (VarId v : level_universe(a, level))
    gens.push_back(Polynomial::var(v) - Polynomial::constant(identity_value(a, v)));
  return groebner(std::move(gens), MonomialOrder::grevlex(), level_universe(a, level));
}

HopfCheck is_hopf_ideal(const GroupSpec& spec, unsigned level) {
  if (level < spec.order())
    throw Error(Err::LevelTooSmall, "level below the generator order");
  validate_spec(spec);

  std::vector<Polynomial> tgens = truncation_generators(spec, level);
  IdealBasis plain = groebner(tgens, MonomialOrder::grevlex(), level_universe(spec.ambient, level));

  AmbientSpec ta = tensor_ambient(spec.ambient);
  std::vector<Polynomial> tensor_gens;
  for (const auto& g : tgens) {
    tensor_gens.push_back(tensor_embed(g, 0));
    tensor_gens.push_back(tensor_embed(g, 1));
  }
  auto tamb = rabinowitsch_upto(ta, level);
  tensor_gens.insert(tensor_gens.end(), tamb.begin(), tamb.end());

  IdealBasis tensor_ideal;
  bool tensor_built = false;
  auto ensure_tensor = [&]() -> const IdealBasis& {
    if (!tensor_built) {
      tensor_ideal = groebner(tensor_gens, MonomialOrder::grevlex(), level_universe(ta, level));
      tensor_built = true;
    }
    return tensor_ideal;
  };

  HopfCheck out;
  std::vector<Polynomial> checks;
  for (const auto& f : spec.generators) {
    if (f.is_zero_poly()) continue;
    for (unsigned t = 0; t + f.max_shift() <= level; ++t) checks.push_back(shift(f, t));
  }
  for (const auto& g : checks) {
    if (!sigma::is_zero(counit(spec.ambient, g)))
      out.failures.push_back("counit: " + print_poly(g, spec.ambient));
    Polynomial s = antipode(spec.ambient, g);
    if (!reduces_to_zero(s, plain.gens, plain.order) && !in_ideal(s, plain))
      out.failures.push_back("antipode: " + print_poly(g, spec.ambient));
    Polynomial d = comultiply(spec.ambient, g);
    if (!reduces_to_zero(d, tensor_gens, MonomialOrder::grevlex()) &&
        !in_ideal(d, ensure_tensor()))
      out.failures.push_back("comultiplication: " + print_poly(g, spec.ambient));
  }
  out.hopf = out.failures.empty();
  return out;
}

bool check_coassociativity(const AmbientSpec& a, unsigned level) {
  AmbientSpec triple = tensor_ambient(a, 3);
  IdealBasis amb = groebner(rabinowitsch_upto(triple, level), MonomialOrder::grevlex(),
                            level_universe(triple, level));
  auto back = [](VarId v) {  // slot variable of a 3-fold ring back to the plain ring
    VarId w = v;
    w.factor = v.factor / 3;
    return w;
  };
  for (VarId v : level_universe(a, level)) {
    Polynomial x = Polynomial::var(v);
    // (Delta (x) id): expand the left leg of slots (0,2) into slots (0,1).
    Polynomial left = comultiply(a, x, 3, 0, 2).substitute([&](VarId w) -> const Polynomial* {
      static thread_local Polynomial tmp;
      if (w.factor % 3 != 0) return nullptr;
      tmp = comultiply(a, Polynomial::var(back(w)), 3, 0, 1);
      return &tmp;
    });
    // (id (x) Delta): expand the right leg of slots (0,1) into slots (1,2).
    Polynomial right = comultiply(a, x, 3, 0, 1).substitute([&](VarId w) -> const Polynomial* {
      static thread_local Polynomial tmp;
      if (w.factor % 3 != 1) return nullptr;
      tmp = comultiply(a, Polynomial::var(back(w)), 3, 1, 2);
      return &tmp;
    });
    if (!in_ideal(left - right, amb)) return false;
  }
  return true;
}

bool check_counit_law(const AmbientSpec& a, const Polynomial& p) {
  Polynomial d = comultiply(a, p);
  Polynomial collapsed = d.substitute([&](VarId w) -> const Polynomial* {
    static thread_local Polynomial tmp;
    VarId orig = w;
    orig.factor = w.factor / 2;
    if (w.factor % 2 == 0)
      tmp = Polynomial::constant(identity_value(a, orig));
    else
      tmp = Polynomial::var(orig);
    return &tmp;
  });
  unsigned level = std::max(p.max_shift(), collapsed.max_shift());
  IdealBasis amb = groebner(rabinowitsch_upto(a, level), MonomialOrder::grevlex(),
                            level_universe(a, level));
  return in_ideal(collapsed - p, amb);
}

bool check_antipode_law(const AmbientSpec& a, unsigned level, const Polynomial& p) {
  Polynomial d = comultiply(a, p);
  Polynomial folded = d.substitute([&](VarId w) -> const Polynomial* {
    static thread_local Polynomial tmp;
    VarId orig = w;
    orig.factor = w.factor / 2;
    if (w.factor % 2 == 0)
      tmp = antipode(a, Polynomial::var(orig));
    else
      tmp = Polynomial::var(orig);
    return &tmp;
  });
  IdealBasis amb = groebner(rabinowitsch_upto(a, level), MonomialOrder::grevlex(),
                            level_universe(a, level));
  return in_ideal(folded - Polynomial::constant(counit(a, p)), amb);
}

}  // namespace sigma
