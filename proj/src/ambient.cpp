#include "sigma/ambient.hpp"

#include <algorithm>

#include "sigma/error.hpp"

namespace sigma {

unsigned AmbientSpec::coord_count(unsigned f) const {
  const Factor& fac = factors.at(f);
  switch (fac.kind) {
    case FactorKind::Ga: return fac.n;
    case FactorKind::Gm: return 2 * fac.n;
    case FactorKind::GLn: return fac.n * fac.n + 1;
  }
  return 0;
}

bool AmbientSpec::valid_var(VarId v) const {
  return v.factor < factors.size() && v.coord < coord_count(v.factor);
}

bool is_inverse_coord(const AmbientSpec& a, unsigned factor, unsigned coord) {
  const Factor& f = a.factors.at(factor);
  switch (f.kind) {
    case FactorKind::Ga: return false;
    case FactorKind::Gm: return coord >= f.n;
    case FactorKind::GLn: return coord == f.n * f.n;
  }
  return false;
}

std::vector<VarId> shift_universe(const AmbientSpec& a, unsigned s) {
  std::vector<VarId> out;
  for (unsigned f = 0; f < a.factors.size(); ++f)
    for (unsigned c = 0; c < a.coord_count(f); ++c) out.push_back(VarId{s, f, c});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VarId> level_universe(const AmbientSpec& a, unsigned level) {
  std::vector<VarId> out;
  for (unsigned s = 0; s <= level; ++s) {
    auto layer = shift_universe(a, s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void permutations(unsigned n, std::vector<unsigned>& perm, std::vector<bool>& used, int sign,
                  unsigned factor, unsigned s, Polynomial& acc) {
  if (perm.size() == n) {
    Monomial m;
    for (unsigned r = 0; r < n; ++r)
      m = m * Monomial::var(VarId{s, factor, r * n + perm[r]});
    acc += Polynomial::monomial(m, Rat(sign));
    return;
  }
  for (unsigned c = 0; c < n; ++c) {
    if (used[c]) continue;
    int flips = 0;  // inversions added by placing column c in this row
    for (unsigned prev : perm)
      if (prev > c) ++flips;
    used[c] = true;
    perm.push_back(c);
    permutations(n, perm, used, (flips % 2 == 0) ? sign : -sign, factor, s, acc);
    perm.pop_back();
    used[c] = false;
  }
}

}  // namespace

Polynomial det_poly(const AmbientSpec& a, unsigned factor, unsigned s) {
  const Factor& f = a.factors.at(factor);
  if (f.kind != FactorKind::GLn) throw Error(Err::Internal, "det_poly on a non-GL factor");
  Polynomial acc;
  std::vector<unsigned> perm;
  std::vector<bool> used(f.n, false);
  permutations(f.n, perm, used, 1, factor, s, acc);
  return acc;
}

std::vector<Polynomial> rabinowitsch(const AmbientSpec& a, unsigned s) {
  std::vector<Polynomial> out;
  for (unsigned f = 0; f < a.factors.size(); ++f) {
    const Factor& fac = a.factors[f];
    if (fac.kind == FactorKind::Gm) {
      for (unsigned j = 0; j < fac.n; ++j) {
        Polynomial rel = Polynomial::var(VarId{s, f, j}) * Polynomial::var(VarId{s, f, fac.n + j}) -
                         Polynomial::constant(1);
        out.push_back(rel);
      }
    } else if (fac.kind == FactorKind::GLn) {
      Polynomial rel = det_poly(a, f, s) * Polynomial::var(VarId{s, f, fac.n * fac.n}) -
                       Polynomial::constant(1);
      out.push_back(rel);
    }
  }
  return out;
}

std::vector<Polynomial> rabinowitsch_upto(const AmbientSpec& a, unsigned level) {
  std::vector<Polynomial> out;
  for (unsigned s = 0; s <= level; ++s) {
    auto layer = rabinowitsch(a, s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Rat identity_value(const AmbientSpec& a, VarId v) {
  if (!a.valid_var(v)) throw Error(Err::BadInput, "coordinate outside the ambient group");
  const Factor& f = a.factors[v.factor];
  switch (f.kind) {
    case FactorKind::Ga: return Rat(0);
    case FactorKind::Gm: return Rat(1);
    case FactorKind::GLn: {
      if (v.coord == f.n * f.n) return Rat(1);  // idet
      unsigned r = v.coord / f.n, c = v.coord % f.n;
      return Rat(r == c ? 1 : 0);
    }
  }
  return Rat(0);
}

void validate_spec(const GroupSpec& spec) {
  for (const auto& g : spec.generators) {
    std::vector<VarId> vars;
    g.collect_vars(vars);
    for (VarId v : vars)
      if (!spec.ambient.valid_var(v))
        throw Error(Err::BadInput, "generator uses a coordinate outside the ambient group");
  }
}

}  // namespace sigma
