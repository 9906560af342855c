#include "sigma/diff_ring.hpp"

#include <algorithm>
#include <map>

#include "sigma/error.hpp"
#include "sigma/unipoly.hpp"

namespace sigma {

Polynomial shift(const Polynomial& p, unsigned t) {
  if (t == 0) return p;
  return p.map_vars([t](VarId v) { return shifted(v, t); });
}

std::vector<Polynomial> truncation_generators(const GroupSpec& spec, unsigned N) {
  std::vector<Polynomial> gens;
  for (const auto& f : spec.generators) {
    if (f.is_zero_poly()) continue;
    unsigned r = f.max_shift();
    for (unsigned t = 0; t + r <= N; ++t) gens.push_back(shift(f, t));
  }
  auto amb = rabinowitsch_upto(spec.ambient, N);
  gens.insert(gens.end(), amb.begin(), amb.end());
  return gens;
}

IdealBasis prolongation_ideal(const GroupSpec& spec, unsigned i, unsigned N) {
  if (N < i) throw Error(Err::LevelTooSmall, "prolongation level N below contraction level i");
  return eliminate(truncation_generators(spec, N), level_universe(spec.ambient, i),
                   level_universe(spec.ambient, N));
}

ClosureOutcome closure_ideal_step(const GroupSpec& spec, unsigned i, const ClosureOptions& opt,
                                  const IdealBasis* below) {
  if (opt.lookahead < 1) throw Error(Err::BadInput, "lookahead must be at least 1");
  std::map<unsigned, IdealBasis> memo;
  auto E = [&](unsigned N) -> const IdealBasis& {
    auto it = memo.find(N);
    if (it == memo.end()) it = memo.emplace(N, prolongation_ideal(spec, i, N)).first;
    return it->second;
  };

  unsigned cap = i + opt.budget_extra;
  unsigned settled = 0;
  bool stabilized = false;
  for (unsigned N = i; N <= cap; ++N) {
    if (ideal_equal(E(N), E(N + opt.lookahead))) {
      settled = N;
      stabilized = true;
      break;
    }
  }
  if (!stabilized)
    throw Error(Err::BudgetExceeded, "level " + std::to_string(i) +
                                         " prolongation did not settle by N = " +
                                         std::to_string(cap));

  ClosureOutcome out;
  out.ideal = E(settled);
  out.settled_n = settled;
  if (i == 0) {
    out.verified = true;
  } else {
    // One-step generation: the level below and its shift generate this level.
    ClosureOutcome sub;
    const IdealBasis* prev = below;
    if (prev == nullptr) {
      sub = closure_ideal_step(spec, i - 1, opt, nullptr);
      prev = &sub.ideal;
    }
    std::vector<Polynomial> gens = prev->gens;
    for (const auto& g : prev->gens) gens.push_back(shift(g, 1));
    auto amb = rabinowitsch_upto(spec.ambient, i);
    gens.insert(gens.end(), amb.begin(), amb.end());
    IdealBasis rhs = groebner(gens, MonomialOrder::grevlex(), level_universe(spec.ambient, i));
    out.verified = ideal_equal(out.ideal, rhs);
  }
  return out;
}

ClosureOutcome closure_ideal(const GroupSpec& spec, unsigned i, const ClosureOptions& opt) {
  return closure_ideal_step(spec, i, opt, nullptr);
}

namespace {

constexpr unsigned kFixpointIterationCap = 64;

// Contract to shift >= 1 and rename one step down.
std::vector<Polynomial> sigma_preimage(const IdealBasis& ideal, const AmbientSpec& ambient,
                                       unsigned bound) {
  std::vector<VarId> keep;
  for (unsigned s = 1; s <= bound; ++s) {
    auto layer = shift_universe(ambient, s);
    keep.insert(keep.end(), layer.begin(), layer.end());
  }
  IdealBasis high = eliminate(ideal, keep);
  std::vector<Polynomial> down;
  for (const auto& g : high.gens)
    down.push_back(g.map_vars([](VarId v) {
      v.shift -= 1;
      return v;
    }));
  return down;
}

IdealBasis level_basis(const std::vector<Polynomial>& gens, const AmbientSpec& ambient,
                       unsigned bound) {
  return groebner(gens, MonomialOrder::grevlex(), level_universe(ambient, bound));
}

}  // namespace

ClosureResult reflexive_closure(const GroupSpec& spec, unsigned bound) {
  if (bound < spec.order())
    throw Error(Err::LevelTooSmall, "closure bound below the generator order");
  IdealBasis cur = level_basis(truncation_generators(spec, bound), spec.ambient, bound);
  bool closed = false;
  for (unsigned pass = 0; pass < kFixpointIterationCap; ++pass) {
    std::vector<Polynomial> gens = cur.gens;
    auto down = sigma_preimage(cur, spec.ambient, bound);
    gens.insert(gens.end(), down.begin(), down.end());
    IdealBasis next = level_basis(gens, spec.ambient, bound);
    if (ideal_equal(next, cur)) {
      closed = true;
      break;
    }
    cur = std::move(next);
  }
  return ClosureResult{cur.gens, ClosureResult::Kind::Reflexive, bound, closed};
}

namespace {

// Visible two-factor splits of a basis element: monomial content against the
// primitive part, single variable powers against the rest of a monomial, and
// the squarefree part of a univariate element against its cofactor.
std::vector<std::pair<Polynomial, Polynomial>> visible_splits(const Polynomial& p) {
  std::vector<std::pair<Polynomial, Polynomial>> out;
  if (p.is_zero_poly() || p.is_constant()) return out;

  // Monomial content: gcd of all term monomials.
  Monomial content;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      content = m;
      first = false;
    } else {
      Monomial g;
      for (const auto& [v, e] : content.entries()) {
        std::uint32_t e2 = m.exponent(v);
        if (e2 > 0) g = g * Monomial::var(v, std::min(e, e2));
      }
      content = g;
    }
  }
  if (!content.is_one()) {
    Polynomial prim;
    for (const auto& [m, c] : p.terms())
      prim += Polynomial::monomial(m.divide(content), c);
    if (!prim.is_constant())
      out.push_back({Polynomial::monomial(content), prim});
    // Variable-power splits inside a pure monomial.
    if (p.term_count() == 1 && content.entries().size() >= 2) {
      for (const auto& [v, e] : content.entries()) {
        Monomial restm = content.divide(Monomial::var(v, e));
        out.push_back({Polynomial::monomial(Monomial::var(v, e)),
                       Polynomial::monomial(restm, p.terms()[0].second)});
      }
    }
  }

  // Univariate element with a repeated factor: squarefree part times cofactor.
  std::vector<VarId> vars;
  p.collect_vars(vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() == 1) {
    UniPoly u = UniPoly::from_polynomial(p, vars[0]);
    UniPoly sf = squarefree_part(u);
    if (sf.degree() >= 1 && sf.degree() < u.degree()) {
      UniPoly cof = UniPoly::divmod(u, sf).first;
      out.push_back({sf.lift(vars[0]), cof.lift(vars[0])});
    }
  }
  return out;
}

ClosureResult enrichment_pass(std::vector<Polynomial> start, const GroupSpec& spec, unsigned bound,
                              bool reflexive_first, ClosureResult::Kind kind) {
  GroupSpec work{spec.ambient, start, spec.name};
  for (const auto& g : spec.generators) work.generators.push_back(g);

  IdealBasis cur;
  if (reflexive_first) {
    ClosureResult refl = reflexive_closure(work, bound);
    cur = level_basis(refl.generators, spec.ambient, bound);
  } else {
    cur = level_basis(truncation_generators(work, bound), spec.ambient, bound);
  }

  std::vector<Polynomial> adjoined;
  for (const auto& p : cur.gens) {
    for (const auto& [f, g] : visible_splits(p)) {
      for (const auto& [a, b] : {std::pair(f, g), std::pair(g, f)}) {
        Polynomial mixed = a * shift(b, 1);
        if (mixed.max_shift() <= bound && !in_ideal(mixed, cur)) adjoined.push_back(mixed);
      }
    }
  }

  // Radical enrichment on univariate eliminants, zero-dimensional case only.
  if (vecdim(cur).has_value()) {
    for (VarId v : cur.universe) {
      IdealBasis uni = eliminate(cur, {v});
      if (uni.gens.size() == 1 && !uni.is_unit_ideal()) {
        UniPoly u = UniPoly::from_polynomial(uni.gens[0], v);
        UniPoly sf = squarefree_part(u);
        if (sf.degree() >= 1 && sf.degree() < u.degree()) {
          Polynomial lifted = sf.lift(v);
          if (!in_ideal(lifted, cur)) adjoined.push_back(lifted);
        }
      }
    }
  }

  std::vector<Polynomial> gens = cur.gens;
  gens.insert(gens.end(), adjoined.begin(), adjoined.end());
  IdealBasis next = level_basis(gens, spec.ambient, bound);
  bool unchanged = adjoined.empty() && ideal_equal(next, cur);
  return ClosureResult{next.gens, kind, bound, unchanged};
}

}  // namespace

ClosureResult perfect_closure_step(const std::vector<Polynomial>& gens, const GroupSpec& spec,
                                   unsigned bound) {
  return enrichment_pass(gens, spec, bound, true, ClosureResult::Kind::Perfect);
}

ClosureResult wellmixed_closure_step(const std::vector<Polynomial>& gens, const GroupSpec& spec,
                                     unsigned bound) {
  return enrichment_pass(gens, spec, bound, false, ClosureResult::Kind::WellMixed);
}

}  // namespace sigma
