#include "sigma/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sigma/error.hpp"

namespace sigma {

namespace {

// Working form: terms sorted descending under the active order.
using Terms = std::vector<Polynomial::Term>;

Terms to_working(const Polynomial& p, const MonomialOrder& ord) {
  Terms t = p.terms();
  std::stable_sort(t.begin(), t.end(), [&](const auto& a, const auto& b) {
    return ord.cmp(a.first, b.first) > 0;
  });
  return t;
}

Polynomial from_working(Terms t) { return Polynomial::from_terms(std::move(t)); }

// a -= c * m * b, leading terms of the scaled b cancelling against a[pos0].
Terms axpy(const Terms& a, const Rat& c, const Monomial& m, const Terms& b,
           const MonomialOrder& ord) {
  Terms r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial mb = b[j].first * m;
    int cmp = ord.cmp(a[i].first, mb);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back({mb, -c * b[j].second});
      ++j;
    } else {
      Rat cc = a[i].second - c * b[j].second;
      if (!is_zero(cc)) r.push_back({a[i].first, cc});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back({b[j].first * m, -c * b[j].second});
  return r;
}

void make_monic(Terms& t) {
  if (t.empty()) return;
  Rat lc = t[0].second;
  if (is_one(lc)) return;
  for (auto& [m, c] : t) c /= lc;
}

// Full division: returns the remainder (every term reducible by no divisor).
// Among the eligible reducers the one with the fewest terms wins (smallest
// fill-in), ties by position.
Terms divide(Terms h, const std::vector<Terms>& basis, const MonomialOrder& ord) {
  Terms rem;
  while (!h.empty()) {
    const Terms* red = nullptr;
    for (const auto& g : basis) {
      if (g.empty() || !g[0].first.divides(h[0].first)) continue;
      if (red == nullptr || g.size() < red->size()) red = &g;
    }
    if (red != nullptr) {
      Rat c = h[0].second / (*red)[0].second;
      h = axpy(h, c, h[0].first.divide((*red)[0].first), *red, ord);
    } else {
      rem.push_back(h[0]);
      h.erase(h.begin());
    }
  }
  return rem;
}

Terms spoly(const Terms& f, const Terms& g, const MonomialOrder& ord) {
  Monomial l = lcm(f[0].first, g[0].first);
  Terms a = axpy(Terms{}, Rat(-1) / f[0].second, l.divide(f[0].first), f, ord);
  return axpy(a, Rat(1) / g[0].second, l.divide(g[0].first), g, ord);
}

struct Pair {
  std::size_t i, j;
  Monomial l;
};

}  // namespace

std::vector<VarId> merge_universe(std::vector<VarId> universe,
                                  const std::vector<Polynomial>& polys) {
  for (const auto& p : polys) p.collect_vars(universe);
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  return universe;
}

IdealBasis groebner(std::vector<Polynomial> gens, MonomialOrder order,
                    std::vector<VarId> universe) {
  universe = merge_universe(std::move(universe), gens);

  std::vector<Terms> G;
  for (const auto& p : gens) {
    if (p.is_zero_poly()) continue;
    if (p.is_constant()) {
      return IdealBasis{{Polynomial::constant(1)}, order, universe, true};
    }
    Terms t = to_working(p, order);
    make_monic(t);
    G.push_back(std::move(t));
  }
  // Deterministic starting order: ascending leading monomial, then size.
  std::sort(G.begin(), G.end(), [&](const Terms& a, const Terms& b) {
    int c = order.cmp(a[0].first, b[0].first);
    if (c != 0) return c < 0;
    return a < b;
  });
  G.erase(std::unique(G.begin(), G.end()), G.end());

  // Gebauer-Moeller pair bookkeeping. `live` marks basis elements whose lead
  // is not superseded by a later one; only live elements spawn pairs.
  std::vector<bool> live;
  std::vector<Pair> queue;
  auto install = [&](std::size_t t) {
    const Monomial& lt = G[t][0].first;
    // New candidate pairs against live predecessors.
    std::vector<Pair> cand;
    for (std::size_t i = 0; i < t; ++i)
      if (live[i]) cand.push_back({i, t, lcm(G[i][0].first, lt)});
    // Drop (i,t) when another candidate's lcm properly divides its lcm, or an
    // equal lcm belongs to a smaller index.
    std::vector<Pair> kept;
    for (const Pair& c : cand) {
      bool drop = false;
      for (const Pair& d : cand) {
        if (d.i == c.i) continue;
        if (d.l == c.l ? d.i < c.i : d.l.divides(c.l)) {
          drop = true;
          break;
        }
      }
      if (!drop) kept.push_back(c);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& c) { return coprime(G[c.i][0].first, lt); });
    // Prune old pairs strictly refined by the newcomer.
    std::erase_if(queue, [&](const Pair& p) {
      return lt.divides(p.l) && !(lcm(G[p.i][0].first, lt) == p.l) &&
             !(lcm(G[p.j][0].first, lt) == p.l);
    });
    queue.insert(queue.end(), kept.begin(), kept.end());
    for (std::size_t i = 0; i < t; ++i)
      if (live[i] && lt.divides(G[i][0].first)) live[i] = false;
    live.push_back(true);
  };
  for (std::size_t t = 0; t < G.size(); ++t) install(t);

  while (!queue.empty()) {
    // Normal selection: smallest lcm under the order, ties by index.
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      int c = order.cmp(queue[k].l, queue[best].l);
      if (c < 0 || (c == 0 && std::pair(queue[k].i, queue[k].j) <
                                  std::pair(queue[best].i, queue[best].j)))
        best = k;
    }
    Pair pr = queue[best];
    queue.erase(queue.begin() + best);

    Terms r = divide(spoly(G[pr.i], G[pr.j], order), G, order);
    if (!r.empty()) {
      if (r[0].first.is_one()) {
        return IdealBasis{{Polynomial::constant(1)}, order, universe, true};
      }
      make_monic(r);
      G.push_back(std::move(r));
      install(G.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Terms> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j][0].first.divides(G[i][0].first) &&
          !(G[i][0].first == G[j][0].first && j > i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Interreduce tails.
  std::vector<Terms> reduced = minimal;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Terms> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Terms t = divide(minimal[i], others, order);
    make_monic(t);
    reduced[i] = std::move(t);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
    return order.cmp(a[0].first, b[0].first) < 0;
  });

  IdealBasis out;
  out.order = order;
  out.universe = universe;
  out.groebner = true;
  for (auto& t : reduced) out.gens.push_back(from_working(std::move(t)));
  return out;
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& basis) {
  if (!basis.groebner) throw Error(Err::BadInput, "normal_form requires a Groebner basis");
  std::vector<Terms> G;
  G.reserve(basis.gens.size());
  for (const auto& g : basis.gens) G.push_back(to_working(g, basis.order));
  return from_working(divide(to_working(p, basis.order), G, basis.order));
}

bool reduces_to_zero(const Polynomial& p, const std::vector<Polynomial>& gens,
                     const MonomialOrder& order) {
  std::vector<Terms> G;
  G.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero_poly()) G.push_back(to_working(g, order));
  return divide(to_working(p, order), G, order).empty();
}

IdealBasis eliminate(const std::vector<Polynomial>& gens, std::vector<VarId> keep,
                     const std::vector<VarId>& universe) {
  std::sort(keep.begin(), keep.end());
  std::vector<VarId> all = merge_universe(universe, gens);
  std::vector<VarId> elim;
  for (VarId v : all)
    if (!std::binary_search(keep.begin(), keep.end(), v)) elim.push_back(v);

  IdealBasis big = groebner(gens, MonomialOrder::block_eliminating(elim), all);

  IdealBasis out;
  out.order = MonomialOrder::grevlex();
  out.universe = keep;
  out.groebner = true;
  for (const auto& g : big.gens) {
    std::vector<VarId> support;
    g.collect_vars(support);
    bool kept = std::all_of(support.begin(), support.end(), [&](VarId v) {
      return std::binary_search(keep.begin(), keep.end(), v);
    });
    if (kept) out.gens.push_back(g);
  }
  // The restriction of the block order to kept-variable monomials is grevlex,
  // so the filtered set is already the reduced grevlex basis; only the sort
  // might differ if leads tie structurally (they cannot, leads are distinct).
  std::sort(out.gens.begin(), out.gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return out.order.cmp(a.terms().front().first, b.terms().front().first) < 0;
  });
  return out;
}

IdealBasis eliminate(const IdealBasis& ideal, std::vector<VarId> keep) {
  return eliminate(ideal.gens, std::move(keep), ideal.universe);
}

namespace {

std::vector<std::vector<VarId>> lead_supports(const IdealBasis& basis) {
  std::vector<std::vector<VarId>> sup;
  for (const auto& g : basis.gens) {
    std::vector<VarId> s;
    for (const auto& [v, e] : g.terms().front().first.entries()) s.push_back(v);
    sup.push_back(std::move(s));
  }
  // Keep only minimal supports.
  std::sort(sup.begin(), sup.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<VarId>> minimal;
  for (const auto& s : sup) {
    bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const auto& t) {
      return std::includes(s.begin(), s.end(), t.begin(), t.end());
    });
    if (!covered) minimal.push_back(s);
  }
  return minimal;
}

void max_independent(const std::vector<std::vector<VarId>>& supports,
                     std::vector<VarId> allowed, std::size_t& best,
                     std::set<std::vector<VarId>>& seen) {
  if (allowed.size() <= best) return;
  if (seen.count(allowed)) return;
  seen.insert(allowed);
  const std::vector<VarId>* hit = nullptr;
  for (const auto& s : supports) {
    if (std::includes(allowed.begin(), allowed.end(), s.begin(), s.end())) {
      hit = &s;
      break;
    }
  }
  if (hit == nullptr) {
    best = std::max(best, allowed.size());
    return;
  }
  for (VarId v : *hit) {
    std::vector<VarId> next;
    next.reserve(allowed.size() - 1);
    for (VarId w : allowed)
      if (!(w == v)) next.push_back(w);
    max_independent(supports, std::move(next), best, seen);
  }
}

}  // namespace

unsigned krull_dim(const IdealBasis& basis) {
  if (!basis.groebner) throw Error(Err::BadInput, "krull_dim requires a Groebner basis");
  if (basis.is_unit_ideal()) throw Error(Err::UnitIdeal, "krull_dim of the unit ideal");
  if (basis.gens.empty()) return static_cast<unsigned>(basis.universe.size());
  auto supports = lead_supports(basis);
  std::size_t best = 0;
  std::set<std::vector<VarId>> seen;
  max_independent(supports, basis.universe, best, seen);
  return static_cast<unsigned>(best);
}

namespace {

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& leads) {
  return std::any_of(leads.begin(), leads.end(),
                     [&](const Monomial& l) { return l.divides(m); });
}

std::vector<Monomial> leads_of(const IdealBasis& basis) {
  std::vector<Monomial> leads;
  leads.reserve(basis.gens.size());
  for (const auto& g : basis.gens) {
    Terms t = to_working(g, basis.order);
    leads.push_back(t.front().first);
  }
  return leads;
}

}  // namespace

std::optional<std::uint64_t> vecdim(const IdealBasis& basis) {
  if (!basis.groebner) throw Error(Err::BadInput, "vecdim requires a Groebner basis");
  if (basis.is_unit_ideal()) return 0;  // zero ring
  std::vector<Monomial> leads = leads_of(basis);
  // Finite iff every universe variable carries a pure-power lead.
  for (VarId v : basis.universe) {
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) {
      return l.entries().size() == 1 && l.entries()[0].first == v;
    });
    if (!pure) return std::nullopt;
  }
  std::set<Monomial> staircase;
  std::vector<Monomial> frontier{Monomial()};
  staircase.insert(Monomial());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (VarId v : basis.universe) {
        Monomial m2 = m * Monomial::var(v);
        if (staircase.count(m2) || divisible_by_any(m2, leads)) continue;
        staircase.insert(m2);
        next.push_back(m2);
      }
    }
    frontier = std::move(next);
  }
  return staircase.size();
}

std::vector<Monomial> standard_monomials_bounded(const IdealBasis& basis,
                                                 std::uint64_t maxdeg) {
  if (!basis.groebner)
    throw Error(Err::BadInput, "standard_monomials_bounded requires a Groebner basis");
  if (basis.is_unit_ideal()) return {};
  std::vector<Monomial> leads = leads_of(basis);
  std::set<Monomial> staircase;
  std::vector<Monomial> frontier{Monomial()};
  if (!divisible_by_any(Monomial(), leads)) staircase.insert(Monomial());
  for (std::uint64_t d = 0; d < maxdeg && !frontier.empty(); ++d) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (VarId v : basis.universe) {
        Monomial m2 = m * Monomial::var(v);
        if (staircase.count(m2) || divisible_by_any(m2, leads)) continue;
        staircase.insert(m2);
        next.push_back(m2);
      }
    }
    frontier = std::move(next);
  }
  return {staircase.begin(), staircase.end()};
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
  if (!(a.order == b.order) || a.universe != b.universe)
    throw Error(Err::BadInput, "ideal_equal requires matching universe and order");
  if (a.groebner && b.groebner) return a.gens == b.gens;
  IdealBasis ga = a.groebner ? a : groebner(a.gens, a.order, a.universe);
  IdealBasis gb = b.groebner ? b : groebner(b.gens, b.order, b.universe);
  return ga.gens == gb.gens;
}

bool in_ideal(const Polynomial& p, const IdealBasis& basis) {
  return normal_form(p, basis).is_zero_poly();
}

}  // namespace sigma
