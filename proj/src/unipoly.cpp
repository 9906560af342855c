#include "sigma/unipoly.hpp"

#include <algorithm>
#include <optional>

#include "sigma/error.hpp"

namespace sigma {

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rat& s, const UniPoly& a) {
  std::vector<Rat> c = a.c_;
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Err::Internal, "division by the zero polynomial");
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo;
  int db = b.degree();
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    if (sigma::is_zero(rem.back())) {
      rem.pop_back();
      continue;
    }
    int dr = static_cast<int>(rem.size()) - 1;
    Rat q = rem.back() / b.lead();
    int off = dr - db;
    if (static_cast<int>(quo.size()) < off + 1) quo.resize(off + 1, Rat(0));
    quo[off] += q;
    for (int k = 0; k <= db; ++k) rem[off + k] -= q * b.c_[k];
    while (!rem.empty() && sigma::is_zero(rem.back())) rem.pop_back();
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return (Rat(1) / lead()) * (*this);
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = Rat(static_cast<long>(k)) * c_[k];
  return UniPoly(std::move(c));
}

Rat UniPoly::evaluate(const Rat& x) const {
  Rat acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Polynomial UniPoly::lift(VarId v) const {
  Polynomial p;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!sigma::is_zero(c_[k]))
      p += Polynomial::monomial(Monomial::var(v, static_cast<std::uint32_t>(k)), c_[k]);
  return p;
}

UniPoly UniPoly::from_polynomial(const Polynomial& p, VarId v) {
  std::vector<Rat> c;
  for (const auto& [m, coef] : p.terms()) {
    if (m.entries().size() > 1 || (m.entries().size() == 1 && !(m.entries()[0].first == v)))
      throw Error(Err::Internal, "polynomial is not univariate in the requested variable");
    std::size_t e = m.entries().empty() ? 0 : m.entries()[0].second;
    if (c.size() < e + 1) c.resize(e + 1, Rat(0));
    c[e] = coef;
  }
  return UniPoly(std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = UniPoly::divmod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  auto [q, r] = UniPoly::divmod(p, g);
  return q.monic();
}

namespace {

// Scale a rational polynomial to a primitive integer polynomial.
std::vector<mpz_class> to_integer(const UniPoly& p) {
  mpz_class den(1);
  for (const Rat& c : p.coeffs()) den = den * c.get_den() / gcd(den, c.get_den());
  std::vector<mpz_class> z;
  z.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) z.push_back(mpz_class(c * den));
  mpz_class content(0);
  for (const auto& v : z) content = gcd(content, v);
  if (content != 0)
    for (auto& v : z) v /= content;
  return z;
}

std::vector<mpz_class> divisors_signed(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      mpz_class e = a / d;
      if (e != d) {
        out.push_back(e);
        out.push_back(-e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

UniPoly from_integer(const std::vector<mpz_class>& z) {
  std::vector<Rat> c;
  c.reserve(z.size());
  for (const auto& v : z) c.push_back(Rat(v));
  return UniPoly(std::move(c));
}

// Lagrange interpolation through (points[k], values[k]).
UniPoly interpolate(const std::vector<long>& points, const std::vector<mpz_class>& values) {
  UniPoly acc;
  for (std::size_t k = 0; k < points.size(); ++k) {
    UniPoly basis = UniPoly::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == k) continue;
      basis = basis * UniPoly({Rat(-points[j]), Rat(1)});
      denom *= Rat(points[k] - points[j]);
    }
    acc = acc + (Rat(values[k]) / denom) * basis;
  }
  return acc;
}

// One irreducible factor of a squarefree p (monic output), or nullopt when p
// is irreducible. Complete for deg(p) <= 2*cap; throws beyond that.
std::optional<UniPoly> kronecker_split(const UniPoly& p, unsigned cap) {
  int n = p.degree();
  if (n <= 1) return std::nullopt;
  unsigned half = static_cast<unsigned>(n / 2);
  if (half > cap)
    throw Error(Err::FactorDegreeExceeded,
                "factor search exceeds the degree cap (" + std::to_string(cap) + ")");

  std::vector<mpz_class> z = to_integer(p);
  UniPoly zp = from_integer(z);

  for (unsigned d = 1; d <= half; ++d) {
    // Evaluation points 0, 1, -1, 2, -2, ...
    std::vector<long> pts;
    for (long k = 0; static_cast<unsigned>(pts.size()) < d + 1; ++k) {
      if (k == 0) pts.push_back(0);
      else {
        pts.push_back(k);
        if (pts.size() < d + 1) pts.push_back(-k);
      }
    }
    std::vector<std::vector<mpz_class>> choices(d + 1);
    bool ok = true;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      mpz_class val(Rat(zp.evaluate(Rat(pts[k]))).get_num());
      if (val == 0) {
        // Root found: x - pts[k] is a factor.
        return UniPoly({Rat(-pts[k]), Rat(1)});
      }
      choices[k] = divisors_signed(val);
      if (choices[k].empty()) ok = false;
    }
    if (!ok) continue;

    std::vector<std::size_t> idx(d + 1, 0);
    while (true) {
      std::vector<mpz_class> vals(d + 1);
      for (std::size_t k = 0; k <= d; ++k) vals[k] = choices[k][idx[k]];
      UniPoly cand = interpolate(pts, vals);
      if (cand.degree() == static_cast<int>(d)) {
        bool integral = std::all_of(cand.coeffs().begin(), cand.coeffs().end(),
                                    [](const Rat& c) { return c.get_den() == 1; });
        if (integral) {
          auto [q, r] = UniPoly::divmod(zp, cand);
          if (r.is_zero() && q.degree() >= 1) return cand.monic();
        }
      }
      std::size_t k = 0;
      while (k <= d && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k > d) break;
    }
  }
  return std::nullopt;  // irreducible, certified
}

void factor_squarefree(const UniPoly& p, unsigned cap, std::vector<UniPoly>& out) {
  if (p.degree() <= 0) return;
  auto split = kronecker_split(p, cap);
  if (!split) {
    out.push_back(p.monic());
    return;
  }
  auto [q, r] = UniPoly::divmod(p, *split);
  factor_squarefree(*split, cap, out);
  factor_squarefree(q, cap, out);
}

}  // namespace

std::vector<std::pair<UniPoly, unsigned>> factor_rational(const UniPoly& p, unsigned degree_cap) {
  if (p.degree() <= 0) return {};
  std::vector<UniPoly> irr;
  factor_squarefree(squarefree_part(p), degree_cap, irr);
  std::sort(irr.begin(), irr.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  std::vector<std::pair<UniPoly, unsigned>> out;
  for (const auto& f : irr) {
    unsigned m = 0;
    UniPoly tmp = p.monic();
    while (true) {
      auto [q, r] = UniPoly::divmod(tmp, f);
      if (!r.is_zero()) break;
      tmp = q;
      ++m;
    }
    out.push_back({f, m});
  }
  return out;
}

}  // namespace sigma
