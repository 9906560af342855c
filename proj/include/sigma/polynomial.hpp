#ifndef SIGMA_POLYNOMIAL_HPP
#define SIGMA_POLYNOMIAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sigma/monomial.hpp"
#include "sigma/order.hpp"
#include "sigma/rational.hpp"

namespace sigma {

// Exact multivariate polynomial over Q. Terms are kept sorted descending
// under canonical grevlex, with no zero coefficients; equal content means
// equal representation.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rat>;

  Polynomial() = default;
  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rat& c) {
    Polynomial p;
    if (!is_zero(c)) p.t_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial var(VarId v) { return monomial(Monomial::var(v)); }
  static Polynomial monomial(const Monomial& m, const Rat& c = 1) {
    Polynomial p;
    if (!is_zero(c)) p.t_.push_back({m, c});
    return p;
  }
  static Polynomial from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.t_ = std::move(terms);
    p.normalize();
    return p;
  }

  bool is_zero_poly() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  Rat constant_value() const {  // only meaningful when is_constant()
    return t_.empty() ? Rat(0) : t_[0].second;
  }
  std::size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
  }
  std::uint32_t max_shift() const {
    std::uint32_t s = 0;
    for (const auto& [m, c] : t_) s = std::max(s, m.max_shift());
    return s;
  }
  void collect_vars(std::vector<VarId>& out) const {
    for (const auto& [m, c] : t_)
      for (const auto& [v, e] : m.entries()) out.push_back(v);
  }

  Rat coefficient(const Monomial& m) const {
    for (const auto& [mm, c] : t_)
      if (mm == m) return c;
    return Rat(0);
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merged(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merged(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::map<Monomial, Rat, StoreLess> acc;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Monomial m = ma * mb;
        auto [it, fresh] = acc.try_emplace(m, ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    return from_map(acc);
  }
  friend Polynomial operator*(const Rat& c, const Polynomial& a) {
    if (is_zero(c)) return Polynomial();
    Polynomial r = a;
    for (auto& [m, cc] : r.t_) cc *= c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(std::uint32_t e) const {
    Polynomial r = constant(1);
    for (std::uint32_t k = 0; k < e; ++k) r *= *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }
  friend bool operator<(const Polynomial& a, const Polynomial& b) {  // structural, for containers
    return a.t_ < b.t_;
  }

  // Rename variables through an injective map.
  Polynomial map_vars(const std::function<VarId(VarId)>& f) const {
    Polynomial r;
    r.t_.reserve(t_.size());
    for (const auto& [m, c] : t_) r.t_.push_back({m.map_vars(f), c});
    r.normalize();
    return r;
  }

  // Substitute images for every variable; vars absent from `image` stay fixed.
  Polynomial substitute(const std::function<const Polynomial*(VarId)>& image) const {
    Polynomial out;
    for (const auto& [m, c] : t_) {
      Polynomial term = constant(c);
      for (const auto& [v, e] : m.entries()) {
        const Polynomial* img = image(v);
        if (img == nullptr)
          term *= Polynomial::monomial(Monomial::var(v, e));
        else
          term *= img->pow(e);
      }
      out += term;
    }
    return out;
  }

  // Evaluate with a rational value for every variable.
  Rat evaluate(const std::function<Rat(VarId)>& value) const {
    Rat out(0);
    for (const auto& [m, c] : t_) {
      Rat t = c;
      for (const auto& [v, e] : m.entries()) {
        Rat base = value(v);
        for (std::uint32_t k = 0; k < e; ++k) t *= base;
      }
      out += t;
    }
    return out;
  }

 private:
  // Canonical storage order: grevlex descending.
  struct StoreLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return detail::grevlex_cmp_subset(a, b, [](VarId) { return true; }) > 0;
    }
  };

  static Polynomial from_map(const std::map<Monomial, Rat, StoreLess>& acc) {
    Polynomial r;
    r.t_.reserve(acc.size());
    for (const auto& [m, c] : acc)
      if (!is_zero(c)) r.t_.push_back({m, c});
    return r;
  }

  static Polynomial merged(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    StoreLess less;
    auto i = a.t_.begin();
    auto j = b.t_.begin();
    while (i != a.t_.end() && j != b.t_.end()) {
      if (less(i->first, j->first)) {
        r.t_.push_back(*i++);
      } else if (less(j->first, i->first)) {
        r.t_.push_back({j->first, subtract ? Rat(-j->second) : j->second});
        ++j;
      } else {
        Rat c = subtract ? Rat(i->second - j->second) : Rat(i->second + j->second);
        if (!is_zero(c)) r.t_.push_back({i->first, c});
        ++i, ++j;
      }
    }
    for (; i != a.t_.end(); ++i) r.t_.push_back(*i);
    for (; j != b.t_.end(); ++j) r.t_.push_back({j->first, subtract ? Rat(-j->second) : j->second});
    return r;
  }

  void normalize() {
    std::map<Monomial, Rat, StoreLess> acc;
    for (auto& [m, c] : t_) {
      auto [it, fresh] = acc.try_emplace(m, c);
      if (!fresh) it->second += c;
    }
    *this = from_map(acc);
  }

  std::vector<Term> t_;
};

}  // namespace sigma

#endif
