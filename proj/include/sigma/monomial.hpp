#ifndef SIGMA_MONOMIAL_HPP
#define SIGMA_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sigma/varid.hpp"

namespace sigma {

// Sparse monomial: (variable, exponent) pairs, sorted ascending by VarId,
// exponents > 0. The empty monomial is 1.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
  }
  static Monomial var(VarId v, std::uint32_t exp = 1) {
    Monomial m;
    if (exp > 0) m.e_.push_back({v, exp});
    return m;
  }

  bool is_one() const { return e_.empty(); }
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
  }
  const std::vector<Entry>& entries() const { return e_; }
  std::uint32_t exponent(VarId v) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const Entry& a, VarId b) { return a.first < b; });
    return (it != e_.end() && it->first == v) ? it->second : 0;
  }
  std::uint32_t max_shift() const {
    std::uint32_t s = 0;
    for (const auto& [v, e] : e_) s = std::max(s, v.shift);
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e_.reserve(a.e_.size() + b.e_.size());
    auto i = a.e_.begin(), j = b.e_.begin();
    while (i != a.e_.end() && j != b.e_.end()) {
      if (i->first < j->first) r.e_.push_back(*i++);
      else if (j->first < i->first) r.e_.push_back(*j++);
      else {
        r.e_.push_back({i->first, i->second + j->second});
        ++i, ++j;
      }
    }
    r.e_.insert(r.e_.end(), i, a.e_.end());
    r.e_.insert(r.e_.end(), j, b.e_.end());
    return r;
  }

  bool divides(const Monomial& m) const {
    auto i = e_.begin();
    auto j = m.e_.begin();
    while (i != e_.end()) {
      while (j != m.e_.end() && j->first < i->first) ++j;
      if (j == m.e_.end() || !(j->first == i->first) || j->second < i->second) return false;
      ++i;
    }
    return true;
  }

  // this / d; requires d.divides(*this).
  Monomial divide(const Monomial& d) const {
    Monomial r;
    auto j = d.e_.begin();
    for (const auto& [v, e] : e_) {
      std::uint32_t sub = 0;
      if (j != d.e_.end() && j->first == v) sub = (j++)->second;
      if (e > sub) r.e_.push_back({v, e - sub});
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.e_.begin(), j = b.e_.begin();
    while (i != a.e_.end() && j != b.e_.end()) {
      if (i->first < j->first) r.e_.push_back(*i++);
      else if (j->first < i->first) r.e_.push_back(*j++);
      else {
        r.e_.push_back({i->first, std::max(i->second, j->second)});
        ++i, ++j;
      }
    }
    r.e_.insert(r.e_.end(), i, a.e_.end());
    r.e_.insert(r.e_.end(), j, b.e_.end());
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    auto i = a.e_.begin(), j = b.e_.begin();
    while (i != a.e_.end() && j != b.e_.end()) {
      if (i->first < j->first) ++i;
      else if (j->first < i->first) ++j;
      else return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  // Structural order, used only for canonical containers; not a monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  template <typename F>
  Monomial map_vars(F&& f) const {  // f: VarId -> VarId, must stay injective
    std::vector<Entry> out;
    out.reserve(e_.size());
    for (const auto& [v, e] : e_) out.push_back({f(v), e});
    return Monomial(std::move(out));
  }

 private:
  std::vector<Entry> e_;
};

}  // namespace sigma

#endif
