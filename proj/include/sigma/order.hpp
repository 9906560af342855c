#ifndef SIGMA_ORDER_HPP
#define SIGMA_ORDER_HPP

#include <algorithm>
#include <memory>
#include <vector>

#include "sigma/monomial.hpp"

namespace sigma {

// Degree-reverse-lexicographic compare restricted to the variables selected
// by `sel` (sel = nullptr selects everything). Returns <0, 0, >0.
//
// Tie-break: scanning variables from smallest upward, the first exponent
// difference decides; positive difference means the smaller monomial.
namespace detail {

template <typename Sel>
int grevlex_cmp_subset(const Monomial& a, const Monomial& b, Sel&& in) {
  std::uint64_t da = 0, db = 0;
  for (const auto& [v, e] : a.entries())
    if (in(v)) da += e;
  for (const auto& [v, e] : b.entries())
    if (in(v)) db += e;
  if (da != db) return da < db ? -1 : 1;

  auto i = a.entries().begin(), iend = a.entries().end();
  auto j = b.entries().begin(), jend = b.entries().end();
  while (i != iend || j != jend) {
    while (i != iend && !in(i->first)) ++i;
    while (j != jend && !in(j->first)) ++j;
    if (i == iend && j == jend) break;
    // First exponent difference at the smallest variable decides; the side
    // with the positive difference is the smaller monomial.
    if (i == iend) return 1;
    if (j == jend) return -1;
    if (i->first < j->first) return -1;  // a has positive diff at the smallest var
    if (j->first < i->first) return 1;
    if (i->second != j->second) return i->second > j->second ? -1 : 1;
    ++i, ++j;
  }
  return 0;
}

}  // namespace detail

// A monomial order: plain grevlex, or a two-block elimination order
// (grevlex inside each block, eliminated block ranked above the kept one).
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, nullptr); }
  static MonomialOrder block_eliminating(std::vector<VarId> eliminated) {
    std::sort(eliminated.begin(), eliminated.end());
    return MonomialOrder(Kind::Block,
                         std::make_shared<const std::vector<VarId>>(std::move(eliminated)));
  }

  Kind kind() const { return kind_; }
  const std::vector<VarId>& eliminated() const {
    static const std::vector<VarId> none;
    return elim_ ? *elim_ : none;
  }

  bool in_eliminated(VarId v) const {
    return elim_ && std::binary_search(elim_->begin(), elim_->end(), v);
  }

  int cmp(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::Grevlex)
      return detail::grevlex_cmp_subset(a, b, [](VarId) { return true; });
    int c = detail::grevlex_cmp_subset(a, b, [this](VarId v) { return in_eliminated(v); });
    if (c != 0) return c;
    return detail::grevlex_cmp_subset(a, b, [this](VarId v) { return !in_eliminated(v); });
  }
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::Grevlex) return true;
    return a.eliminated() == b.eliminated();
  }

 private:
  MonomialOrder(Kind k, std::shared_ptr<const std::vector<VarId>> e)
      : kind_(k), elim_(std::move(e)) {}
  Kind kind_;
  std::shared_ptr<const std::vector<VarId>> elim_;
};

}  // namespace sigma

#endif
