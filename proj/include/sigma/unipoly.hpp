#ifndef SIGMA_UNIPOLY_HPP
#define SIGMA_UNIPOLY_HPP

#include <vector>

#include "sigma/polynomial.hpp"

namespace sigma {

// Dense univariate polynomial over Q, coefficients ascending by degree,
// no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }
  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat lead() const { return c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  UniPoly monic() const;
  UniPoly derivative() const;
  Rat evaluate(const Rat& x) const;

  // As a polynomial in the variable v.
  Polynomial lift(VarId v) const;
  // Extract a univariate polynomial; the input must involve only v.
  static UniPoly from_polynomial(const Polynomial& p, VarId v);

 private:
  void strip() {
    while (!c_.empty() && sigma::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic

// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);

// Monic irreducible factors with multiplicities, via squarefree decomposition
// and Kronecker interpolation. Throws FactorDegreeExceeded when irreducibility
// cannot be certified within the degree cap.
std::vector<std::pair<UniPoly, unsigned>> factor_rational(const UniPoly& p, unsigned degree_cap);

}  // namespace sigma

#endif
