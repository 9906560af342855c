#ifndef SIGMA_RATIONAL_HPP
#define SIGMA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace sigma {

// Exact rational coefficients. mpq_class keeps values canonical
// (coprime numerator/denominator, positive denominator).
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

// "3", "-3", "2/7"; denominator printed only when != 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace sigma

#endif
