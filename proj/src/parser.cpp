#include "sigma/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "sigma/error.hpp"

namespace sigma {

namespace {

// Maps the grammar's global y/iy numbering onto (factor, coord).
struct NameTable {
  // y index k (1-based) -> (factor, coord); iy index k -> (factor, coord).
  std::map<unsigned, std::pair<unsigned, unsigned>> y, iy;
  int gl_factor = -1;  // the unique GL_n factor, if any
  unsigned gl_n = 0;
  bool multiple_gl = false;

  explicit NameTable(const AmbientSpec& a) {
    unsigned k = 1;
    for (unsigned f = 0; f < a.factors.size(); ++f) {
      const Factor& fac = a.factors[f];
      if (fac.kind == FactorKind::Ga) {
        for (unsigned j = 0; j < fac.n; ++j) y[k++] = {f, j};
      } else if (fac.kind == FactorKind::Gm) {
        for (unsigned j = 0; j < fac.n; ++j) {
          y[k] = {f, j};
          iy[k] = {f, fac.n + j};
          ++k;
        }
      } else {
        if (gl_factor >= 0) multiple_gl = true;
        gl_factor = static_cast<int>(f);
        gl_n = fac.n;
      }
    }
  }
};

struct Parser {
  const std::string& s;
  const AmbientSpec& ambient;
  NameTable names;
  std::size_t pos = 0;

  Parser(const std::string& text, const AmbientSpec& a) : s(text), ambient(a), names(a) {}

  [[noreturn]] void fail(const std::string& expected) {
    throw Error(Err::ParseError, "parse error at position " + std::to_string(pos) +
                                     ": expected " + expected);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  unsigned parse_nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("a natural number");
    unsigned long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + static_cast<unsigned long>(s[pos++] - '0');
    return static_cast<unsigned>(v);
  }

  bool at_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  Rat parse_coeff() {
    skip_ws();
    std::string num;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num += s[pos++];
    if (num.empty()) fail("an integer");
    if (eat('/')) {
      std::string den;
      skip_ws();
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) den += s[pos++];
      if (den.empty() || den == "0") fail("a positive denominator");
      return rat_from_string(num + "/" + den);
    }
    return rat_from_string(num);
  }


  VarId parse_base(unsigned shift) {
    skip_ws();
    if (pos >= s.size()) fail("a coordinate (x, y, iy, idet)");
    if (s.compare(pos, 4, "idet") == 0) {
      pos += 4;
      if (names.gl_factor < 0) fail("idet only applies to a GL factor");
      if (names.multiple_gl) fail("idet is ambiguous with several GL factors");
      return VarId{shift, static_cast<unsigned>(names.gl_factor), names.gl_n * names.gl_n};
    }
    if (s.compare(pos, 2, "iy") == 0) {
      pos += 2;
      unsigned k = parse_nat();
      auto it = names.iy.find(k);
      if (it == names.iy.end()) fail("an invertible coordinate index for iy");
      return VarId{shift, it->second.first, it->second.second};
    }
    if (s[pos] == 'y') {
      ++pos;
      unsigned k = parse_nat();
      auto it = names.y.find(k);
      if (it == names.y.end()) fail("a coordinate index for y");
      return VarId{shift, it->second.first, it->second.second};
    }
    if (s[pos] == 'x') {
      ++pos;
      unsigned r = parse_nat();
      if (!eat('_')) fail("'_' in a matrix coordinate");
      unsigned c = parse_nat();
      if (names.gl_factor < 0) fail("x coordinates require a GL factor");
      if (names.multiple_gl) fail("x is ambiguous with several GL factors");
      if (r < 1 || c < 1 || r > names.gl_n || c > names.gl_n)
        fail("matrix indices within 1.." + std::to_string(names.gl_n));
      return VarId{shift, static_cast<unsigned>(names.gl_factor), (r - 1) * names.gl_n + (c - 1)};
    }
    fail("a coordinate (x, y, iy, idet)");
  }

  VarId parse_var() {
    skip_ws();
    if (pos < s.size() && s[pos] == 's' &&
        pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      ++pos;
      unsigned t = parse_nat();
      if (!eat('(')) fail("'(' after a shift");
      VarId v = parse_base(t);
      if (!eat(')')) fail("')'");
      return v;
    }
    return parse_base(0);
  }

  Monomial parse_factors() {
    Monomial m;
    while (true) {
      VarId v = parse_var();
      unsigned e = 1;
      if (eat('^')) e = parse_nat();
      m = m * Monomial::var(v, e);
      std::size_t save = pos;
      if (!eat('*')) break;
      if (at_digit()) {  // coefficients only lead a term
        pos = save;
        break;
      }
    }
    return m;
  }

  Polynomial parse_term() {
    skip_ws();
    if (at_digit()) {
      Rat c = parse_coeff();
      std::size_t save = pos;
      if (eat('*')) {
        if (at_digit()) fail("a factor after '*'");
        Monomial m = parse_factors();
        return Polynomial::monomial(m, c);
      }
      pos = save;
      return Polynomial::constant(c);
    }
    return Polynomial::monomial(parse_factors());
  }

  Polynomial parse_poly() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+')) acc += parse_term();
      else if (eat('-')) acc -= parse_term();
      else break;
    }
    skip_ws();
    if (pos != s.size()) fail("'+', '-' or end of input");
    return acc;
  }
};

}  // namespace

Polynomial parse_diff_poly(const std::string& text, const AmbientSpec& ambient) {
  Parser p(text, ambient);
  return p.parse_poly();
}

std::string var_name(const AmbientSpec& ambient, VarId v) {
  NameTable names(ambient);
  std::string base;
  const Factor& f = ambient.factors.at(v.factor);
  if (f.kind == FactorKind::GLn) {
    unsigned n = f.n;
    if (v.coord == n * n) base = "idet";
    else base = "x" + std::to_string(v.coord / n + 1) + "_" + std::to_string(v.coord % n + 1);
  } else {
    bool inverse = is_inverse_coord(ambient, v.factor, v.coord);
    unsigned j = inverse ? v.coord - f.n : v.coord;
    for (const auto& [k, fc] : names.y) {
      if (fc.first == v.factor && fc.second == j) {
        base = (inverse ? "iy" : "y") + std::to_string(k);
        break;
      }
    }
    if (base.empty()) throw Error(Err::Internal, "coordinate has no printable name");
  }
  if (v.shift == 0) return base;
  return "s" + std::to_string(v.shift) + "(" + base + ")";
}

std::string print_poly(const Polynomial& p, const AmbientSpec& ambient) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool need_coeff = !is_one(a) || m.is_one();
    if (need_coeff) out << rat_to_string(a);
    bool need_star = need_coeff;
    for (const auto& [v, e] : m.entries()) {
      if (need_star) out << "*";
      out << var_name(ambient, v);
      if (e > 1) out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

std::string print_poly(const Polynomial& p) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool need_coeff = !is_one(a) || m.is_one();
    if (need_coeff) out << rat_to_string(a);
    bool need_star = need_coeff;
    for (const auto& [v, e] : m.entries()) {
      if (need_star) out << "*";
      out << "v" << v.factor << "c" << v.coord << "s" << v.shift;
      if (e > 1) out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace sigma
