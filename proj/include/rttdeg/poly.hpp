#ifndef RTTDEG_POLY_HPP
#define RTTDEG_POLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rttdeg/errors.hpp"
#include "rttdeg/rational.hpp"

namespace rttdeg {

// Dense univariate polynomial over the rationals.  No trailing zero
// coefficients; the zero polynomial has an empty coefficient vector and
// degree -1.  The variable is anonymous: the same type backs polynomials
// in q and in hbar, printing takes the variable name as an argument.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit Poly(long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly var(int power = 1, Rational scale = Rational(1)) {
    if (power < 0) throw IndexOutOfRange("Poly::var: negative power");
    if (scale == 0) return Poly();
    std::vector<Rational> c(power + 1);
    c[power] = std::move(scale);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  const Rational& lc() const {
    static const Rational zero(0);
    return c_.empty() ? zero : c_.back();
  }
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
      if (k < a.c_.size()) c[k] += a.c_[k];
      if (k < b.c_.size()) c[k] += b.c_[k];
    }
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
      if (k < a.c_.size()) c[k] += a.c_[k];
      if (k < b.c_.size()) c[k] -= b.c_[k];
    }
    return Poly(std::move(c));
  }
  Poly operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Rational& s) {
    if (s == 0) return Poly();
    Poly r(a);
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (size_t k = a.c_.size(); k-- > 0;)
      if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    return false;
  }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("Poly::divrem by zero");
    Poly r = a;
    std::vector<Rational> q;
    int db = b.degree();
    if (r.degree() >= db) q.assign(r.degree() - db + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= db) {
      int shift = r.degree() - db;
      Rational f = r.lc() / b.lc();
      q[shift] = f;
      // r -= f * x^shift * b
      for (int k = 0; k <= db; ++k) r.c_[k + shift] -= f * b.c_[k];
      r.trim();
    }
    return {Poly(std::move(q)), r};
  }

  static Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw NonintegralDivision("Poly::div_exact: nonzero remainder");
    return q;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / lc());
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divrem(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  // Multiplicity of the root x = c (0 when p(c) != 0); throws on the zero poly.
  int root_multiplicity(const Rational& c) const {
    if (is_zero()) throw ZeroInput("Poly::root_multiplicity of zero");
    Poly p = *this;
    int m = 0;
    while (p.eval(c) == 0) {
      p = p.deflate(c);
      ++m;
    }
    return m;
  }

  // Synthetic division by (x - c); requires p(c) = 0.
  Poly deflate(const Rational& c) const {
    if (is_zero() || eval(c) != 0) throw NonintegralDivision("Poly::deflate: not a root");
    std::vector<Rational> q(c_.size() - 1);
    Rational carry(0);
    for (size_t k = c_.size(); k-- > 1;) {
      carry = c_[k] + carry * c;
      q[k - 1] = carry;
    }
    return Poly(std::move(q));
  }

  static Poly pow(const Poly& a, int e) {
    if (e < 0) throw IndexOutOfRange("Poly::pow: negative exponent");
    Poly r{Rational(1)};
    Poly base = a;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::string to_string(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      Rational c = c_[k];
      if (!s.empty()) {
        s += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
      } else if (c < 0) {
        s += "-";
        c = -c;
      }
      bool unit = (c == 1) && k > 0;
      if (!unit) s += rttdeg::to_string(c);
      if (k > 0) {
        if (!unit) s += "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace rttdeg

#endif
