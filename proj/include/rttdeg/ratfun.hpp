#ifndef RTTDEG_RATFUN_HPP
#define RTTDEG_RATFUN_HPP

#include <string>
#include <utility>

#include "rttdeg/errors.hpp"
#include "rttdeg/poly.hpp"

namespace rttdeg {

// Element of the rational function field in one variable.  Canonical form:
// monic denominator, gcd(num, den) = 1, zero is 0/1.  Equality of values is
// therefore equality of representations.
class RatFun {
 public:
  RatFun() : num_(), den_(Rational(1)) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit RatFun(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
  explicit RatFun(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  explicit RatFun(long c) : num_(Rational(c)), den_(Rational(1)) {}

  static RatFun q() { return RatFun(Poly::var(1)); }
  // q^k for any integer k; negative powers land in the denominator.
  static RatFun qpow(int k) {
    if (k >= 0) return RatFun(Poly::var(k));
    return RatFun(Poly(Rational(1)), Poly::var(-k));
  }
  // q - q^{-1} = (q^2 - 1)/q
  static RatFun q_minus_qinv() {
    return RatFun(Poly({Rational(-1), Rational(0), Rational(1)}), Poly::var(1));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero("RatFun: division by zero");
    if (a.is_zero()) return RatFun();
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
  friend bool operator<(const RatFun& a, const RatFun& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  // Order of vanishing at the point x = c (negative for a pole).
  int valuation_at(const Rational& c) const {
    if (is_zero()) throw ZeroInput("RatFun::valuation_at of zero");
    return num_.root_multiplicity(c) - den_.root_multiplicity(c);
  }
  int q1_valuation() const { return valuation_at(Rational(1)); }

  bool integral_at_q1() const { return is_zero() || q1_valuation() >= 0; }

  // lim_{x -> c}: 0 when the valuation is positive, the deflated value at
  // valuation 0, and a pole error otherwise.
  Rational limit_at(const Rational& c) const {
    if (is_zero()) return Rational(0);
    Poly n = num_, d = den_;
    while (n.eval(c) == 0 && d.eval(c) == 0) {
      n = n.deflate(c);
      d = d.deflate(c);
    }
    if (d.eval(c) == 0) throw PoleAtQ1("RatFun::limit_at: pole");
    return n.eval(c) / d.eval(c);
  }
  Rational limit_q1() const { return limit_at(Rational(1)); }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw PoleAtQ1("RatFun::eval: pole at evaluation point");
    return num_.eval(x) / d;
  }

  std::string to_string(const std::string& var = "q") const {
    if (den_.is_one()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    return "(" + n + ")/(" + d + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("RatFun: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::div_exact(num_, g);
      den_ = Poly::div_exact(den_, g);
    }
    Rational lc = den_.lc();
    if (lc != 1) {
      Rational inv = Rational(1) / lc;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_, den_;
};

inline RatFun ratfun_arith(const RatFun& a, const RatFun& b, char op) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    default: throw InvalidConfig("ratfun_arith: unknown op");
  }
}

}  // namespace rttdeg

#endif
