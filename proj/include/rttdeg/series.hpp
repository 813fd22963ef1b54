#ifndef RTTDEG_SERIES_HPP
#define RTTDEG_SERIES_HPP

#include <array>
#include <climits>
#include <map>
#include <string>
#include <vector>

#include "rttdeg/errors.hpp"
#include "rttdeg/ring.hpp"

namespace rttdeg {

// Truncated Laurent series in up to three spectral variables.  Each variable
// carries a validity window [lo, hi]: coefficients with exponents inside the
// window are exact, everything outside has been truncated away and is
// unknown.  lo = NEG_INF / hi = POS_INF mark exact (untruncated) directions.
//
// Window propagation is conservative: a product never claims validity for an
// exponent that could receive a contribution from a truncated tail, and it
// never claims more than the coarser of the two operand windows.
constexpr int kNegInf = INT_MIN / 4;
constexpr int kPosInf = INT_MAX / 4;

using Exp = std::array<int, 3>;

template <class C>
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.size() > 3) throw InvalidDimension("Series: more than 3 variables");
    lo_.assign(vars_.size(), kNegInf);
    hi_.assign(vars_.size(), kPosInf);
  }

  static Series constant(std::vector<std::string> vars, C c) {
    Series s(std::move(vars));
    if (!ring_is_zero(c)) s.t_[Exp{0, 0, 0}] = std::move(c);
    return s;
  }
  static Series monomial(std::vector<std::string> vars, Exp e, C c) {
    Series s(std::move(vars));
    if (!ring_is_zero(c)) s.t_[e] = std::move(c);
    return s;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  int var_index(const std::string& name) const {
    for (size_t k = 0; k < vars_.size(); ++k)
      if (vars_[k] == name) return static_cast<int>(k);
    throw IncompatibleVariables("Series: unknown variable " + name);
  }

  int lo(int v) const { return lo_[v]; }
  int hi(int v) const { return hi_[v]; }
  Series& restrict_window(int v, int lo, int hi) {
    lo_[v] = std::max(lo_[v], lo);
    hi_[v] = std::min(hi_[v], hi);
    drop_outside();
    return *this;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<Exp, C>& terms() const { return t_; }

  bool known(const Exp& e) const {
    for (size_t v = 0; v < vars_.size(); ++v)
      if (e[v] < lo_[v] || e[v] > hi_[v]) return false;
    return true;
  }
  C coeff(const Exp& e) const {
    if (!known(e)) throw TruncationInsufficient("Series::coeff outside validity window");
    auto it = t_.find(e);
    return it == t_.end() ? C() : it->second;
  }

  friend Series operator+(const Series& a, const Series& b) {
    a.check_compatible(b);
    Series r(a.vars_);
    for (size_t v = 0; v < a.vars_.size(); ++v) {
      r.lo_[v] = std::max(a.lo_[v], b.lo_[v]);
      r.hi_[v] = std::min(a.hi_[v], b.hi_[v]);
    }
    r.t_ = a.t_;
    for (const auto& [e, c] : b.t_) {
      auto it = r.t_.find(e);
      if (it == r.t_.end()) {
        r.t_.emplace(e, c);
      } else {
        it->second += c;
        if (ring_is_zero(it->second)) r.t_.erase(it);
      }
    }
    r.drop_outside();
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  Series operator-() const {
    Series r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    Series r(a.vars_);
    for (size_t v = 0; v < a.vars_.size(); ++v) {
      int loa = a.lo_[v], lob = b.lo_[v];
      int maxa = a.max_exp(v), maxb = b.max_exp(v);  // kNegInf when no terms
      int lo = kNegInf;
      if (loa != kNegInf) lo = std::max(lo, loa);
      if (lob != kNegInf) lo = std::max(lo, lob);
      if (loa != kNegInf && maxb != kNegInf) lo = std::max(lo, loa + maxb);
      if (lob != kNegInf && maxa != kNegInf) lo = std::max(lo, lob + maxa);
      if (loa != kNegInf && lob != kNegInf) lo = std::max(lo, loa + lob - 1);
      int hia = a.hi_[v], hib = b.hi_[v];
      int mina = a.min_exp(v), minb = b.min_exp(v);  // kPosInf when no terms
      int hi = kPosInf;
      if (hia != kPosInf) hi = std::min(hi, hia);
      if (hib != kPosInf) hi = std::min(hi, hib);
      if (hia != kPosInf && minb != kPosInf) hi = std::min(hi, hia + minb);
      if (hib != kPosInf && mina != kPosInf) hi = std::min(hi, hib + mina);
      if (hia != kPosInf && hib != kPosInf) hi = std::min(hi, hia + hib + 1);
      r.lo_[v] = lo;
      r.hi_[v] = hi;
    }
    for (const auto& [ea, ca] : a.t_) {
      for (const auto& [eb, cb] : b.t_) {
        Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        bool inside = true;
        for (size_t v = 0; v < a.vars_.size(); ++v)
          if (e[v] < r.lo_[v] || e[v] > r.hi_[v]) inside = false;
        if (!inside) continue;
        C prod = ca * cb;
        if (ring_is_zero(prod)) continue;
        auto it = r.t_.find(e);
        if (it == r.t_.end()) {
          r.t_.emplace(e, std::move(prod));
        } else {
          it->second += prod;
          if (ring_is_zero(it->second)) r.t_.erase(it);
        }
      }
    }
    return r;
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series scaled(const C& s) const {
    Series r(vars_);
    r.lo_ = lo_;
    r.hi_ = hi_;
    if (ring_is_zero(s)) return r;
    for (const auto& [e, c] : t_) {
      C prod = c * s;
      if (!ring_is_zero(prod)) r.t_.emplace(e, std::move(prod));
    }
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    Series<D> r(vars_);
    for (size_t v = 0; v < vars_.size(); ++v) r.set_window(v, lo_[v], hi_[v]);
    for (const auto& [e, c] : t_) {
      D d = f(c);
      if (!ring_is_zero(d)) r.insert_term(e, std::move(d));
    }
    return r;
  }

  // Internal plumbing used by map_coeffs and the matrix layer.
  void set_window(size_t v, int lo, int hi) {
    lo_[v] = lo;
    hi_[v] = hi;
  }
  void insert_term(const Exp& e, C c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (!ring_is_zero(c)) t_.emplace(e, std::move(c));
    } else {
      it->second += c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }

 private:
  void check_compatible(const Series& o) const {
    if (vars_ != o.vars_)
      throw IncompatibleVariables("Series: operand variable sets differ");
  }
  int max_exp(size_t v) const {
    int m = kNegInf;
    for (const auto& [e, c] : t_) m = std::max(m, e[v]);
    return m;
  }
  int min_exp(size_t v) const {
    int m = kPosInf;
    for (const auto& [e, c] : t_) m = std::min(m, e[v]);
    return m;
  }
  void drop_outside() {
    for (auto it = t_.begin(); it != t_.end();) {
      bool inside = true;
      for (size_t v = 0; v < vars_.size(); ++v)
        if (it->first[v] < lo_[v] || it->first[v] > hi_[v]) inside = false;
      it = inside ? std::next(it) : t_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  std::vector<int> lo_, hi_;
  std::map<Exp, C> t_;
};

template <class C>
Series<C> series_arith(const Series<C>& a, const Series<C>& b, char op) {
  switch (op) {
    case '+': return a + b;
    case '*': return a * b;
    default: throw InvalidConfig("series_arith: unknown op");
  }
}

}  // namespace rttdeg

#endif
