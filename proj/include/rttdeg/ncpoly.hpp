#ifndef RTTDEG_NCPOLY_HPP
#define RTTDEG_NCPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "rttdeg/ring.hpp"
#include "rttdeg/word.hpp"

namespace rttdeg {

// Sparse noncommutative polynomial: a finite sum of coefficient-weighted
// words in generator symbols.  Zero coefficients are never stored, so two
// elements are equal iff their term maps coincide.
template <class C>
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(C c) {
    if (!ring_is_zero(c)) t_.emplace(Word{}, std::move(c));
  }
  static NCPoly one() { return NCPoly(ring_one<C>()); }
  static NCPoly generator(Gen g, C c = ring_one<C>()) {
    NCPoly p;
    if (!ring_is_zero(c)) p.t_.emplace(Word{g}, std::move(c));
    return p;
  }
  static NCPoly word(Word w, C c = ring_one<C>()) {
    NCPoly p;
    if (!ring_is_zero(c)) p.t_.emplace(std::move(w), std::move(c));
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::map<Word, C, WordLess>& terms() const { return t_; }

  C coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? C() : it->second;
  }

  void add_term(const Word& w, const C& c) {
    if (ring_is_zero(c)) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second += c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    for (const auto& [w, c] : b.t_) r.add_term(w, c);
    return r;
  }
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    for (const auto& [w, c] : b.t_) r.add_term(w, -c);
    return r;
  }
  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
  }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.t_) {
      for (const auto& [wb, cb] : b.t_) {
        C c = ca * cb;
        if (ring_is_zero(c)) continue;
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, c);
      }
    }
    return r;
  }
  friend NCPoly operator*(const NCPoly& a, const C& s) {
    NCPoly r;
    if (ring_is_zero(s)) return r;
    for (const auto& [w, c] : a.t_) {
      C cs = c * s;
      if (!ring_is_zero(cs)) r.t_.emplace(w, std::move(cs));
    }
    return r;
  }
  friend NCPoly operator*(const C& s, const NCPoly& a) {
    NCPoly r;
    if (ring_is_zero(s)) return r;
    for (const auto& [w, c] : a.t_) {
      C cs = s * c;
      if (!ring_is_zero(cs)) r.t_.emplace(w, std::move(cs));
    }
    return r;
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  int max_word_length() const {
    int m = 0;
    for (const auto& [w, c] : t_) m = std::max<int>(m, static_cast<int>(w.size()));
    return m;
  }
  int max_level() const {
    int m = 0;
    for (const auto& [w, c] : t_)
      for (const Gen& g : w) m = std::max<int>(m, g.level);
    return m;
  }

  // Replace every generator by an image polynomial, multiplying images in
  // word order.  The mapping must be total on the generators that occur.
  template <class F>
  NCPoly substituted(F&& image_of) const {
    NCPoly r;
    for (const auto& [w, c] : t_) {
      NCPoly acc(c);
      for (const Gen& g : w) {
        acc = acc * image_of(g);
        if (acc.is_zero()) break;
      }
      r += acc;
    }
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    NCPoly<D> r;
    for (const auto& [w, c] : t_) {
      D d = f(c);
      if (!ring_is_zero(d)) r.add_term(w, d);
    }
    return r;
  }

  std::string to_string(const std::string& var = "q") const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_to_string(c, var) + ")";
      if (!w.empty()) s += "*" + rttdeg::to_string(w);
    }
    return s;
  }

 private:
  static std::string coeff_to_string(const Rational& c, const std::string&) {
    return rttdeg::to_string(c);
  }
  static std::string coeff_to_string(const Poly& c, const std::string& var) {
    return c.to_string(var);
  }
  static std::string coeff_to_string(const RatFun& c, const std::string& var) {
    return c.to_string(var);
  }

  std::map<Word, C, WordLess> t_;
};

template <class C>
NCPoly<C> nc_mul(const NCPoly<C>& a, const NCPoly<C>& b) {
  return a * b;
}

template <class C>
NCPoly<C> nc_commutator(const NCPoly<C>& a, const NCPoly<C>& b) {
  return a * b - b * a;
}

}  // namespace rttdeg

#endif
