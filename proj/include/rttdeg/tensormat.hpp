#ifndef RTTDEG_TENSORMAT_HPP
#define RTTDEG_TENSORMAT_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rttdeg/algebra.hpp"
#include "rttdeg/ncpoly.hpp"
#include "rttdeg/series.hpp"

namespace rttdeg {

// Sparse matrix acting on a tensor power of C^N with explicitly indexed
// legs.  Row and column indices are tuples of 1-based leg indices; entries
// are truncated series with noncommutative coefficients.  Scalar matrices
// are the special case where every coefficient is a constant word.
//
// Zero entries with a truncated window are kept: they still carry the
// information of how far the zero is trusted.
template <class C>
class TensorMat {
 public:
  using Entry = Series<NCPoly<C>>;

  TensorMat() = default;
  TensorMat(int N, int legs, std::vector<std::string> vars)
      : N_(N), legs_(legs), vars_(std::move(vars)) {
    if (N < 1 || legs < 1 || legs > 3) throw InvalidDimension("TensorMat");
  }

  int N() const { return N_; }
  int legs() const { return legs_; }
  int dim() const {
    int d = 1;
    for (int k = 0; k < legs_; ++k) d *= N_;
    return d;
  }
  const std::vector<std::string>& vars() const { return vars_; }

  int flatten(const std::vector<int>& idx) const {
    int f = 0;
    for (int k = 0; k < legs_; ++k) f = f * N_ + (idx[k] - 1);
    return f;
  }
  std::vector<int> unflatten(int f) const {
    std::vector<int> idx(legs_);
    for (int k = legs_; k-- > 0;) {
      idx[k] = f % N_ + 1;
      f /= N_;
    }
    return idx;
  }

  const std::map<std::pair<int, int>, Entry>& entries() const { return e_; }

  void add(const std::vector<int>& row, const std::vector<int>& col, Entry s) {
    add_flat(flatten(row), flatten(col), std::move(s));
  }
  void add_flat(int r, int c, Entry s) {
    if (s.is_zero() && fully_exact(s) && e_.find({r, c}) == e_.end()) return;
    auto it = e_.find({r, c});
    if (it == e_.end()) {
      e_.emplace(std::make_pair(r, c), std::move(s));
    } else {
      it->second += s;
      if (it->second.is_zero() && fully_exact(it->second)) e_.erase(it);
    }
  }

  friend TensorMat operator*(const TensorMat& a, const TensorMat& b) {
    a.check_shape(b);
    TensorMat r(a.N_, a.legs_, a.vars_);
    std::map<int, std::vector<std::pair<int, const Entry*>>> brows;
    for (const auto& [rc, s] : b.e_) brows[rc.first].push_back({rc.second, &s});
    for (const auto& [rc, sa] : a.e_) {
      auto it = brows.find(rc.second);
      if (it == brows.end()) continue;
      for (const auto& [c, sb] : it->second) r.add_flat(rc.first, c, sa * (*sb));
    }
    return r;
  }
  friend TensorMat operator-(const TensorMat& a, const TensorMat& b) {
    a.check_shape(b);
    TensorMat r = a;
    for (const auto& [rc, s] : b.e_) r.add_flat(rc.first, rc.second, -s);
    return r;
  }
  friend TensorMat operator+(const TensorMat& a, const TensorMat& b) {
    a.check_shape(b);
    TensorMat r = a;
    for (const auto& [rc, s] : b.e_) r.add_flat(rc.first, rc.second, s);
    return r;
  }

  bool is_zero() const {
    for (const auto& [rc, s] : e_)
      if (!s.is_zero()) return false;
    return true;
  }

  // Transposition in the first tensor factor: swap the leg-1 indices of the
  // row and column tuples.
  TensorMat transpose_first() const {
    TensorMat r(N_, legs_, vars_);
    for (const auto& [rc, s] : e_) {
      auto row = unflatten(rc.first), col = unflatten(rc.second);
      std::swap(row[0], col[0]);
      r.add(row, col, s);
    }
    return r;
  }

  template <class F>
  TensorMat map_entries(F&& f) const {
    TensorMat r(N_, legs_, vars_);
    for (const auto& [rc, s] : e_) r.add_flat(rc.first, rc.second, f(s));
    return r;
  }

  // Validity window common to all stored entries of the given variable.
  void common_window(int var, int& lo, int& hi) const {
    lo = kNegInf;
    hi = kPosInf;
    for (const auto& [rc, s] : e_) {
      lo = std::max(lo, s.lo(var));
      hi = std::min(hi, s.hi(var));
    }
  }

 private:
  static bool fully_exact(const Entry& s) {
    for (size_t v = 0; v < s.nvars(); ++v)
      if (s.lo(static_cast<int>(v)) != kNegInf || s.hi(static_cast<int>(v)) != kPosInf)
        return false;
    return true;
  }
  void check_shape(const TensorMat& o) const {
    if (N_ != o.N_ || legs_ != o.legs_ || vars_ != o.vars_)
      throw InvalidDimension("TensorMat: shape/variable mismatch");
  }

  int N_ = 0, legs_ = 1;
  std::vector<std::string> vars_;
  std::map<std::pair<int, int>, Entry> e_;
};

template <class C>
TensorMat<C> tm_identity(int N, int legs, std::vector<std::string> vars) {
  TensorMat<C> m(N, legs, vars);
  for (int f = 0; f < m.dim(); ++f)
    m.add_flat(f, f, Series<NCPoly<C>>::constant(vars, NCPoly<C>::one()));
  return m;
}

// Place a two-leg scalar structure sum_{ab,cd} entry(a,b,c,d) E_ab (x) E_cd
// on legs (legA, legB); spectator legs act as the identity.
template <class C>
TensorMat<C> place_two_leg(int N, int legs, int legA, int legB,
                           const std::vector<std::string>& vars,
                           const std::function<Series<NCPoly<C>>(int, int, int, int)>& entry) {
  TensorMat<C> m(N, legs, vars);
  std::vector<int> row(legs, 1), col(legs, 1);
  int spectators = legs - 2;
  int combos = 1;
  for (int k = 0; k < spectators; ++k) combos *= N;
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int c = 1; c <= N; ++c)
        for (int d = 1; d <= N; ++d) {
          Series<NCPoly<C>> s = entry(a, b, c, d);
          if (s.is_zero()) continue;
          for (int rest = 0; rest < combos; ++rest) {
            int digits = rest;
            for (int k = 0; k < legs; ++k) {
              if (k == legA - 1) {
                row[k] = a;
                col[k] = b;
              } else if (k == legB - 1) {
                row[k] = c;
                col[k] = d;
              } else {
                row[k] = col[k] = digits % N + 1;
                digits /= N;
              }
            }
            m.add(row, col, s);
          }
        }
  return m;
}

// Place a one-leg matrix of noncommutative series (a generating matrix such
// as t(u)) on the given leg.
template <class C>
TensorMat<C> place_one_leg(int N, int legs, int leg,
                           const std::vector<std::string>& vars,
                           const std::function<Series<NCPoly<C>>(int, int)>& entry) {
  TensorMat<C> m(N, legs, vars);
  std::vector<int> row(legs, 1), col(legs, 1);
  int spectators = legs - 1;
  int combos = 1;
  for (int k = 0; k < spectators; ++k) combos *= N;
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      Series<NCPoly<C>> s = entry(a, b);
      if (s.is_zero()) continue;
      for (int rest = 0; rest < combos; ++rest) {
        int digits = rest;
        for (int k = 0; k < legs; ++k) {
          if (k == leg - 1) {
            row[k] = a;
            col[k] = b;
          } else {
            row[k] = col[k] = digits % N + 1;
            digits /= N;
          }
        }
        m.add(row, col, s);
      }
    }
  return m;
}

// Relation family: for each pair of elementary-matrix positions and each
// monomial in the spectral variables, the exact noncommutative coefficient
// of E_ij (x) E_kl u^{eu} v^{ev} in LHS - RHS.
struct RelKey {
  int i, j, k, l, eu, ev;
  friend auto operator<=>(const RelKey&, const RelKey&) = default;
};

template <class C>
struct RelationFamily {
  std::map<RelKey, NCPoly<C>> members;
  int u_lo = kNegInf, u_hi = kPosInf, v_lo = kNegInf, v_hi = kPosInf;
  std::string tag;

  bool window_covers(int eu, int ev) const {
    return eu >= u_lo && eu <= u_hi && ev >= v_lo && ev <= v_hi;
  }
  NCPoly<C> member(int i, int j, int k, int l, int eu, int ev) const {
    if (!window_covers(eu, ev))
      throw TruncationInsufficient("RelationFamily: index outside trusted window");
    auto it = members.find(RelKey{i, j, k, l, eu, ev});
    return it == members.end() ? NCPoly<C>() : it->second;
  }
};

// Expand LHS - RHS of a matrix relation (each side an ordered product of
// two-leg factors) into its component family.
template <class C>
RelationFamily<C> expand_matrix_relation(const std::vector<TensorMat<C>>& lhs,
                                         const std::vector<TensorMat<C>>& rhs,
                                         const std::string& tag = "") {
  auto prod = [](const std::vector<TensorMat<C>>& fs) {
    TensorMat<C> p = fs.front();
    for (size_t k = 1; k < fs.size(); ++k) p = p * fs[k];
    return p;
  };
  TensorMat<C> d = prod(lhs) - prod(rhs);
  if (d.legs() != 2) throw InvalidDimension("expand_matrix_relation: need 2 legs");
  RelationFamily<C> fam;
  fam.tag = tag;
  d.common_window(0, fam.u_lo, fam.u_hi);
  if (d.vars().size() > 1) d.common_window(1, fam.v_lo, fam.v_hi);
  for (const auto& [rc, s] : d.entries()) {
    auto row = d.unflatten(rc.first), col = d.unflatten(rc.second);
    for (const auto& [e, p] : s.terms()) {
      if (p.is_zero()) continue;
      if (e[0] < fam.u_lo || e[0] > fam.u_hi) continue;
      if (d.vars().size() > 1 && (e[1] < fam.v_lo || e[1] > fam.v_hi)) continue;
      RelKey key{row[0], col[0], row[1], col[1], e[0], e[1]};
      auto it = fam.members.find(key);
      if (it == fam.members.end()) {
        fam.members.emplace(key, p);
      } else {
        it->second += p;
        if (it->second.is_zero()) fam.members.erase(it);
      }
    }
  }
  return fam;
}

// ---- concrete R-matrices ----------------------------------------------

// Rational R-matrix, denominators cleared: (u - v) Id - hbar P on the two
// given variables.  Exact polynomial entries over Q[hbar].
TensorMat<Poly> r_yang_cleared(int N, int legs, int legA, int legB,
                               const std::vector<std::string>& vars,
                               const std::string& varU, const std::string& varV);

// (u + v) R^t(-u - v) = (u + v) Id + hbar P^t, the cleared transposed factor
// of the twisted reflection relation.
TensorMat<Poly> rt_yang_cleared(int N, int legs, int legA, int legB,
                                const std::vector<std::string>& vars,
                                const std::string& varU, const std::string& varV);

// Rational R-matrix as a series: Id - hbar sum_{k<L} v^k u^{-k-1} P, the
// expansion of (u-v)^{-1} in powers of u^{-1}.
TensorMat<Poly> r_yang_expanded(int N, int legs, int legA, int legB,
                                const std::vector<std::string>& vars,
                                const std::string& varU, const std::string& varV, int order);

// One-variable specialization R(u) = Id - hbar u^{-1} P (or R(-u) with the
// sign flipped); entries are exact Laurent monomials.
TensorMat<Poly> r_yang_single(int N, int legs, int legA, int legB,
                              const std::vector<std::string>& vars,
                              const std::string& varU, bool negate_u);

// Trigonometric R-matrix; polynomial of degree one in each spectral variable
// over Q(q).
TensorMat<RatFun> r_quantum(int N, int legs, int legA, int legB,
                            const std::vector<std::string>& vars,
                            const std::string& varU, const std::string& varV);

enum class RSubst { none, neg_shift, invert };

// Transposition in the first factor followed by an exact substitution of the
// first spectral variable: u -> -u-v (expanded to the given order on
// negative powers) or u -> u^{-1}.
TensorMat<Poly> transpose_first_subst(const TensorMat<Poly>& m, RSubst subst,
                                      const std::string& varU, const std::string& varV,
                                      int order);
TensorMat<RatFun> transpose_first_subst(const TensorMat<RatFun>& m, RSubst subst,
                                        const std::string& varU, const std::string& varV,
                                        int order);

enum class RKind { yangian, quantum };

// Exact Yang-Baxter check on the three-fold tensor space, denominators
// cleared so that both sides are polynomial.
bool check_ybe(RKind kind, int N);

}  // namespace rttdeg

#endif
