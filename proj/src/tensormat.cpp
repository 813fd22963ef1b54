#include "rttdeg/tensormat.hpp"

namespace rttdeg {

namespace {

int var_slot(const std::vector<std::string>& vars, const std::string& name) {
  for (size_t k = 0; k < vars.size(); ++k)
    if (vars[k] == name) return static_cast<int>(k);
  throw IncompatibleVariables("unknown spectral variable " + name);
}

template <class C>
Series<NCPoly<C>> smono(const std::vector<std::string>& vars, const std::string& var,
                        int e, C coeff) {
  Exp ex{0, 0, 0};
  ex[var_slot(vars, var)] = e;
  return Series<NCPoly<C>>::monomial(vars, ex, NCPoly<C>(std::move(coeff)));
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

TensorMat<Poly> r_yang_cleared(int N, int legs, int legA, int legB,
                               const std::vector<std::string>& vars,
                               const std::string& varU, const std::string& varV) {
  const Poly hbar = Poly::var(1);
  return place_two_leg<Poly>(N, legs, legA, legB, vars,
                             [&](int a, int b, int c, int d) {
                               Series<NCPoly<Poly>> s(vars);
                               if (a == b && c == d) {
                                 s += smono<Poly>(vars, varU, 1, Poly(1));
                                 s += smono<Poly>(vars, varV, 1, Poly(-1));
                               }
                               if (b == c && a == d) s += smono<Poly>(vars, varU, 0, -hbar);
                               return s;
                             });
}

TensorMat<Poly> rt_yang_cleared(int N, int legs, int legA, int legB,
                                const std::vector<std::string>& vars,
                                const std::string& varU, const std::string& varV) {
  const Poly hbar = Poly::var(1);
  return place_two_leg<Poly>(N, legs, legA, legB, vars,
                             [&](int a, int b, int c, int d) {
                               Series<NCPoly<Poly>> s(vars);
                               if (a == b && c == d) {
                                 s += smono<Poly>(vars, varU, 1, Poly(1));
                                 s += smono<Poly>(vars, varV, 1, Poly(1));
                               }
                               if (a == c && b == d) s += smono<Poly>(vars, varU, 0, hbar);
                               return s;
                             });
}

TensorMat<Poly> r_yang_expanded(int N, int legs, int legA, int legB,
                                const std::vector<std::string>& vars,
                                const std::string& varU, const std::string& varV,
                                int order) {
  if (order < 1) throw TruncationInsufficient("r_yang_expanded: order must be positive");
  const Poly hbar = Poly::var(1);
  const int su = var_slot(vars, varU), sv = var_slot(vars, varV);
  return place_two_leg<Poly>(
      N, legs, legA, legB, vars, [&](int a, int b, int c, int d) {
        Series<NCPoly<Poly>> s(vars);
        bool id = (a == b && c == d);
        bool perm = (b == c && a == d);
        if (!id && !perm) return s;
        if (perm) {
          // -hbar (u-v)^{-1} = -hbar sum_k v^k u^{-k-1}
          for (int k = 0; k + 1 <= order; ++k) {
            Exp e{0, 0, 0};
            e[su] = -k - 1;
            e[sv] = k;
            s += Series<NCPoly<Poly>>::monomial(vars, e, NCPoly<Poly>(-hbar));
          }
          s.restrict_window(su, -order, kPosInf);
        }
        if (id) s += smono<Poly>(vars, varU, 0, Poly(1));
        return s;
      });
}

TensorMat<Poly> r_yang_single(int N, int legs, int legA, int legB,
                              const std::vector<std::string>& vars,
                              const std::string& varU, bool negate_u) {
  // R(+-u) = Id -+ hbar u^{-1} P, exact Laurent entries.
  const Poly hbar = Poly::var(1);
  return place_two_leg<Poly>(N, legs, legA, legB, vars,
                             [&](int a, int b, int c, int d) {
                               Series<NCPoly<Poly>> s(vars);
                               if (a == b && c == d) s += smono<Poly>(vars, varU, 0, Poly(1));
                               if (b == c && a == d)
                                 s += smono<Poly>(vars, varU, -1, negate_u ? hbar : -hbar);
                               return s;
                             });
}

TensorMat<RatFun> r_quantum(int N, int legs, int legA, int legB,
                            const std::vector<std::string>& vars,
                            const std::string& varU, const std::string& varV) {
  const RatFun qq = RatFun::q_minus_qinv();
  return place_two_leg<RatFun>(
      N, legs, legA, legB, vars, [&](int a, int b, int c, int d) {
        Series<NCPoly<RatFun>> s(vars);
        if (a == b && c == d) {
          int delta = (a == c) ? 1 : 0;
          s += smono<RatFun>(vars, varU, 1, RatFun::qpow(-delta));
          s += smono<RatFun>(vars, varV, 1, -RatFun::qpow(delta));
        }
        if (b == c && a == d && a != b) {
          if (a > b) s += smono<RatFun>(vars, varU, 1, -qq);
          if (a < b) s += smono<RatFun>(vars, varV, 1, -qq);
        }
        return s;
      });
}

namespace {

// Substitute the first-factor spectral variable in one scalar entry.
template <class C>
Series<NCPoly<C>> subst_entry(const Series<NCPoly<C>>& s,
                              const std::vector<std::string>& vars, RSubst subst,
                              int su, int sv, int order) {
  if (subst == RSubst::none) return s;
  Series<NCPoly<C>> out(vars);
  if (subst == RSubst::invert) {
    // exact: u^e -> u^{-e}; windows flip accordingly
    int lo = (s.hi(su) == kPosInf) ? kNegInf : -s.hi(su);
    int hi = (s.lo(su) == kNegInf) ? kPosInf : -s.lo(su);
    out.set_window(su, lo, hi);
    for (size_t v = 0; v < vars.size(); ++v)
      if (static_cast<int>(v) != su) out.set_window(v, s.lo(v), s.hi(v));
    for (const auto& [e, c] : s.terms()) {
      Exp ne = e;
      ne[su] = -e[su];
      out.insert_term(ne, c);
    }
    return out;
  }
  // u -> -u-v, expanded in powers of u^{-1} on negative exponents.
  for (const auto& [e, c] : s.terms()) {
    int m = e[su];
    Series<NCPoly<C>> piece(vars);
    if (m >= 0) {
      for (int t = 0; t <= m; ++t) {
        Exp ne = e;
        ne[su] = t;
        ne[sv] += m - t;
        Rational coeff = Rational(binom(m, t)) * ((m % 2 == 0) ? 1 : -1);
        piece.insert_term(ne, c * NCPoly<C>(C(coeff)));
      }
    } else {
      int mm = -m;
      if (order < mm) throw SubstitutionOutsideDomain("expansion order too small");
      for (int k = 0; mm + k <= order; ++k) {
        Exp ne = e;
        ne[su] = -(mm + k);
        ne[sv] += k;
        Rational coeff = Rational(binom(mm + k - 1, k));
        if ((mm + k) % 2 == 1) coeff = -coeff;
        piece.insert_term(ne, c * NCPoly<C>(C(coeff)));
      }
      piece.restrict_window(su, -order, kPosInf);
    }
    out += piece;
  }
  return out;
}

}  // namespace

TensorMat<Poly> transpose_first_subst(const TensorMat<Poly>& m, RSubst subst,
                                      const std::string& varU, const std::string& varV,
                                      int order) {
  int su = var_slot(m.vars(), varU);
  int sv = subst == RSubst::neg_shift ? var_slot(m.vars(), varV) : su;
  return m.transpose_first().map_entries([&](const Series<NCPoly<Poly>>& s) {
    return subst_entry<Poly>(s, m.vars(), subst, su, sv, order);
  });
}

TensorMat<RatFun> transpose_first_subst(const TensorMat<RatFun>& m, RSubst subst,
                                        const std::string& varU, const std::string& varV,
                                        int order) {
  int su = var_slot(m.vars(), varU);
  int sv = subst == RSubst::neg_shift ? var_slot(m.vars(), varV) : su;
  return m.transpose_first().map_entries([&](const Series<NCPoly<RatFun>>& s) {
    return subst_entry<RatFun>(s, m.vars(), subst, su, sv, order);
  });
}

bool check_ybe(RKind kind, int N) {
  if (N < 1) throw InvalidDimension("check_ybe: N must be positive");
  if (N > 4) throw InvalidDimension("check_ybe: N above configured cap");
  const std::vector<std::string> vars{"u", "v", "w"};
  if (kind == RKind::yangian) {
    auto r12 = r_yang_cleared(N, 3, 1, 2, vars, "u", "v");
    auto r13 = r_yang_cleared(N, 3, 1, 3, vars, "u", "w");
    auto r23 = r_yang_cleared(N, 3, 2, 3, vars, "v", "w");
    return (r12 * r13 * r23 - r23 * r13 * r12).is_zero();
  }
  auto r12 = r_quantum(N, 3, 1, 2, vars, "u", "v");
  auto r13 = r_quantum(N, 3, 1, 3, vars, "u", "w");
  auto r23 = r_quantum(N, 3, 2, 3, vars, "v", "w");
  return (r12 * r13 * r23 - r23 * r13 * r12).is_zero();
}

}  // namespace rttdeg
