#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rttdeg/tensormat.hpp"

using namespace rttdeg;

namespace {

const std::vector<std::string> kUV{"u", "v"};

// generating matrix t(u) = sum_r t^{(r)} u^{-r} with t^{(0)} = delta,
// truncated at the given level cap
TensorMat<Poly> t_matrix(int N, int leg, const std::string& var, int cap) {
  return place_one_leg<Poly>(N, 2, leg, kUV, [&](int i, int j) {
    Series<NCPoly<Poly>> s(kUV);
    int slot = var == "u" ? 0 : 1;
    if (i == j) s += Series<NCPoly<Poly>>::constant(kUV, NCPoly<Poly>::one());
    for (int r = 1; r <= cap; ++r) {
      Exp e{0, 0, 0};
      e[slot] = -r;
      s += Series<NCPoly<Poly>>::monomial(
          kUV, e, NCPoly<Poly>::generator(Gen{Fam::yt, static_cast<int16_t>(i),
                                              static_cast<int16_t>(j), r}));
    }
    s.restrict_window(slot, -cap, kPosInf);
    return s;
  });
}

NCPoly<Poly> yt(int i, int j, int r) {
  if (r == 0) return i == j ? NCPoly<Poly>::one() : NCPoly<Poly>();
  return NCPoly<Poly>::generator(
      Gen{Fam::yt, static_cast<int16_t>(i), static_cast<int16_t>(j), r});
}

// displayed component family of the rational RTT relation
NCPoly<Poly> bracket_family(int i, int j, int k, int l, int m, int n) {
  const Poly hbar = Poly::var(1);
  auto comm = [](const NCPoly<Poly>& a, const NCPoly<Poly>& b) { return a * b - b * a; };
  NCPoly<Poly> lhs = comm(yt(i, j, m + 1), yt(k, l, n)) - comm(yt(i, j, m), yt(k, l, n + 1));
  NCPoly<Poly> rhs = (yt(k, j, m) * yt(i, l, n) - yt(k, j, n) * yt(i, l, m)) * hbar;
  return lhs - rhs;
}

}  // namespace

TEST_CASE("rational R-matrix entries") {
  const Poly hbar = Poly::var(1);
  // N=1: R = 1 - hbar (u-v)^{-1}
  auto r1 = r_yang_expanded(1, 2, 1, 2, kUV, "u", "v", 4);
  const auto& s = r1.entries().at({0, 0});
  CHECK(s.coeff(Exp{0, 0, 0}) == NCPoly<Poly>::one());
  CHECK(s.coeff(Exp{-1, 0, 0}) == NCPoly<Poly>(-hbar));
  CHECK(s.coeff(Exp{-2, 1, 0}) == NCPoly<Poly>(-hbar));
  CHECK(s.lo(0) == -4);

  // N=2: the E_12 (x) E_21 entry carries -hbar(u-v)^{-1}
  auto r2 = r_yang_expanded(2, 2, 1, 2, kUV, "u", "v", 4);
  auto e = r2.entries().at({r2.flatten({1, 2}), r2.flatten({2, 1})});
  CHECK(e.coeff(Exp{-1, 0, 0}) == NCPoly<Poly>(-hbar));
  CHECK(e.coeff(Exp{0, 0, 0}).is_zero());
}

TEST_CASE("quantum R-matrix entries") {
  // N=1: R_q = (u q^{-1} - v q) E_11 (x) E_11
  auto r = r_quantum(1, 2, 1, 2, kUV, "u", "v");
  const auto& s = r.entries().at({0, 0});
  CHECK(s.coeff(Exp{1, 0, 0}) == NCPoly<RatFun>(RatFun::qpow(-1)));
  CHECK(s.coeff(Exp{0, 1, 0}) == NCPoly<RatFun>(-RatFun::q()));

  // N=2 off-diagonal: -(q-q^{-1}) u on the lower pair, v on the upper pair
  auto r2 = r_quantum(2, 2, 1, 2, kUV, "u", "v");
  auto lower = r2.entries().at({r2.flatten({2, 1}), r2.flatten({1, 2})});
  CHECK(lower.coeff(Exp{1, 0, 0}) == NCPoly<RatFun>(-RatFun::q_minus_qinv()));
  auto upper = r2.entries().at({r2.flatten({1, 2}), r2.flatten({2, 1})});
  CHECK(upper.coeff(Exp{0, 1, 0}) == NCPoly<RatFun>(-RatFun::q_minus_qinv()));
}

TEST_CASE("transpose in the first factor") {
  // P = sum E_ij (x) E_ji; transposing moves the (E_12,E_21) entry to (E_21,E_21)
  auto p = place_two_leg<Poly>(2, 2, 1, 2, kUV, [&](int a, int b, int c, int d) {
    Series<NCPoly<Poly>> s(kUV);
    if (b == c && a == d)
      s += Series<NCPoly<Poly>>::constant(kUV, NCPoly<Poly>::one());
    return s;
  });
  CHECK(p.entries().count({p.flatten({1, 2}), p.flatten({2, 1})}) == 1);
  auto pt = p.transpose_first();
  CHECK(pt.entries().count({pt.flatten({1, 2}), pt.flatten({2, 1})}) == 0);
  // E_12 (x) E_21 becomes E_21 (x) E_21: row tuple (2,2), column tuple (1,1)
  CHECK(pt.entries().count({pt.flatten({2, 2}), pt.flatten({1, 1})}) == 1);

  auto id = tm_identity<Poly>(2, 2, kUV);
  CHECK((id.transpose_first() - id).is_zero());
}

TEST_CASE("transposed substituted R at N=1") {
  const Poly hbar = Poly::var(1);
  auto r = r_yang_single(1, 2, 1, 2, kUV, "u", false);
  auto rt = transpose_first_subst(r, RSubst::neg_shift, "u", "v", 5);
  const auto& s = rt.entries().at({0, 0});
  // 1 + hbar (u+v)^{-1} = 1 + hbar(u^{-1} - v u^{-2} + v^2 u^{-3} - ...)
  CHECK(s.coeff(Exp{0, 0, 0}) == NCPoly<Poly>::one());
  CHECK(s.coeff(Exp{-1, 0, 0}) == NCPoly<Poly>(hbar));
  CHECK(s.coeff(Exp{-2, 1, 0}) == NCPoly<Poly>(-hbar));
  CHECK(s.coeff(Exp{-3, 2, 0}) == NCPoly<Poly>(hbar));
}

TEST_CASE("R(u) R(-u) is a scalar") {
  const Poly hbar = Poly::var(1);
  for (int N : {2, 3}) {
    std::vector<std::string> u{"u"};
    auto rp = r_yang_single(N, 2, 1, 2, u, "u", false);
    auto rm = r_yang_single(N, 2, 1, 2, u, "u", true);
    auto prod = rp * rm;
    auto want = tm_identity<Poly>(N, 2, u);
    want = want.map_entries([&](const Series<NCPoly<Poly>>& s) {
      return s - s.scaled(NCPoly<Poly>(hbar * hbar)) * Series<NCPoly<Poly>>::monomial(
                     u, Exp{-2, 0, 0}, NCPoly<Poly>::one());
    });
    CHECK((prod - want).is_zero());
  }
}

TEST_CASE("yang-baxter") {
  CHECK(check_ybe(RKind::yangian, 1));
  CHECK(check_ybe(RKind::quantum, 1));
  CHECK(check_ybe(RKind::yangian, 2));
  CHECK(check_ybe(RKind::quantum, 2));
  CHECK_THROWS_AS(check_ybe(RKind::yangian, 0), InvalidDimension);
}

TEST_CASE("rational RTT expansion reproduces the bracket family") {
  for (int N : {1, 2}) {
    const int cap = 4;
    auto rc = r_yang_cleared(N, 2, 1, 2, kUV, "u", "v");
    auto t1 = t_matrix(N, 1, "u", cap);
    auto t2 = t_matrix(N, 2, "v", cap);
    auto fam = expand_matrix_relation<Poly>({rc, t1, t2}, {t2, t1, rc}, "rtt");
    // trusted window: one positive power of u and v entered via the cleared factor
    CHECK(fam.u_lo <= -(cap - 1));
    CHECK(fam.v_lo <= -(cap - 1));
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k)
          for (int l = 1; l <= N; ++l)
            for (int m = 0; m + 1 <= cap; ++m)
              for (int n = 0; n + 1 <= cap; ++n) {
                auto got = fam.member(i, j, k, l, -m, -n);
                auto want = bracket_family(i, j, k, l, m, n);
                CHECK(got == want);
              }
  }
}

TEST_CASE("truncation guards") {
  // requesting a component outside the trusted window is an error
  auto rc = r_yang_cleared(2, 2, 1, 2, kUV, "u", "v");
  auto t1 = t_matrix(2, 1, "u", 2);
  auto t2 = t_matrix(2, 2, "v", 2);
  auto fam = expand_matrix_relation<Poly>({rc, t1, t2}, {t2, t1, rc});
  CHECK_NOTHROW(fam.member(1, 1, 1, 1, -1, -1));
  CHECK_THROWS_AS(fam.member(1, 1, 1, 1, -5, 0), TruncationInsufficient);
  // substituting u -> -u-v needs enough expansion room for negative powers
  auto r = r_yang_single(1, 2, 1, 2, kUV, "u", false);
  CHECK_THROWS_AS(transpose_first_subst(r, RSubst::neg_shift, "u", "v", 0),
                  SubstitutionOutsideDomain);
}

TEST_CASE("N=1 family reduces to scaled commutators") {
  // [t^{(m+1)}, t^{(n)}] - [t^{(m)}, t^{(n+1)}] = hbar [t^{(m)}, t^{(n)}]
  const Poly hbar = Poly::var(1);
  auto comm = [](const NCPoly<Poly>& a, const NCPoly<Poly>& b) { return a * b - b * a; };
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      auto lhs = comm(yt(1, 1, m + 1), yt(1, 1, n)) - comm(yt(1, 1, m), yt(1, 1, n + 1));
      auto rhs = comm(yt(1, 1, m), yt(1, 1, n)) * hbar;
      CHECK(bracket_family(1, 1, 1, 1, m, n) == lhs - rhs);
    }
}
