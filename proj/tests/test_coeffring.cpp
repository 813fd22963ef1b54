#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rttdeg/poly.hpp"
#include "rttdeg/ratfun.hpp"
#include "rttdeg/series.hpp"

using namespace rttdeg;

namespace {

RatFun q() { return RatFun::q(); }
RatFun c(long n) { return RatFun(n); }

RatFun random_ratfun(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3);
  auto rand_poly = [&]() {
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& x : cs) x = Rational(coef(rng));
    return Poly(std::move(cs));
  };
  Poly num = rand_poly();
  Poly den;
  do { den = rand_poly(); } while (den.is_zero());
  if (num.is_zero()) num = Poly(Rational(1));
  return RatFun(num, den);
}

}  // namespace

TEST_CASE("ratfun arithmetic basics") {
  CHECK((q() - c(1)) * (q() + c(1)) == q() * q() - c(1));
  CHECK((q() * q() - c(1)) / (q() + c(1)) == q() - c(1));
  // q - q^{-1} in fraction form: (q^2-1)/q
  RatFun qq = q() - c(1) / q();
  CHECK(qq == RatFun::q_minus_qinv());
  CHECK(qq.num() == Poly({Rational(-1), Rational(0), Rational(1)}));
  CHECK(qq.den() == Poly::var(1));
  CHECK_THROWS_AS(c(1) / RatFun(), DivisionByZero);
}

TEST_CASE("canonical form uniqueness") {
  RatFun a = (q() * q() - c(1)) / (q() * q() + q());  // (q-1)/1 after reduction? no: (q^2-1)/(q^2+q) = (q-1)/q
  RatFun b = (q() - c(1)) / q();
  CHECK(a == b);
  CHECK((a - b).is_zero());
  // denominators are monic by construction
  RatFun r = c(1) / (c(2) * q() - c(2));
  CHECK(r.den().lc() == 1);
  CHECK(r == c(1) / (c(2) * (q() - c(1))));
}

TEST_CASE("q1 valuation") {
  CHECK(((q() * q() - c(1)) / (q() + c(1))).q1_valuation() == 1);
  RatFun qq = RatFun::q_minus_qinv();
  CHECK((qq * qq).q1_valuation() == 2);
  CHECK((c(1) / (q() - c(1))).q1_valuation() == -1);
  CHECK_THROWS_AS(RatFun().q1_valuation(), ZeroInput);
}

TEST_CASE("valuation additivity on random nonzero pairs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    RatFun a = random_ratfun(rng), b = random_ratfun(rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).q1_valuation() == a.q1_valuation() + b.q1_valuation());
  }
}

TEST_CASE("limit at q=1 is a ring homomorphism on the pole-free subring") {
  std::mt19937_64 rng(11);
  int tried = 0;
  for (int t = 0; t < 200 && tried < 40; ++t) {
    RatFun a = random_ratfun(rng), b = random_ratfun(rng);
    if (!a.integral_at_q1() || !b.integral_at_q1()) continue;
    ++tried;
    CHECK((a + b).limit_q1() == a.limit_q1() + b.limit_q1());
    CHECK((a * b).limit_q1() == a.limit_q1() * b.limit_q1());
  }
  CHECK(tried >= 20);
  // positive valuation limits to zero, pole throws
  CHECK((q() - c(1)).limit_q1() == 0);
  CHECK_THROWS_AS((c(1) / (q() - c(1))).limit_q1(), PoleAtQ1);
}

TEST_CASE("series truncation semantics") {
  using S = Series<Poly>;
  const std::vector<std::string> vars{"u"};
  const Poly one(Rational(1)), hbar = Poly::var(1);

  // (1 - hbar/u)(1 + hbar/u) at order 2 -> 1 - hbar^2 u^{-2}
  S a = S::constant(vars, one) - S::monomial(vars, Exp{-1, 0, 0}, hbar);
  S b = S::constant(vars, one) + S::monomial(vars, Exp{-1, 0, 0}, hbar);
  a.restrict_window(0, -2, kPosInf);
  b.restrict_window(0, -2, kPosInf);
  S p = a * b;
  CHECK(p.coeff(Exp{0, 0, 0}) == one);
  CHECK(p.coeff(Exp{-1, 0, 0}).is_zero());
  CHECK(p.coeff(Exp{-2, 0, 0}) == -(hbar * hbar));
  CHECK(p.lo(0) == -2);

  // u^{-1} * u^{-1} at order 1: truncated to zero, validity order 1 kept
  S m = S::monomial(vars, Exp{-1, 0, 0}, one);
  m.restrict_window(0, -1, kPosInf);
  S mm = m * m;
  CHECK(mm.is_zero());
  CHECK(mm.lo(0) == -1);
  CHECK(mm.known(Exp{-1, 0, 0}));
  CHECK(!mm.known(Exp{-2, 0, 0}));
  CHECK_THROWS_AS(mm.coeff(Exp{-2, 0, 0}), TruncationInsufficient);
}

TEST_CASE("series geometric telescoping") {
  using S = Series<Poly>;
  const std::vector<std::string> vars{"u"};
  const Poly one(Rational(1));
  const int L = 5;
  // independent oracle: in exact Laurent arithmetic (1 - u^{-1}) * sum_{k<=L} u^{-k}
  // equals 1 - u^{-(L+1)}; truncating to order L leaves exactly 1.
  S lhs = S::constant(vars, one) - S::monomial(vars, Exp{-1, 0, 0}, one);
  S geo(vars);
  for (int k = 0; k <= L; ++k) geo += S::monomial(vars, Exp{-k, 0, 0}, one);
  S exact = lhs * geo;  // no truncation yet
  CHECK(exact.coeff(Exp{0, 0, 0}) == one);
  CHECK(exact.coeff(Exp{-(L + 1), 0, 0}) == -one);
  for (int k = 1; k <= L; ++k) CHECK(exact.coeff(Exp{-k, 0, 0}).is_zero());

  S lhs_t = lhs, geo_t = geo;
  lhs_t.restrict_window(0, -L, kPosInf);
  geo_t.restrict_window(0, -L, kPosInf);
  S truncated = lhs_t * geo_t;
  CHECK(truncated.lo(0) == -L);
  CHECK(truncated.coeff(Exp{0, 0, 0}) == one);
  for (int k = 1; k <= L; ++k) CHECK(truncated.coeff(Exp{-k, 0, 0}).is_zero());
}

TEST_CASE("series variable mismatch is rejected") {
  using S = Series<Poly>;
  S a = S::constant({"u"}, Poly(Rational(1)));
  S b = S::constant({"v"}, Poly(Rational(1)));
  CHECK_THROWS_AS(a + b, IncompatibleVariables);
}

TEST_CASE("series agrees with polynomial arithmetic without truncation") {
  using S = Series<Poly>;
  const std::vector<std::string> vars{"u"};
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 20; ++t) {
    // random Laurent polynomials with exponents in [-3, 3]
    S a(vars), b(vars);
    std::vector<Rational> ca(7), cb(7);
    for (int k = 0; k < 7; ++k) {
      ca[k] = Rational(coef(rng));
      cb[k] = Rational(coef(rng));
      if (ca[k] != 0) a += S::monomial(vars, Exp{k - 3, 0, 0}, Poly(ca[k]));
      if (cb[k] != 0) b += S::monomial(vars, Exp{k - 3, 0, 0}, Poly(cb[k]));
    }
    S p = a * b;
    for (int e = -6; e <= 6; ++e) {
      Rational want(0);
      for (int k = -3; k <= 3; ++k) {
        int m = e - k;
        if (m < -3 || m > 3) continue;
        want += ca[k + 3] * cb[m + 3];
      }
      CHECK(p.coeff(Exp{e, 0, 0}) == Poly(want));
    }
  }
}
