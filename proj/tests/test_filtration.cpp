#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rttdeg/filtration.hpp"

using namespace rttdeg;

namespace {
const RatFun qq = RatFun::q_minus_qinv();
Marker T(int i, int j, int r, int m) { return Marker{'T', TwCase::orthogonal, i, j, r, m}; }
}  // namespace

TEST_CASE("filtration degree of formal terms") {
  // (q-q^{-1}) T^(0,1) T^(0,2) has degree 1 + 1 + 2
  CHECK(filt_degree({qq, {T(1, 1, 0, 1), T(1, 2, 0, 2)}}) == 4);
  // a bare level marker has degree 0
  CHECK(filt_degree({RatFun(1), {T(1, 2, 3, 0)}}) == 0);
  // (q-1)^2 with no markers
  CHECK(filt_degree({RatFun(Poly::pow(Poly({Rational(-1), Rational(1)}), 2)), {}}) == 2);
  // degree is additive under term concatenation
  FilteredTerm a{qq, {T(1, 2, 0, 1)}};
  FilteredTerm b{RatFun(Poly({Rational(-1), Rational(1)})), {T(2, 1, 1, 2)}};
  FilteredTerm ab{a.coeff * b.coeff, {}};
  ab.markers = a.markers;
  ab.markers.insert(ab.markers.end(), b.markers.begin(), b.markers.end());
  CHECK(filt_degree(ab) == filt_degree(a) + filt_degree(b));
}

TEST_CASE("generator image of the degeneration map") {
  QLoopCtx qctx(2, 6);
  FilteredExpr e = phi_image(1, 2, 1);
  REQUIRE(e.terms.size() == 1);
  CHECK(filt_degree(e.terms[0]) == 1);
  CHECK(expand(qctx, e) == qctx.trm_expand('T', 1, 2, 0, 1));
}

TEST_CASE("auxiliary congruence: level shift absorbed in higher degree") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  // (q^d - q^{-d})(T^(0,m) T^(1,n) - T^(0,m) T^(0,n)) lies above m+n+2
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 1; ++n) {
      RatFun qdiff = RatFun::q() - RatFun::qpow(-1);
      FilteredExpr target;
      target.add(qdiff, {T(1, 1, 0, m), T(2, 2, 1, n)});
      target.add(-qdiff, {T(1, 1, 0, m), T(2, 2, 0, n)});
      auto out = congruence_check(qctx, cctx, target, m + n + 2);
      REQUIRE(out.passed());
      CHECK(out.cert->verified);
      CHECK(out.cert->relation_part.empty());
    }
}

TEST_CASE("a target already of high degree certifies by itself") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  FilteredExpr target;
  target.add(qq, {T(1, 2, 0, 1), T(2, 1, 0, 1)});  // degree 3
  auto out = congruence_check(qctx, cctx, target, 3);
  REQUIRE(out.passed());
  CHECK(out.cert->relation_part.empty());
  REQUIRE(!out.cert->high_degree_part.empty());
}

TEST_CASE("graded bracket congruence") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      auto out = graded_yangian_check(qctx, cctx, i, j, 3 - i, 3 - j, 0, 0);
      REQUIRE(out.passed());
      CHECK(out.cert->verified);
    }
  auto deeper = graded_yangian_check(qctx, cctx, 1, 2, 2, 1, 1, 0);
  REQUIRE(deeper.passed());
}

TEST_CASE("graded bracket congruence negative control") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  auto out = graded_yangian_check(qctx, cctx, 1, 2, 2, 1, 0, 0, true);
  CHECK(out.kind == CongruenceOutcome::Kind::refuted);
}

TEST_CASE("level-zero family congruences") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int m = 0; m <= 3; ++m) CHECK(tbar_congruence_check(qctx, cctx, i, j, m));
}

TEST_CASE("twisted element congruence form") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  for (TwCase cs : {TwCase::orthogonal, TwCase::symplectic})
    for (int m = 0; m <= 2; ++m)
      for (int r = 1; r <= 2; ++r) {
        auto out = scong_check(qctx, cctx, cs, 1, 2, r, m);
        REQUIRE(out.passed());
        CHECK(out.cert->verified);
        CHECK(out.cert->threshold == m + 1);
      }
  // negative control: refuted through the specialization probes
  auto neg = scong_check(qctx, cctx, TwCase::orthogonal, 1, 2, 1, 0, true);
  CHECK(neg.kind == CongruenceOutcome::Kind::refuted);
}

TEST_CASE("twisted class independent of the level index") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  for (TwCase cs : {TwCase::orthogonal, TwCase::symplectic})
    for (int m = 0; m <= 2; ++m) {
      auto out = zeta_independence_check(qctx, cctx, cs, 1, 2, m, 1, 2);
      REQUIRE(out.passed());
    }
  // r1 = r2 gives the empty certificate
  auto triv = zeta_independence_check(qctx, cctx, TwCase::orthogonal, 1, 2, 0, 1, 1);
  REQUIRE(triv.passed());
  CHECK(triv.cert->high_degree_part.empty());
}

TEST_CASE("twisted degeneration square") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  for (TwCase cs : {TwCase::orthogonal, TwCase::symplectic})
    for (int m = 0; m <= 2; ++m) {
      auto out = twisted_phi_check(qctx, cctx, cs, 1, 2, m);
      REQUIRE(out.passed());
      CHECK(out.cert->verified);
    }
  auto neg = twisted_phi_check(qctx, cctx, TwCase::orthogonal, 1, 2, 0, true);
  CHECK(neg.kind == CongruenceOutcome::Kind::refuted);
}

TEST_CASE("certificates re-expand and serialize") {
  QLoopCtx qctx(2, 6);
  ClassicalCtx cctx(2);
  auto out = graded_yangian_check(qctx, cctx, 1, 2, 2, 1, 0, 0);
  REQUIRE(out.passed());
  json j = out.cert->to_json();
  Certificate back = Certificate::from_json(j);
  CHECK(back.verified);
  CHECK(back.threshold == out.cert->threshold);
  CHECK(back.relation_part.size() == out.cert->relation_part.size());
}
