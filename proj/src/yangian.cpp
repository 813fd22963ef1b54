#include "rttdeg/yangian.hpp"

namespace rttdeg {

namespace {
const Poly kHbar = Poly::var(1);
}

YElem yt(int i, int j, int r) {
  if (r == 0) return i == j ? YElem::one() : YElem();
  return YElem::generator(yt_gen(i, j, r));
}

YElem YangianCtx::relation(int i, int j, int k, int l, int m, int n) const {
  auto comm = [](const YElem& a, const YElem& b) { return a * b - b * a; };
  YElem lhs = comm(yt(i, j, m + 1), yt(k, l, n)) - comm(yt(i, j, m), yt(k, l, n + 1));
  YElem rhs = (yt(k, j, m) * yt(i, l, n) - yt(k, j, n) * yt(i, l, m)) * kHbar;
  return lhs - rhs;
}

YElem YangianCtx::commutator_rule(int i, int j, int r, int k, int l, int s) const {
  if (r < 1 || s < 1) throw IndexOutOfRange("commutator_rule: levels must be >= 1");
  YElem acc;
  for (int p = 1; p <= std::min(r, s); ++p) {
    acc += yt(k, j, p - 1) * yt(i, l, r + s - p);
    acc -= yt(k, j, r + s - p) * yt(i, l, p - 1);
  }
  return acc * kHbar;
}

YElem YangianCtx::normal_form_word(const Word& w, ReduceStrategy st) {
  if (word_sorted(w)) return YElem::word(w);
  auto& cache = cache_[st == ReduceStrategy::leftmost ? 0 : 1];
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;

  size_t pos = 0;
  if (st == ReduceStrategy::leftmost) {
    while (!(w[pos + 1] < w[pos])) ++pos;
  } else {
    pos = w.size() - 2;
    while (!(w[pos + 1] < w[pos])) --pos;
  }
  const Gen g1 = w[pos], g2 = w[pos + 1];

  Word swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  YElem result = normal_form_word(swapped, st);

  YElem corr = commutator_rule(g1.i, g1.j, g1.level, g2.i, g2.j, g2.level);
  for (const auto& [cw, cc] : corr.terms()) {
    Word inner(w.begin(), w.begin() + pos);
    inner.insert(inner.end(), cw.begin(), cw.end());
    inner.insert(inner.end(), w.begin() + pos + 2, w.end());
    result += normal_form_word(inner, st) * cc;
  }
  cache.emplace(w, result);
  return result;
}

YElem YangianCtx::normalize(const YElem& e, ReduceStrategy st) {
  YElem out;
  for (const auto& [w, c] : e.terms()) out += normal_form_word(w, st) * c;
  return out;
}

SpanResult YangianCtx::certify_commutator_rule(int i, int j, int r, int k, int l, int s,
                                               Pivot pivot, bool mutate) {
  YElem bracket = yt(i, j, r) * yt(k, l, s) - yt(k, l, s) * yt(i, j, r);
  YElem rule = commutator_rule(i, j, r, k, l, s);
  if (mutate) rule = -rule;  // negative control: provably outside the span
  YElem target = bracket - rule;

  // homogeneous slice: the defining relations with m + n = r + s - 1 at the
  // same index tuple telescope to the rule
  std::vector<std::pair<std::string, YElem>> rels;
  for (int m = 0; m <= r + s - 1; ++m) {
    int n = r + s - 1 - m;
    std::string id = "yr(" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + "," + std::to_string(l) + ";" +
                     std::to_string(m) + "," + std::to_string(n) + ")";
    rels.emplace_back(id, relation(i, j, k, l, m, n));
  }
  std::string tid = "[t(" + std::to_string(i) + "," + std::to_string(j) + ")^" +
                    std::to_string(r) + ",t(" + std::to_string(k) + "," +
                    std::to_string(l) + ")^" + std::to_string(s) + "]-rule";
  return span_membership(target, rels, pivot, tid);
}

TensorMat<Poly> YangianCtx::t_matrix(int leg, const std::vector<std::string>& vars,
                                     const std::string& var, int cap) const {
  int slot = -1;
  for (size_t v = 0; v < vars.size(); ++v)
    if (vars[v] == var) slot = static_cast<int>(v);
  if (slot < 0) throw IncompatibleVariables("t_matrix: unknown variable");
  return place_one_leg<Poly>(N_, 2, leg, vars, [&](int i, int j) {
    Series<NCPoly<Poly>> s(vars);
    for (int r = 0; r <= cap; ++r) {
      YElem g = yt(i, j, r);
      if (g.is_zero()) continue;
      Exp e{0, 0, 0};
      e[slot] = -r;
      s += Series<NCPoly<Poly>>::monomial(vars, e, g);
    }
    s.restrict_window(slot, -cap, kPosInf);
    return s;
  });
}

// ---- twisted side -------------------------------------------------------

namespace {

// s(u) as a generating matrix with s^(0) = g inlined
TensorMat<Poly> s_matrix(TwCase cs, int N, int legs, int leg,
                         const std::vector<std::string>& vars, const std::string& var,
                         int cap, bool negate_u) {
  int slot = -1;
  for (size_t v = 0; v < vars.size(); ++v)
    if (vars[v] == var) slot = static_cast<int>(v);
  return place_one_leg<Poly>(N, legs, leg, vars, [&](int i, int j) {
    Series<NCPoly<Poly>> s(vars);
    for (int r = 0; r <= cap; ++r) {
      YElem g;
      if (r == 0) {
        int ge = g_entry(cs, N, i, j);
        if (ge != 0) g = YElem(Poly(Rational(ge)));
      } else {
        g = YElem::generator(ys_gen(i, j, r));
      }
      if (g.is_zero()) continue;
      if (negate_u && r % 2 == 1) g = -g;
      Exp e{0, 0, 0};
      e[slot] = -r;
      s += Series<NCPoly<Poly>>::monomial(vars, e, g);
    }
    s.restrict_window(slot, -cap, kPosInf);
    return s;
  });
}

}  // namespace

std::vector<std::pair<std::string, YElem>> twisted_symmetry_components(TwCase cs, int N,
                                                                       int r) {
  require_even_for_symplectic(cs, N);
  const std::vector<std::string> vars{"u"};
  const int cap = r + 1;
  auto s_u = s_matrix(cs, N, 1, 1, vars, "u", cap, false);
  auto s_mu = s_matrix(cs, N, 1, 1, vars, "u", cap, true);
  auto st_mu = s_mu.transpose_first();

  // s^t(-u) -+ s(u) - hbar (s(u) - s(-u)) / (2u)
  auto odd = s_u - s_mu;
  auto over_2u = odd.map_entries([&](const Series<NCPoly<Poly>>& s) {
    auto shift = Series<NCPoly<Poly>>::monomial(vars, Exp{-1, 0, 0},
                                                NCPoly<Poly>(Poly(Rational(1, 2))));
    return s * shift;
  });
  auto hterm = over_2u.map_entries(
      [&](const Series<NCPoly<Poly>>& s) { return s.scaled(NCPoly<Poly>(kHbar)); });
  TensorMat<Poly> expr = (cs == TwCase::orthogonal) ? (st_mu - s_u - hterm)
                                                    : (st_mu + s_u - hterm);

  std::vector<std::pair<std::string, YElem>> out;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Exp e{-r, 0, 0};
      YElem member;
      auto it = expr.entries().find({expr.flatten({i}), expr.flatten({j})});
      if (it != expr.entries().end()) member = it->second.coeff(e);
      std::string id = "sym(" + twcase_name(cs) + ";" + std::to_string(i) + "," +
                       std::to_string(j) + ";" + std::to_string(r) + ")";
      out.emplace_back(id, member);
    }
  return out;
}

RelationFamily<Poly> twisted_quaternary_family(TwCase cs, int N, int cap) {
  require_even_for_symplectic(cs, N);
  const std::vector<std::string> vars{"u", "v"};
  const int level_cap = cap + 2;
  auto rc = r_yang_cleared(N, 2, 1, 2, vars, "u", "v");
  auto rtc = rt_yang_cleared(N, 2, 1, 2, vars, "u", "v");
  auto s1 = s_matrix(cs, N, 2, 1, vars, "u", level_cap, false);
  auto s2 = s_matrix(cs, N, 2, 2, vars, "v", level_cap, false);
  auto fam = expand_matrix_relation<Poly>({rc, s1, rtc, s2}, {s2, rtc, s1, rc},
                                          "tw-quaternary-" + twcase_name(cs));
  return fam;
}

YElem embed_twisted_yangian(TwCase cs, int N, int i, int j, int r) {
  require_even_for_symplectic(cs, N);
  if (r == 0) {
    int ge = g_entry(cs, N, i, j);
    return ge == 0 ? YElem() : YElem(Poly(Rational(ge)));
  }
  YElem acc;
  for (int k = 1; k <= N; ++k) {
    int gkj = g_entry(cs, N, k, j);
    if (gkj != 0) acc += yt(i, k, r) * Poly(Rational(gkj));
    int gik = g_entry(cs, N, i, k);
    if (gik != 0) acc += yt(j, k, r) * Poly(Rational((r % 2 == 0) ? gik : -gik));
  }
  YElem quad;
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l) {
      int gkl = g_entry(cs, N, k, l);
      if (gkl == 0) continue;
      for (int p = 1; p <= r - 1; ++p) {
        int sign = ((r - p) % 2 == 0) ? 1 : -1;
        quad += yt(i, k, p) * yt(j, l, r - p) * Poly(Rational(sign * gkl));
      }
    }
  // The quadratic sum carries no extra deformation factor: with t^(0) = delta
  // the defining relations certify exactly this normalization (the twisted
  // symmetry and reflection components vanish identically under it).
  return acc + quad;
}

Report verify_twisted_embedding(YangianCtx& ctx, TwCase cs, int rmax, bool mutate) {
  const int N = ctx.N();
  require_even_for_symplectic(cs, N);
  Report rep;
  rep.suite = "embed-ytw";

  auto image = [&](const Gen& g) -> YElem {
    YElem im = embed_twisted_yangian(cs, N, g.i, g.j, g.level);
    if (mutate && g.i == 1 && g.j == std::min(2, N) && g.level == 1) {
      // negative control: flip the sign of one term of one image
      im = ctx.normalize(im);
      auto first = im.terms().begin();
      if (first != im.terms().end())
        im -= YElem::word(first->first, first->second) * Poly(Rational(2));
    }
    return im;
  };

  auto check_member = [&](const std::string& id, const YElem& member) {
    CheckRecord rec;
    rec.name = id;
    YElem substituted = member.substituted([&](const Gen& g) {
      if (g.fam != Fam::ys) throw UnknownAlgebraTag("unexpected family in twisted member");
      return image(g);
    });
    YElem nf = ctx.normalize(substituted);
    rec.verdict = nf.is_zero() ? Verdict::pass : Verdict::fail;
    if (!nf.is_zero()) rec.detail = nf.to_string("h");
    rep.checks.push_back(std::move(rec));
  };

  for (int r = 0; r <= rmax; ++r)
    for (const auto& [id, member] : twisted_symmetry_components(cs, N, r))
      check_member(id, member);

  auto fam = twisted_quaternary_family(cs, N, rmax);
  for (const auto& [key, member] : fam.members) {
    if (key.eu + key.ev < -rmax) continue;
    if (!fam.window_covers(key.eu, key.ev)) continue;
    std::string id = "quat(" + twcase_name(cs) + ";" + std::to_string(key.i) + "," +
                     std::to_string(key.j) + "," + std::to_string(key.k) + "," +
                     std::to_string(key.l) + ";" + std::to_string(-key.eu) + "," +
                     std::to_string(-key.ev) + ")";
    check_member(id, member);
  }
  return rep;
}

}  // namespace rttdeg
