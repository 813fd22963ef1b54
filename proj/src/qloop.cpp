#include "rttdeg/qloop.hpp"

namespace rttdeg {

namespace {

const std::vector<std::string> kUV{"u", "v"};

QElem capT_sym(int i, int j, int r) {
  if (r == 0 && i < j) return QElem();
  return QElem::generator(Gen{Fam::capT, static_cast<int16_t>(i), static_cast<int16_t>(j), r});
}
QElem capTb_sym(int i, int j, int r) {
  if (r == 0 && i > j) return QElem();
  return QElem::generator(Gen{Fam::capTb, static_cast<int16_t>(i), static_cast<int16_t>(j), r});
}

RatFun qdelta(int d) { return RatFun::qpow(d); }

}  // namespace

int qq_uniform_valuation(const QElem& p) {
  if (p.is_zero()) return 0;
  int k = INT_MAX;
  for (const auto& [w, c] : p.terms()) {
    int v1 = c.valuation_at(Rational(1));
    int v2 = c.valuation_at(Rational(-1));
    k = std::min(k, std::min(v1, v2));
  }
  return std::max(k, 0);
}

QElem divide_qq_power(const QElem& p, int k) {
  if (k == 0) return p;
  RatFun f = RatFun(Poly::var(k)) /
             RatFun(Poly::pow(Poly({Rational(-1), Rational(0), Rational(1)}), k));
  return p.map_coeffs([&](const RatFun& c) { return c * f; });
}

QElem qloop_family_display(int N, int i, int j, int k, int l, int r, int s) {
  (void)N;
  const RatFun qq = RatFun::q_minus_qinv();
  int dik = i == k ? 1 : 0, djl = j == l ? 1 : 0;
  QElem out;
  out += capT_sym(i, j, r + 1) * capT_sym(k, l, s) * qdelta(-dik);
  out -= capT_sym(i, j, r) * capT_sym(k, l, s + 1) * qdelta(dik);
  out -= capT_sym(k, l, s) * capT_sym(i, j, r + 1) * qdelta(-djl);
  out += capT_sym(k, l, s + 1) * capT_sym(i, j, r) * qdelta(djl);
  if (i > k) out -= capT_sym(k, j, r + 1) * capT_sym(i, l, s) * qq;
  if (i < k) out -= capT_sym(k, j, r) * capT_sym(i, l, s + 1) * qq;
  if (l > j) out += capT_sym(k, j, s) * capT_sym(i, l, r + 1) * qq;
  if (l < j) out += capT_sym(k, j, s + 1) * capT_sym(i, l, r) * qq;
  return out;
}

QLoopCtx::QLoopCtx(int N, int level_cap) : N_(N), cap_(level_cap) {
  if (N < 1) throw InvalidDimension("QLoopCtx: N must be positive");
  if (level_cap < 2) throw InvalidDimension("QLoopCtx: level cap too small");
}

const RelationFamily<RatFun>& QLoopCtx::family(QKind kind) {
  auto it = fam_cache_.find(static_cast<int>(kind));
  if (it != fam_cache_.end()) return it->second;

  auto t_entries = [&](int i, int j) {
    Series<NCPoly<RatFun>> s(kUV);
    for (int r = 0; r <= cap_; ++r) {
      QElem g = capT_sym(i, j, r);
      if (g.is_zero()) continue;
      s += Series<NCPoly<RatFun>>::monomial(kUV, Exp{-r, 0, 0}, g);
    }
    s.restrict_window(0, -cap_, kPosInf);
    return s;
  };
  auto t2_entries = [&](int i, int j) {
    Series<NCPoly<RatFun>> s(kUV);
    for (int r = 0; r <= cap_; ++r) {
      QElem g = capT_sym(i, j, r);
      if (g.is_zero()) continue;
      s += Series<NCPoly<RatFun>>::monomial(kUV, Exp{0, -r, 0}, g);
    }
    s.restrict_window(1, -cap_, kPosInf);
    return s;
  };
  auto tb_entries = [&](int i, int j) {
    Series<NCPoly<RatFun>> s(kUV);
    for (int r = 0; r <= cap_; ++r) {
      QElem g = capTb_sym(i, j, r);
      if (g.is_zero()) continue;
      s += Series<NCPoly<RatFun>>::monomial(kUV, Exp{r, 0, 0}, g);
    }
    s.restrict_window(0, kNegInf, cap_);
    return s;
  };
  auto tb2_entries = [&](int i, int j) {
    Series<NCPoly<RatFun>> s(kUV);
    for (int r = 0; r <= cap_; ++r) {
      QElem g = capTb_sym(i, j, r);
      if (g.is_zero()) continue;
      s += Series<NCPoly<RatFun>>::monomial(kUV, Exp{0, r, 0}, g);
    }
    s.restrict_window(1, kNegInf, cap_);
    return s;
  };

  auto rq = r_quantum(N_, 2, 1, 2, kUV, "u", "v");
  TensorMat<RatFun> m1(N_, 2, kUV), m2(N_, 2, kUV);
  switch (kind) {
    case QKind::TT:
      m1 = place_one_leg<RatFun>(N_, 2, 1, kUV, t_entries);
      m2 = place_one_leg<RatFun>(N_, 2, 2, kUV, t2_entries);
      break;
    case QKind::TbTb:
      m1 = place_one_leg<RatFun>(N_, 2, 1, kUV, tb_entries);
      m2 = place_one_leg<RatFun>(N_, 2, 2, kUV, tb2_entries);
      break;
    case QKind::TbT:
      m1 = place_one_leg<RatFun>(N_, 2, 1, kUV, tb_entries);
      m2 = place_one_leg<RatFun>(N_, 2, 2, kUV, t2_entries);
      break;
  }
  auto fam = expand_matrix_relation<RatFun>({rq, m1, m2}, {m2, m1, rq}, qkind_name(kind));
  return fam_cache_.emplace(static_cast<int>(kind), std::move(fam)).first->second;
}

QElem QLoopCtx::relation_raw(QKind kind, int i, int j, int k, int l, int r, int s) {
  if (r < 0 || s < 0) throw IndexOutOfRange("relation_raw: negative level");
  const auto& fam = family(kind);
  int eu = (kind == QKind::TT) ? -r : r;
  int ev = (kind == QKind::TbTb) ? s : -s;
  return fam.member(i, j, k, l, eu, ev);
}

QElem QLoopCtx::relation_component(QKind kind, int i, int j, int k, int l, int r, int s) {
  QElem raw = to_aform(relation_raw(kind, i, j, k, l, r, s));
  return divide_qq_power(raw, qq_uniform_valuation(raw));
}

std::vector<std::pair<std::string, QElem>> QLoopCtx::relation_instances(
    const std::vector<std::array<int, 4>>& tuples, int lo, int hi,
    const std::vector<QKind>& kinds) {
  std::vector<std::pair<std::string, QElem>> out;
  for (const auto& t : tuples) {
    for (QKind kind : kinds) {
      for (int r = lo; r <= hi; ++r) {
        for (int s = lo; s <= hi; ++s) {
          QElem rel = relation_component(kind, t[0], t[1], t[2], t[3], r, s);
          if (rel.is_zero()) continue;
          std::string id = std::string(qkind_name(kind)) + "(" + std::to_string(t[0]) + "," +
                           std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
                           std::to_string(t[3]) + ";" + std::to_string(r) + "," +
                           std::to_string(s) + ")";
          out.emplace_back(std::move(id), std::move(rel));
        }
      }
    }
  }
  // diagonal inverse constraints
  for (int i = 1; i <= N_; ++i) {
    QElem fwd = to_aform(capT_sym(i, i, 0) * capTb_sym(i, i, 0)) - QElem::one();
    QElem bwd = to_aform(capTb_sym(i, i, 0) * capT_sym(i, i, 0)) - QElem::one();
    out.emplace_back("inv+(" + std::to_string(i) + ")", std::move(fwd));
    out.emplace_back("inv-(" + std::to_string(i) + ")", std::move(bwd));
  }
  return out;
}

QElem QLoopCtx::trm_expand(char family, int i, int j, int r, int m) {
  if (m < 0 || r < 0) throw IndexOutOfRange("trm_expand: negative index");
  if (family == 'W' && r > m) throw IndexOutOfRange("trm_expand: mixed family needs r <= m");
  auto key = std::make_tuple(family, i, j, r, m);
  auto it = trm_cache_.find(key);
  if (it != trm_cache_.end()) return it->second;

  QElem out;
  if (family == 'T') {
    if (m == 0) {
      if (r == 0 && i < j)
        out = -QElem::generator(taub_gen(i, j, 0));
      else
        out = QElem::generator(tau_gen(i, j, r));
    } else {
      out = trm_expand('T', i, j, r + 1, m - 1) - trm_expand('T', i, j, r, m - 1);
    }
  } else if (family == 'B') {
    if (m == 0) {
      if (r == 0 && i >= j)
        out = -QElem::generator(tau_gen(i, j, 0));
      else
        out = QElem::generator(taub_gen(i, j, r));
    } else {
      out = trm_expand('B', i, j, r + 1, m - 1) - trm_expand('B', i, j, r, m - 1);
    }
  } else if (family == 'W') {
    if (r == 0) {
      out = trm_expand('B', i, j, 0, m);
    } else if (r == m) {
      out = trm_expand('T', i, j, 0, m);
      if (m % 2 == 0) out = -out;  // sign (-1)^{m+1}
    } else {
      out = trm_expand('W', i, j, r - 1, m - 1) - trm_expand('W', i, j, r, m - 1);
    }
  } else {
    throw UnknownAlgebraTag("trm_expand: family must be T, B or W");
  }
  trm_cache_.emplace(key, out);
  return out;
}

QElem QLoopCtx::rs_identity_target(int i, int j, int k, int l, int r, int s, int m, int n,
                                   bool mutate) {
  if (r < 1 || s < 1) throw IndexOutOfRange("rs identity needs r,s >= 1");
  auto T = [&](int a, int b, int rr, int mm) { return trm_expand('T', a, b, rr, mm); };
  const RatFun qq = RatFun::q_minus_qinv();
  int dik = i == k ? 1 : 0, djl = j == l ? 1 : 0;
  RatFun qik = qdelta(-dik), qik_diff = qdelta(dik) - qdelta(-dik);
  RatFun qjl = qdelta(-djl), qjl_diff = qdelta(djl) - qdelta(-djl);

  QElem out;
  out += (T(i, j, r, m + 1) * T(k, l, s, n) - T(i, j, r, m) * T(k, l, s, n + 1)) * qik;
  out -= T(i, j, r, m) * T(k, l, s + 1, n) * qik_diff;
  out -= (T(k, l, s, n) * T(i, j, r, m + 1) - T(k, l, s, n + 1) * T(i, j, r, m)) * qjl;
  out += T(k, l, s + 1, n) * T(i, j, r, m) * qjl_diff;
  if (i > k) out -= T(k, j, r + 1, m) * T(i, l, s, n) * qq;
  if (i < k) out -= T(k, j, r, m) * T(i, l, s + 1, n) * qq;
  if (l > j) out += T(k, j, s, n) * T(i, l, r + 1, m) * qq;
  if (l < j) out += T(k, j, s + 1, n) * T(i, l, r, m) * qq;
  if (mutate) out += T(i, j, r, m) * T(k, l, s, n + 1) * (qik * RatFun(2));
  return out;
}

SpanResult QLoopCtx::check_rs_identity(int i, int j, int k, int l, int r, int s, int m,
                                       int n, bool mutate, Pivot pivot) {
  QElem target = rs_identity_target(i, j, k, l, r, s, m, n, mutate);
  auto rels = relation_instances({{i, j, k, l}}, 1, std::max(r + m, s + n) + 1, {QKind::TT});
  std::string tid = "rs(" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + "," + std::to_string(l) + ";" + std::to_string(r) +
                    "," + std::to_string(s) + ";" + std::to_string(m) + "," +
                    std::to_string(n) + ")";
  return span_membership(target, rels, pivot, tid);
}

// ---- twisted side -------------------------------------------------------

QElem QLoopCtx::embed_twisted_qloop(TwCase cs, int i, int j, int r) const {
  require_even_for_symplectic(cs, N_);
  if (r < 0) throw IndexOutOfRange("embed_twisted_qloop: negative level");
  QElem out;
  for (int k = 1; k <= N_; ++k)
    for (int l = 1; l <= N_; ++l) {
      RatFun b = b_entry(cs, N_, k, l);
      if (b.is_zero()) continue;
      for (int p = 0; p <= r; ++p)
        out += aform_T(i, k, p) * aform_Tbar(j, l, r - p) * b;
    }
  return out;
}

QElem QLoopCtx::srm_base(TwCase cs, int i, int j) {
  const RatFun qq = RatFun::q_minus_qinv();
  if (cs == TwCase::orthogonal) {
    if (i > j) {
      QElem num = embed_twisted_qloop(cs, i, j, 0);
      QElem out = num.map_coeffs([&](const RatFun& c) { return c / qq; });
      for (const auto& [w, c] : out.terms())
        if (!c.integral_at_q1()) throw NonintegralDivision("srm base has a pole at q=1");
      return out;
    }
    if (i == j) return QElem();
    return -srm_expand(cs, j, i, 0, 0);
  }
  if (i >= j || j == iprime(i)) {
    QElem num = embed_twisted_qloop(cs, i, j, 0) - QElem(b_entry(cs, N_, i, j));
    QElem out = num.map_coeffs([&](const RatFun& c) { return c / qq; });
    for (const auto& [w, c] : out.terms())
      if (!c.integral_at_q1()) throw NonintegralDivision("srm base has a pole at q=1");
    return out;
  }
  return -srm_expand(cs, j, i, 0, 0);
}

QElem QLoopCtx::srm_expand(TwCase cs, int i, int j, int r, int m) {
  require_even_for_symplectic(cs, N_);
  if (r < 0 || m < 0) throw IndexOutOfRange("srm_expand: negative index");
  auto key = std::make_tuple(cs == TwCase::orthogonal ? 0 : 1, i, j, r, m);
  auto it = srm_cache_.find(key);
  if (it != srm_cache_.end()) return it->second;

  QElem out;
  if (m == 0) {
    if (r == 0) {
      out = srm_base(cs, i, j);
    } else {
      const RatFun qq = RatFun::q_minus_qinv();
      QElem num = embed_twisted_qloop(cs, i, j, r);
      out = num.map_coeffs([&](const RatFun& c) { return c / qq; });
      for (const auto& [w, c] : out.terms())
        if (!c.integral_at_q1()) throw NonintegralDivision("srm has a pole at q=1");
    }
  } else {
    out = srm_expand(cs, i, j, r + 1, m - 1) - srm_expand(cs, i, j, r, m - 1);
  }
  srm_cache_.emplace(key, out);
  return out;
}

QElem QLoopCtx::stm_expand(TwCase cs, int i, int j, int r, int m) {
  if (r < 0 || r > m) throw IndexOutOfRange("stm_expand: needs 0 <= r <= m");
  if (r == 0) return srm_expand(cs, j, i, 0, m);
  if (r == m) {
    QElem e = srm_expand(cs, i, j, 0, m);
    return (m % 2 == 0) ? -e : e;  // sign (-1)^{m+1}
  }
  return stm_expand(cs, i, j, r - 1, m - 1) - stm_expand(cs, i, j, r, m - 1);
}

bool QLoopCtx::check_lemma_srm(TwCase cs, int i, int j, int r, int m, bool mutate) {
  if (r < 1) throw IndexOutOfRange("lemma needs r >= 1");
  const RatFun qq = RatFun::q_minus_qinv();
  // q/(q+1), the weight on the diagonal boundary terms
  const RatFun qfrac(Poly::var(1), Poly({Rational(1), Rational(1)}));

  QElem rhs;
  for (int k = 1; k <= N_; ++k) {
    RatFun bkj = b_entry(cs, N_, k, j);
    if (!bkj.is_zero()) rhs += trm_expand('T', i, k, r, m) * bkj;
    RatFun bik = b_entry(cs, N_, i, k);
    if (!bik.is_zero()) rhs += trm_expand('B', j, k, r, m) * bik;
  }
  for (int k = 1; k <= N_; ++k)
    for (int l = 1; l <= N_; ++l) {
      RatFun b = b_entry(cs, N_, k, l);
      if (b.is_zero()) continue;
      for (int p = 1; p <= r - 1; ++p)
        rhs += trm_expand('T', i, k, p, 0) * trm_expand('B', j, l, r - p, m) * (qq * b);
      // Boundary sums with the q/(q+1) weight on the diagonal term.  The
      // level-0 spectator factors are the plain A-form generators tau_ik^(0)
      // and taubar_jl^(0); on the diagonal these differ from the
      // double-indexed elements by tau_jj^(0) + taubar_jj^(0), which lies in
      // every filtration ideal, and only the generator form makes the
      // identity exact in the free algebra.
      if (k <= i)
        rhs += QElem::generator(tau_gen(i, k, 0)) * trm_expand('B', j, l, r, m) *
               (qq * b * (k == i ? qfrac : RatFun(1)));
      if (l >= j)
        rhs += trm_expand('T', i, k, r, m) * QElem::generator(taub_gen(j, l, 0)) *
               (qq * b * (l == j ? qfrac : RatFun(1)));
      for (int a = 0; a <= m - 1; ++a)
        rhs += trm_expand('T', i, k, r, a) * trm_expand('B', j, l, 1, m - 1 - a) * (qq * b);
    }
  if (mutate) rhs = rhs + trm_expand('T', i, j, r, m) * RatFun(2);
  return srm_expand(cs, i, j, r, m) == rhs;
}

RelationFamily<RatFun> QLoopCtx::twisted_family(TwCase cs, int cap, bool images) {
  require_even_for_symplectic(cs, N_);
  auto s_entries = [&](int leg) {
    return [this, cs, cap, images, leg](int i, int j) {
      Series<NCPoly<RatFun>> s(kUV);
      int slot = leg - 1;
      for (int r = 0; r <= cap; ++r) {
        QElem g;
        if (images) {
          g = embed_twisted_qloop(cs, i, j, r);
        } else {
          if (r == 0) {
            if (cs == TwCase::orthogonal) {
              if (i < j)
                g = QElem();
              else if (i == j)
                g = QElem::one();
              else
                g = QElem::generator(Gen{Fam::capS, static_cast<int16_t>(i),
                                         static_cast<int16_t>(j), 0});
            } else {
              if (i < j && j != iprime(i))
                g = QElem();
              else
                g = QElem::generator(Gen{Fam::capS, static_cast<int16_t>(i),
                                         static_cast<int16_t>(j), 0});
            }
          } else {
            g = QElem::generator(
                Gen{Fam::capS, static_cast<int16_t>(i), static_cast<int16_t>(j), r});
          }
        }
        if (g.is_zero()) continue;
        Exp e{0, 0, 0};
        e[slot] = -r;
        s += Series<NCPoly<RatFun>>::monomial(kUV, e, g);
      }
      s.restrict_window(slot, -cap, kPosInf);
      return s;
    };
  };
  auto rq = r_quantum(N_, 2, 1, 2, kUV, "u", "v");
  auto rqt = transpose_first_subst(rq, RSubst::invert, "u", "v", 0);
  auto s1 = place_one_leg<RatFun>(N_, 2, 1, kUV, s_entries(1));
  auto s2 = place_one_leg<RatFun>(N_, 2, 2, kUV, s_entries(2));
  return expand_matrix_relation<RatFun>({rq, s1, rqt, s2}, {s2, rqt, s1, rq},
                                        "qtw-" + twcase_name(cs));
}

std::vector<std::pair<std::string, QElem>> QLoopCtx::twisted_level0(TwCase cs,
                                                                    bool images) const {
  require_even_for_symplectic(cs, N_);
  std::vector<std::pair<std::string, QElem>> out;
  auto S0 = [&](int i, int j) {
    if (images) return embed_twisted_qloop(cs, i, j, 0);
    return QElem::generator(Gen{Fam::capS, static_cast<int16_t>(i),
                                static_cast<int16_t>(j), 0});
  };
  if (cs == TwCase::orthogonal) {
    for (int i = 1; i <= N_; ++i)
      for (int j = 1; j <= N_; ++j) {
        if (i < j)
          out.emplace_back("zero(" + std::to_string(i) + "," + std::to_string(j) + ")",
                           S0(i, j));
        if (i == j)
          out.emplace_back("unit(" + std::to_string(i) + ")", S0(i, i) - QElem::one());
      }
    return out;
  }
  for (int i = 1; i <= N_; ++i)
    for (int j = 1; j <= N_; ++j)
      if (i < j && j != iprime(i))
        out.emplace_back("zero(" + std::to_string(i) + "," + std::to_string(j) + ")",
                         S0(i, j));
  const RatFun q3 = RatFun::qpow(3), q2 = RatFun::qpow(2);
  for (int i = 1; i + 1 <= N_; i += 2) {
    int ip = iprime(i);
    QElem rel = S0(ip, ip) * S0(i, i) - S0(ip, i) * S0(i, ip) * q2 - QElem(q3);
    out.emplace_back("const(" + std::to_string(i) + ")", std::move(rel));
  }
  return out;
}

}  // namespace rttdeg
