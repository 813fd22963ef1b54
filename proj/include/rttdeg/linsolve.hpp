#ifndef RTTDEG_LINSOLVE_HPP
#define RTTDEG_LINSOLVE_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rttdeg/ratfun.hpp"

namespace rttdeg {

enum class Pivot {
  min_col_nnz,  // sparsest column first, then sparsest row
  first_col,    // columns in declaration order (pivot-independence checks)
};

// Sparse exact linear solver over Q(q).  Solves sum_j x_j col_j = rhs.
//
// Columns come in two flavours: plain field columns (coefficients
// unconstrained) and "integral" columns whose solution coefficient must
// have no pole at q = 1.  Field columns are eliminated first with a
// sparsity pivot; integral columns are then eliminated with a
// minimal-valuation pivot, which makes the local-ring solvability question
// decidable: a back-substitution step that demands a pole proves that no
// pole-free assignment of the integral coefficients exists for this system.
class SparseSolver {
 public:
  int add_column(std::map<int, RatFun> col, bool integral) {
    cols_.push_back({std::move(col), integral});
    return static_cast<int>(cols_.size()) - 1;
  }
  void set_rhs(std::map<int, RatFun> rhs) { rhs_ = std::move(rhs); }

  enum class Status { solved, no_solution, not_integral };
  struct Result {
    Status status = Status::no_solution;
    std::vector<RatFun> x;             // per column, valid when solved
    std::map<int, RatFun> residual;    // rhs remainder when no_solution
  };

  Result solve(Pivot strategy = Pivot::min_col_nnz) const {
    // Row-major working copy.
    std::map<int, std::map<int, RatFun>> rows;
    std::map<int, RatFun> rhs = rhs_;
    for (size_t j = 0; j < cols_.size(); ++j)
      for (const auto& [r, c] : cols_[j].entries)
        if (!c.is_zero()) rows[r][static_cast<int>(j)] = c;

    const int ncols = static_cast<int>(cols_.size());
    std::set<int> live_rows;
    for (auto& [r, row] : rows) live_rows.insert(r);
    // Rows that appear only in the rhs still constrain the system.
    for (auto& [r, c] : rhs)
      if (!rows.count(r)) rows[r];  // empty row
    for (auto& [r, row] : rows) live_rows.insert(r);

    std::vector<bool> col_done(ncols, false);
    struct PivotRec {
      int row, col;
    };
    std::vector<PivotRec> pivots;

    auto eliminate = [&](int prow, int pcol) {
      const RatFun pval = rows[prow][pcol];
      std::vector<int> touched;
      for (int r : live_rows) {
        if (r == prow) continue;
        auto it = rows[r].find(pcol);
        if (it == rows[r].end()) continue;
        touched.push_back(r);
      }
      for (int r : touched) {
        RatFun f = rows[r][pcol] / pval;
        for (const auto& [c, v] : rows[prow]) {
          auto it = rows[r].find(c);
          if (it == rows[r].end()) {
            RatFun nv = -(f * v);
            if (!nv.is_zero()) rows[r][c] = nv;
          } else {
            it->second -= f * v;
            if (it->second.is_zero()) rows[r].erase(it);
          }
        }
        auto rit = rhs.find(prow);
        if (rit != rhs.end()) {
          RatFun delta = f * rit->second;
          auto it = rhs.find(r);
          if (it == rhs.end()) {
            if (!delta.is_zero()) rhs[r] = -delta;
          } else {
            it->second -= delta;
            if (it->second.is_zero()) rhs.erase(it);
          }
        }
      }
      pivots.push_back({prow, pcol});
      col_done[pcol] = true;
      live_rows.erase(prow);
    };

    // Phase 1: field columns.
    auto pick_field_pivot = [&]() -> std::optional<std::pair<int, int>> {
      int best_col = -1, best_nnz = -1;
      std::vector<int> col_nnz(ncols, 0);
      for (int r : live_rows)
        for (const auto& [c, v] : rows[r])
          if (!col_done[c] && !cols_[c].integral) ++col_nnz[c];
      for (int c = 0; c < ncols; ++c) {
        if (col_done[c] || cols_[c].integral || col_nnz[c] == 0) continue;
        if (strategy == Pivot::first_col) {
          best_col = c;
          break;
        }
        if (best_col < 0 || col_nnz[c] < best_nnz) {
          best_col = c;
          best_nnz = col_nnz[c];
        }
      }
      if (best_col < 0) return std::nullopt;
      int best_row = -1;
      size_t best_rnnz = 0;
      for (int r : live_rows) {
        auto it = rows[r].find(best_col);
        if (it == rows[r].end()) continue;
        if (best_row < 0 || rows[r].size() < best_rnnz) {
          best_row = r;
          best_rnnz = rows[r].size();
        }
      }
      return std::make_pair(best_row, best_col);
    };
    while (auto p = pick_field_pivot()) eliminate(p->first, p->second);

    // Phase 2: integral columns.  Rescaling an equation by a power of
    // (q-1) does not change its solutions, so every live row is first
    // normalized to minimal valuation zero; a valuation-zero pivot is then
    // a global-minimum pivot and the local-ring elimination argument
    // applies (a non-integral back-substitution proves that no pole-free
    // assignment exists for this system).
    auto q1_unit = [](const RatFun& v) {
      return v.num().eval(Rational(1)) != 0 && v.den().eval(Rational(1)) != 0;
    };
    auto normalize_row = [&](int r) {
      auto it = rows.find(r);
      if (it == rows.end() || it->second.empty()) return;
      int minval = INT_MAX;
      for (const auto& [c, v] : it->second) {
        if (q1_unit(v)) {
          minval = 0;
          break;
        }
        minval = std::min(minval, v.q1_valuation());
      }
      if (minval == 0 || minval == INT_MAX) return;
      RatFun f = (minval > 0)
                     ? RatFun(Poly(Rational(1)),
                              Poly::pow(Poly({Rational(-1), Rational(1)}), minval))
                     : RatFun(Poly::pow(Poly({Rational(-1), Rational(1)}), -minval));
      for (auto& [c, v] : it->second) v *= f;
      auto rit = rhs.find(r);
      if (rit != rhs.end()) rit->second *= f;
    };
    auto pick_dvr_pivot = [&]() -> std::optional<std::pair<int, int>> {
      int best_row = -1, best_col = -1;
      size_t best_rnnz = 0;
      for (int r : live_rows) {
        normalize_row(r);
        for (const auto& [c, v] : rows[r]) {
          if (col_done[c]) continue;
          if (!q1_unit(v)) continue;
          if (best_row < 0 || rows[r].size() < best_rnnz) {
            best_row = r;
            best_col = c;
            best_rnnz = rows[r].size();
          }
          break;
        }
      }
      if (best_row < 0) return std::nullopt;
      return std::make_pair(best_row, best_col);
    };
    while (auto p = pick_dvr_pivot()) eliminate(p->first, p->second);

    // Remaining live rows must have empty coefficient part; a nonzero rhs
    // there means the target is outside the column span.
    Result res;
    for (int r : live_rows) {
      auto it = rhs.find(r);
      if (it != rhs.end() && !it->second.is_zero()) res.residual[r] = it->second;
    }
    if (!res.residual.empty()) {
      res.status = Status::no_solution;
      return res;
    }

    // Back-substitution in reverse pivot order, free columns set to zero.
    res.x.assign(ncols, RatFun());
    bool integral_ok = true;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto& row = rows[it->row];
      RatFun acc;
      auto rit = rhs.find(it->row);
      if (rit != rhs.end()) acc = rit->second;
      for (const auto& [c, v] : row) {
        if (c == it->col) continue;
        if (!res.x[c].is_zero()) acc -= v * res.x[c];
      }
      RatFun xv = acc / row.at(it->col);
      if (cols_[it->col].integral && !xv.is_zero() && xv.q1_valuation() < 0)
        integral_ok = false;
      res.x[it->col] = xv;
    }
    res.status = integral_ok ? Status::solved : Status::not_integral;
    return res;
  }

 private:
  struct Col {
    std::map<int, RatFun> entries;
    bool integral = false;
  };
  std::vector<Col> cols_;
  std::map<int, RatFun> rhs_;
};

}  // namespace rttdeg

#endif
