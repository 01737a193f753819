#include "benson/linprog.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

// Bounded-variable primal simplex, two-phase, with Bland's anti-cycling
// rule for both the entering and the leaving choice. The basis inverse is
// kept explicitly and updated by eta pivots with periodic refactorization.
namespace benson {

namespace {

constexpr double kDualTol = 1e-9;
constexpr double kRatioTol = 1e-10;
constexpr int kRefactorEvery = 64;

enum VarStat : signed char { AtLower, AtUpper, Basic, FreeZero };

struct Simplex {
  const LpProblem& p;
  int m, n;    // rows, structural variables
  int ncols;   // n + m slacks (+ artificials appended later)
  Vec lo, up, cost, x;
  std::vector<signed char> stat;
  std::vector<int> basis;    // row -> column
  std::vector<int> art_row;  // artificial index -> row
  Vec art_sign;
  Matrix binv;
  int iterations = 0;
  int pivots_since_refactor = 0;

  explicit Simplex(const LpProblem& prob)
      : p(prob), m(prob.num_rows()), n(prob.num_vars()) {
    ncols = n + m;
    lo.assign(ncols, 0.0);
    up.assign(ncols, 0.0);
    for (int j = 0; j < n; ++j) {
      lo[j] = p.lo[j];
      up[j] = p.up[j];
    }
    for (int i = 0; i < m; ++i) {
      switch (p.sense[i]) {
        case RowSense::LE: lo[n + i] = 0.0;   up[n + i] = kInf; break;
        case RowSense::GE: lo[n + i] = -kInf; up[n + i] = 0.0;  break;
        case RowSense::EQ: lo[n + i] = 0.0;   up[n + i] = 0.0;  break;
      }
    }
    cost.assign(ncols, 0.0);
    x.assign(ncols, 0.0);
    stat.assign(ncols, AtLower);
    binv = Matrix::identity(m);
    basis.assign(m, -1);
  }

  void fill_column(int j, Vec& col) const {
    col.assign(m, 0.0);
    if (j < n) {
      for (int i = 0; i < m; ++i) col[i] = p.A(i, j);
    } else if (j < n + m) {
      col[j - n] = 1.0;
    } else {
      int k = j - n - m;
      col[art_row[k]] = art_sign[k];
    }
  }

  Vec ftran(int j) const {
    Vec col;
    fill_column(j, col);
    Vec w(m, 0.0);
    for (int i = 0; i < m; ++i) w[i] = kernels::dot(binv.row(i), col.data(), m);
    return w;
  }

  Vec duals() const {
    Vec y(m, 0.0);
    for (int i = 0; i < m; ++i) {
      double cb = cost[basis[i]];
      if (cb != 0.0) kernels::axpy(cb, binv.row(i), y.data(), m);
    }
    return y;
  }

  double reduced_cost(int j, const Vec& y) const {
    if (j < n) {
      double s = cost[j];
      for (int i = 0; i < m; ++i) s -= y[i] * p.A(i, j);
      return s;
    }
    if (j < n + m) return cost[j] - y[j - n];
    int k = j - n - m;
    return cost[j] - y[art_row[k]] * art_sign[k];
  }

  void refactor() {
    if (m == 0) return;
    Matrix b(m, m);
    Vec col;
    for (int i = 0; i < m; ++i) {
      fill_column(basis[i], col);
      for (int r = 0; r < m; ++r) b(r, i) = col[r];
    }
    if (!invert(b, binv, 1e-13))
      throw NumericalBreakdown("singular basis during refactorization");
    recompute_basics();
    pivots_since_refactor = 0;
  }

  void recompute_basics() {
    Vec rhs = p.b;
    Vec col;
    for (int j = 0; j < ncols; ++j) {
      if (stat[j] == Basic || x[j] == 0.0) continue;
      fill_column(j, col);
      kernels::axpy(-x[j], col.data(), rhs.data(), m);
    }
    for (int i = 0; i < m; ++i) x[basis[i]] = kernels::dot(binv.row(i), rhs.data(), m);
  }

  // One simplex phase on the current costs. Returns true when optimal,
  // false when unbounded (ray_out receives the improving direction over
  // all columns).
  bool iterate(int max_iters, Vec* ray_out) {
    for (;; ++iterations) {
      if (iterations > max_iters)
        throw NumericalBreakdown("simplex iteration limit exceeded");
      Vec y = duals();
      int enter = -1;
      int dir = +1;
      for (int j = 0; j < ncols && enter < 0; ++j) {
        if (stat[j] == Basic) continue;
        if (lo[j] == up[j]) continue;  // fixed
        double d = reduced_cost(j, y);
        if ((stat[j] == AtLower || stat[j] == FreeZero) && d < -kDualTol) {
          enter = j;
          dir = +1;
        } else if ((stat[j] == AtUpper || stat[j] == FreeZero) && d > kDualTol) {
          enter = j;
          dir = -1;
        }
      }
      if (enter < 0) return true;

      Vec w = ftran(enter);
      double bound_gap = up[enter] - lo[enter];  // inf arithmetic ok

      auto row_ratio = [&](int i) -> double {
        double delta = -dir * w[i];  // basic value moves by delta * t
        int k = basis[i];
        if (delta > kRatioTol) {
          if (up[k] == kInf) return kInf;
          return std::max(0.0, (up[k] - x[k]) / delta);
        }
        if (delta < -kRatioTol) {
          if (lo[k] == -kInf) return kInf;
          return std::max(0.0, (x[k] - lo[k]) / (-delta));
        }
        return kInf;
      };

      double t_min = bound_gap;
      for (int i = 0; i < m; ++i) t_min = std::min(t_min, row_ratio(i));

      int leave_row = -1;
      if (t_min < kInf) {
        // Bland tie-break: smallest blocking variable index.
        double band = t_min + 1e-12 * (1.0 + std::fabs(t_min));
        for (int i = 0; i < m; ++i) {
          if (row_ratio(i) > band) continue;
          if (leave_row < 0 || basis[i] < basis[leave_row]) leave_row = i;
        }
      }

      if (leave_row < 0 && !(bound_gap < kInf)) {
        if (ray_out) {
          ray_out->assign(ncols, 0.0);
          (*ray_out)[enter] = static_cast<double>(dir);
          for (int i = 0; i < m; ++i) (*ray_out)[basis[i]] = -dir * w[i];
        }
        return false;
      }

      if (leave_row < 0 || bound_gap <= row_ratio(leave_row)) {
        // bound flip: the entering variable crosses to its other bound
        double t = bound_gap;
        x[enter] = (dir > 0) ? up[enter] : lo[enter];
        stat[enter] = (dir > 0) ? AtUpper : AtLower;
        for (int i = 0; i < m; ++i) x[basis[i]] += -dir * w[i] * t;
        continue;
      }

      double piv = w[leave_row];
      if (std::fabs(piv) < kPivotTol) {
        if (pivots_since_refactor > 0) {
          refactor();
          continue;  // retry with a fresh inverse
        }
        throw NumericalBreakdown("pivot element below tolerance");
      }

      double t = row_ratio(leave_row);
      int leaving = basis[leave_row];
      double enter_from = x[enter];
      x[enter] = enter_from + dir * t;
      for (int i = 0; i < m; ++i) x[basis[i]] += -dir * w[i] * t;
      double delta_leave = -dir * w[leave_row];
      if (delta_leave > 0) {
        x[leaving] = up[leaving];
        stat[leaving] = AtUpper;
      } else {
        x[leaving] = lo[leaving];
        stat[leaving] = AtLower;
      }
      basis[leave_row] = enter;
      stat[enter] = Basic;

      kernels::scale(1.0 / piv, binv.row(leave_row), m);
      for (int i = 0; i < m; ++i) {
        if (i == leave_row) continue;
        if (w[i] != 0.0) kernels::axpy(-w[i], binv.row(leave_row), binv.row(i), m);
      }
      if (++pivots_since_refactor >= kRefactorEvery) refactor();
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const int m = p.num_rows();
  const int n = p.num_vars();
  if (n < 1) throw Error("LP needs at least one variable");
  if (static_cast<int>(p.b.size()) != m || static_cast<int>(p.sense.size()) != m ||
      p.A.cols != n || static_cast<int>(p.lo.size()) != n ||
      static_cast<int>(p.up.size()) != n)
    throw Error("inconsistent LP dimensions");
  for (int j = 0; j < n; ++j)
    if (p.lo[j] > p.up[j]) throw Error("variable with empty bound interval");

  Simplex s(p);

  // Nonbasic structurals start at the finite bound nearest zero.
  for (int j = 0; j < n; ++j) {
    if (s.lo[j] == -kInf && s.up[j] == kInf) {
      s.stat[j] = FreeZero;
      s.x[j] = 0.0;
    } else if (s.lo[j] != -kInf &&
               (s.up[j] == kInf || std::fabs(s.lo[j]) <= std::fabs(s.up[j]))) {
      s.stat[j] = AtLower;
      s.x[j] = s.lo[j];
    } else {
      s.stat[j] = AtUpper;
      s.x[j] = s.up[j];
    }
  }

  // Slack basis; rows whose slack value violates its bounds get a basic
  // artificial carrying the residual.
  Vec sval(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double ax = 0.0;
    for (int j = 0; j < n; ++j)
      if (s.x[j] != 0.0) ax += p.A(i, j) * s.x[j];
    sval[i] = p.b[i] - ax;
  }
  bool need_phase1 = false;
  for (int i = 0; i < m; ++i) {
    int sj = n + i;
    if (sval[i] >= s.lo[sj] - 1e-11 && sval[i] <= s.up[sj] + 1e-11) {
      s.basis[i] = sj;
      s.stat[sj] = Basic;
      s.x[sj] = sval[i];
    } else {
      double clamped = std::clamp(sval[i], s.lo[sj], s.up[sj]);
      s.x[sj] = clamped;
      s.stat[sj] = (clamped == s.lo[sj]) ? AtLower : AtUpper;
      double resid = sval[i] - clamped;
      s.art_row.push_back(i);
      s.art_sign.push_back(resid >= 0 ? 1.0 : -1.0);
      s.lo.push_back(0.0);
      s.up.push_back(kInf);
      s.cost.push_back(0.0);
      s.x.push_back(std::fabs(resid));
      s.stat.push_back(Basic);
      s.basis[i] = s.ncols;
      ++s.ncols;
      need_phase1 = true;
    }
  }

  const int max_iters = 10000 + 200 * (m + s.ncols);
  LpSolution sol;

  if (need_phase1) {
    for (int j = 0; j < s.ncols; ++j) s.cost[j] = (j >= n + m) ? 1.0 : 0.0;
    s.refactor();
    bool opt = s.iterate(max_iters, nullptr);
    if (!opt) throw NumericalBreakdown("phase one reported unbounded");
    double infeas = 0.0;
    for (int j = n + m; j < s.ncols; ++j) infeas += s.x[j];
    double scale = std::max(1.0, norm_inf(p.b));
    if (infeas > 1e-8 * scale) {
      sol.status = LpStatus::Infeasible;
      sol.x.assign(s.x.begin(), s.x.begin() + n);
      Vec y = s.duals();
      sol.y_dual = y;
      sol.reduced_costs.assign(n, 0.0);
      sol.objective = kInf;
      sol.iterations = s.iterations;
      return sol;
    }
    // Fix artificials at zero; pivot basic ones out where possible.
    for (int j = n + m; j < s.ncols; ++j) {
      s.lo[j] = s.up[j] = 0.0;
      s.x[j] = 0.0;
    }
    for (int i = 0; i < m; ++i) {
      if (s.basis[i] < n + m) continue;
      for (int j = 0; j < n + m; ++j) {
        if (s.stat[j] == Basic || s.lo[j] == s.up[j]) continue;
        Vec w = s.ftran(j);
        if (std::fabs(w[i]) > 1e-7) {
          int art = s.basis[i];
          s.basis[i] = j;
          s.stat[j] = Basic;
          s.stat[art] = AtLower;
          s.x[art] = 0.0;
          kernels::scale(1.0 / w[i], s.binv.row(i), m);
          for (int r = 0; r < m; ++r)
            if (r != i && w[r] != 0.0)
              kernels::axpy(-w[r], s.binv.row(i), s.binv.row(r), m);
          s.recompute_basics();
          break;
        }
      }
    }
  } else if (m > 0) {
    s.refactor();
  }

  for (int j = 0; j < s.ncols; ++j) s.cost[j] = (j < n) ? p.c[j] : 0.0;
  Vec ray;
  bool opt = s.iterate(max_iters, &ray);
  if (!opt) {
    sol.status = LpStatus::Unbounded;
    sol.x.assign(ray.begin(), ray.begin() + n);
    sol.objective = -kInf;
    sol.y_dual.assign(m, 0.0);
    sol.reduced_costs.assign(n, 0.0);
    sol.iterations = s.iterations;
    return sol;
  }

  if (m > 0) s.refactor();  // tighten residuals before extraction
  sol.status = LpStatus::Optimal;
  sol.x.assign(s.x.begin(), s.x.begin() + n);
  sol.objective = dot(p.c, sol.x);
  Vec y = s.duals();
  sol.y_dual = y;
  sol.reduced_costs.resize(n);
  for (int j = 0; j < n; ++j) sol.reduced_costs[j] = s.reduced_cost(j, y);
  sol.iterations = s.iterations;
  return sol;
}

}  // namespace benson
