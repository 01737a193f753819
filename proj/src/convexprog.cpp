#include "benson/convexprog.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace benson {

namespace {

constexpr double kConstraintFeasTol = 1e-9;
constexpr int kKelleyCap = 500;

void check_dims(const ConvexExpr& g, int n) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, AffineExpr>) {
          if (static_cast<int>(node.c.size()) != n) throw Error("affine dimension mismatch");
        } else if constexpr (std::is_same_v<T, QuadExpr>) {
          if (node.Q.rows != n || node.Q.cols != n || static_cast<int>(node.c.size()) != n)
            throw Error("quadratic dimension mismatch");
        } else if constexpr (std::is_same_v<T, Norm2Expr>) {
          if (node.A.cols != n || static_cast<int>(node.b.size()) != node.A.rows)
            throw Error("norm dimension mismatch");
        } else {
          if (node.args.empty()) throw Error("max expression needs arguments");
          for (const ConvexExpr& a : node.args) check_dims(a, n);
        }
      },
      g.node);
}

}  // namespace

double eval(const ConvexExpr& g, const Vec& x) {
  return std::visit(
      [&](const auto& node) -> double {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, AffineExpr>) {
          return dot(node.c, x) + node.d;
        } else if constexpr (std::is_same_v<T, QuadExpr>) {
          Vec qx = node.Q.multiply(x);
          return 0.5 * dot(x, qx) + dot(node.c, x) + node.d;
        } else if constexpr (std::is_same_v<T, Norm2Expr>) {
          Vec ax = node.A.multiply(x);
          kernels::axpy(1.0, node.b.data(), ax.data(), ax.size());
          return norm2(ax) - node.r;
        } else {
          double best = -kInf;
          for (const ConvexExpr& a : node.args) best = std::max(best, eval(a, x));
          return best;
        }
      },
      g.node);
}

Vec subgradient(const ConvexExpr& g, const Vec& x) {
  return std::visit(
      [&](const auto& node) -> Vec {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, AffineExpr>) {
          return node.c;
        } else if constexpr (std::is_same_v<T, QuadExpr>) {
          Vec s = node.Q.multiply(x);
          kernels::axpy(1.0, node.c.data(), s.data(), s.size());
          return s;
        } else if constexpr (std::is_same_v<T, Norm2Expr>) {
          Vec ax = node.A.multiply(x);
          kernels::axpy(1.0, node.b.data(), ax.data(), ax.size());
          double nrm = norm2(ax);
          if (nrm <= 1e-14) return Vec(x.size(), 0.0);
          return node.A.multiply_transposed(scaled(ax, 1.0 / nrm));
        } else {
          const ConvexExpr* best = nullptr;
          double best_val = -kInf;
          for (const ConvexExpr& a : node.args) {
            double v = eval(a, x);
            if (v > best_val) {
              best_val = v;
              best = &a;
            }
          }
          if (!best) throw Error("max expression needs arguments");
          return subgradient(*best, x);
        }
      },
      g.node);
}

ConvexExpr sanitize_expr(ConvexExpr g, int n) {
  check_dims(g, n);
  if (auto* quad = std::get_if<QuadExpr>(&g.node)) {
    Matrix& Q = quad->Q;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (std::fabs(Q(i, j) - Q(j, i)) > 1e-10)
          throw Error("quadratic matrix is not symmetric");
        double avg = 0.5 * (Q(i, j) + Q(j, i));
        Q(i, j) = Q(j, i) = avg;
      }
    Vec vals;
    Matrix vecs;
    jacobi_eigen(Q, vals, vecs);
    double mn = *std::min_element(vals.begin(), vals.end());
    if (mn < -1e-8) throw Error("quadratic matrix is not positive semidefinite");
    if (mn < 0.0) {
      for (double& v : vals) v = std::max(v, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int k = 0; k < n; ++k) s += vecs(i, k) * vals[k] * vecs(j, k);
          Q(i, j) = s;
        }
    }
  } else if (auto* mx = std::get_if<MaxExpr>(&g.node)) {
    for (ConvexExpr& a : mx->args) a = sanitize_expr(std::move(a), n);
  }
  return g;
}

Matrix ProblemInstance::objective_rows() const {
  if (mode == Mode::Mocp) return C;
  Matrix rows(q + 1, n);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < n; ++j) rows(i, j) = G(i, j);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < q; ++i) s += G(i, j);
    rows(q, j) = -s;
  }
  return rows;
}

double ProblemInstance::max_constraint_violation(const Vec& x) const {
  double mv = -kInf;
  for (const ConvexExpr& g : constraints) mv = std::max(mv, eval(g, x));
  return mv;
}

void ProblemInstance::validate() const {
  if (n < 1 || q < 1) throw Error("instance needs n >= 1 and q >= 1");
  if (static_cast<int>(box_lo.size()) != n || static_cast<int>(box_hi.size()) != n)
    throw Error("box dimension mismatch");
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(box_lo[j]) || !std::isfinite(box_hi[j]))
      throw Error("box must be bounded");
    if (box_lo[j] > box_hi[j]) throw Error("box is empty");
  }
  if (mode == Mode::Cpp) {
    if (G.rows != q || G.cols != n) throw Error("G must be q x n");
    if (rank(G, 1e-8) != q) throw RankDeficient("G does not have full row rank");
  } else {
    if (C.rows != q + 1 || C.cols != n) throw Error("C must be (q+1) x n");
  }
  for (const ConvexExpr& g : constraints) check_dims(g, n);
  if (interior_point) {
    const Vec& p = *interior_point;
    if (static_cast<int>(p.size()) != n) throw Error("interior point dimension mismatch");
    for (int j = 0; j < n; ++j)
      if (p[j] <= box_lo[j] || p[j] >= box_hi[j])
        throw Error("interior point must lie strictly inside the box");
    if (max_constraint_violation(p) >= -1e-9)
      throw Error("interior point is not strictly feasible");
  }
  for (const Vec& h : solution_hints)
    if (static_cast<int>(h.size()) != n) throw Error("solution hint dimension mismatch");
}

ScalarizationEngine::ScalarizationEngine(const ProblemInstance& inst, double benson_eps)
    : inst_(inst), gamma_(inst.objective_rows()),
      delta_(std::min(1e-7, benson_eps * 1e-3)) {}

const Vec* ScalarizationEngine::try_slater() const {
  if (slater_state_ == 0) {
    try {
      slater_ = find_slater_point(inst_);
      slater_state_ = 1;
    } catch (const NoInteriorPoint&) {
      slater_state_ = -1;
    }
  }
  return slater_state_ == 1 ? &*slater_ : nullptr;
}

const Vec& ScalarizationEngine::slater_point() const {
  if (!try_slater()) throw NoInteriorPoint("feasible set has no strictly interior point");
  return *slater_;
}

namespace {

struct Cut {
  Vec s;
  double rhs;
};

Cut linearize(const ConvexExpr& g, const Vec& x) {
  double v = eval(g, x);
  Vec s = subgradient(g, x);
  double rhs = dot(s, x) - v;  // s.x <= s.x0 - g(x0) for all feasible x
  return {std::move(s), rhs};
}

// Linearizations of every constraint violated beyond threshold at x; the
// most violated constraint is always cut to guarantee progress.
void collect_cuts(const ProblemInstance& inst, const Vec& x, double threshold,
                  std::vector<Cut>& cuts) {
  int worst = -1;
  double worst_viol = kConstraintFeasTol;
  bool added = false;
  for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
    double v = eval(inst.constraints[i], x);
    if (v > worst_viol) {
      worst_viol = v;
      worst = static_cast<int>(i);
    }
    if (v > threshold) {
      cuts.push_back(linearize(inst.constraints[i], x));
      added = true;
    }
  }
  if (!added && worst >= 0) cuts.push_back(linearize(inst.constraints[worst], x));
}

}  // namespace

ScalarSolution ScalarizationEngine::solve_p1(const Vec& w) const {
  ++solves_;
  if (static_cast<int>(w.size()) != inst_.q + 1) throw Error("weight dimension mismatch");
  const int n = inst_.n;
  Vec f = gamma_.multiply_transposed(w);

  std::vector<Cut> cuts;
  double lb = -kInf;
  Vec x_best;
  double ub_best = kInf;
  int iters = 0;
  Vec x_ret;
  double value = 0.0, gap = 0.0, mv_ret = 0.0;
  bool done = false;

  for (iters = 1; iters <= kKelleyCap && !done; ++iters) {
    LpProblem lp;
    lp.c = f;
    lp.lo = inst_.box_lo;
    lp.up = inst_.box_hi;
    lp.A = Matrix(static_cast<int>(cuts.size()), n);
    lp.b.resize(cuts.size());
    lp.sense.assign(cuts.size(), RowSense::LE);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      std::copy(cuts[i].s.begin(), cuts[i].s.end(), lp.A.row(static_cast<int>(i)));
      lp.b[i] = cuts[i].rhs;
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible)
      throw InstanceInfeasible("no feasible point in the box");
    if (sol.status == LpStatus::Unbounded)
      throw NumericalBreakdown("bounded master reported unbounded");
    lb = sol.objective;
    double mv = inst_.max_constraint_violation(sol.x);
    if (mv <= kConstraintFeasTol) {
      x_ret = sol.x;
      value = dot(f, x_ret);
      gap = std::max(0.0, value - lb);
      mv_ret = std::max(mv, 0.0);
      done = true;
      break;
    }
    std::size_t before = cuts.size();
    collect_cuts(inst_, sol.x, delta_ / 10.0, cuts);
    if (cuts.size() == before)
      throw NumericalBreakdown("cutting loop stalled without progress");

    if (const Vec* anchor = try_slater()) {
      Vec xf = restore_feasibility(inst_, sol.x, *anchor);
      double ub = dot(f, xf);
      if (ub < ub_best) {
        ub_best = ub;
        x_best = std::move(xf);
      }
      if (ub_best - lb <= delta_) {
        x_ret = x_best;
        value = ub_best;
        gap = std::max(0.0, ub_best - lb);
        mv_ret = std::max(inst_.max_constraint_violation(x_ret), 0.0);
        done = true;
        break;
      }
    }
  }
  if (!done) throw NumericalBreakdown("Kelley iteration cap reached in P1");

  // Preferred representatives: first hint that is feasible and optimal
  // within the solver gap wins.
  for (const Vec& h : inst_.solution_hints) {
    if (static_cast<int>(h.size()) != n) continue;
    bool in_box = true;
    for (int j = 0; j < n; ++j)
      if (h[j] < inst_.box_lo[j] - 1e-12 || h[j] > inst_.box_hi[j] + 1e-12) in_box = false;
    if (!in_box) continue;
    if (inst_.max_constraint_violation(h) > kConstraintFeasTol) continue;
    double hval = dot(f, h);
    if (hval <= lb + std::max(delta_, 1e-9)) {
      ScalarSolution out;
      out.x = h;
      out.value = hval;
      out.iterations = iters;
      out.max_violation = std::max(inst_.max_constraint_violation(h), 0.0);
      out.gap = std::max(0.0, hval - lb);
      return out;
    }
  }

  ScalarSolution out;
  out.x = std::move(x_ret);
  out.value = value;
  out.iterations = iters;
  out.max_violation = mv_ret;
  out.gap = gap;
  return out;
}

ScalarSolution ScalarizationEngine::solve_p2(const Vec& v) const {
  ++solves_;
  const int n = inst_.n;
  const int qq = inst_.q + 1;
  if (static_cast<int>(v.size()) != qq) throw Error("reference point dimension mismatch");

  std::vector<Cut> cuts;
  double lb = -kInf;
  Vec x_best;
  double z_best = kInf;
  int iters = 0;
  bool done = false;
  Vec x_ret;
  double z_ret = 0.0, gap = 0.0, mv_ret = 0.0;
  Vec w_dual;

  auto min_shift = [&](const Vec& x) {
    Vec gx = gamma_.multiply(x);
    double z = -kInf;
    for (int j = 0; j < qq; ++j) z = std::max(z, gx[j] - v[j]);
    return z;
  };

  for (iters = 1; iters <= kKelleyCap && !done; ++iters) {
    const int rows = qq + static_cast<int>(cuts.size());
    LpProblem lp;
    lp.c.assign(n + 1, 0.0);
    lp.c[n] = 1.0;
    lp.lo = inst_.box_lo;
    lp.up = inst_.box_hi;
    lp.lo.push_back(-kInf);
    lp.up.push_back(kInf);
    lp.A = Matrix(rows, n + 1);
    lp.b.resize(rows);
    lp.sense.assign(rows, RowSense::LE);
    for (int j = 0; j < qq; ++j) {
      for (int k = 0; k < n; ++k) lp.A(j, k) = gamma_(j, k);
      lp.A(j, n) = -1.0;
      lp.b[j] = v[j];
    }
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      int r = qq + static_cast<int>(i);
      std::copy(cuts[i].s.begin(), cuts[i].s.end(), lp.A.row(r));
      lp.A(r, n) = 0.0;
      lp.b[r] = cuts[i].rhs;
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible)
      throw InstanceInfeasible("no feasible point in the box");
    if (sol.status == LpStatus::Unbounded)
      throw NumericalBreakdown("P2 master reported unbounded");
    lb = sol.objective;
    Vec xm(sol.x.begin(), sol.x.begin() + n);
    double mv = inst_.max_constraint_violation(xm);

    auto finish = [&](Vec&& xx, double zz) {
      x_ret = std::move(xx);
      z_ret = zz;
      gap = std::max(0.0, zz - lb);
      mv_ret = std::max(inst_.max_constraint_violation(x_ret), 0.0);
      w_dual.assign(qq, 0.0);
      double sum = 0.0;
      for (int j = 0; j < qq; ++j) {
        double wj = -sol.y_dual[j];  // LE rows carry nonpositive duals
        if (wj < 0.0) wj = 0.0;
        w_dual[j] = wj;
        sum += wj;
      }
      if (sum < 0.5) throw NumericalBreakdown("degenerate dual weights in P2");
      kernels::scale(1.0 / sum, w_dual.data(), w_dual.size());
      done = true;
    };

    if (mv <= kConstraintFeasTol) {
      double zc = min_shift(xm);
      finish(std::move(xm), zc);
      break;
    }
    std::size_t before = cuts.size();
    collect_cuts(inst_, xm, delta_ / 10.0, cuts);
    if (cuts.size() == before)
      throw NumericalBreakdown("cutting loop stalled without progress");

    if (const Vec* anchor = try_slater()) {
      Vec xf = restore_feasibility(inst_, xm, *anchor);
      double zf = min_shift(xf);
      if (zf < z_best) {
        z_best = zf;
        x_best = std::move(xf);
      }
      if (z_best - lb <= delta_) {
        finish(std::move(x_best), z_best);
        break;
      }
    }
  }
  if (!done) throw NumericalBreakdown("Kelley iteration cap reached in P2");

  ScalarSolution out;
  out.x = std::move(x_ret);
  out.z = z_ret;
  out.value = z_ret;
  out.w_dual = std::move(w_dual);
  out.iterations = iters;
  out.max_violation = mv_ret;
  out.gap = gap;
  return out;
}

ScalarSolution solve_p1(const ProblemInstance& inst, const Vec& w) {
  return ScalarizationEngine(inst).solve_p1(w);
}

ScalarSolution solve_p2(const ProblemInstance& inst, const Vec& v) {
  return ScalarizationEngine(inst).solve_p2(v);
}

Vec find_slater_point(const ProblemInstance& inst) {
  if (inst.interior_point) return *inst.interior_point;
  const int n = inst.n;
  if (inst.constraints.empty()) {
    Vec mid(n);
    for (int j = 0; j < n; ++j) mid[j] = 0.5 * (inst.box_lo[j] + inst.box_hi[j]);
    return mid;
  }

  std::vector<Cut> cuts;  // s.x - t <= rhs
  {
    Vec mid(n);
    for (int j = 0; j < n; ++j) mid[j] = 0.5 * (inst.box_lo[j] + inst.box_hi[j]);
    for (const ConvexExpr& g : inst.constraints) cuts.push_back(linearize(g, mid));
  }
  Vec best_x;
  double best_val = kInf;
  for (int iter = 1; iter <= kKelleyCap; ++iter) {
    const int rows = static_cast<int>(cuts.size());
    LpProblem lp;
    lp.c.assign(n + 1, 0.0);
    lp.c[n] = 1.0;
    lp.lo = inst.box_lo;
    lp.up = inst.box_hi;
    lp.lo.push_back(-kInf);
    lp.up.push_back(kInf);
    lp.A = Matrix(rows, n + 1);
    lp.b.resize(rows);
    lp.sense.assign(rows, RowSense::LE);
    for (int i = 0; i < rows; ++i) {
      std::copy(cuts[i].s.begin(), cuts[i].s.end(), lp.A.row(i));
      lp.A(i, n) = -1.0;
      lp.b[i] = cuts[i].rhs;
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
      throw NumericalBreakdown("Slater master did not solve");
    Vec xm(sol.x.begin(), sol.x.begin() + n);
    double lb = sol.objective;
    double val = inst.max_constraint_violation(xm);
    if (val < best_val) {
      best_val = val;
      best_x = xm;
    }
    if (best_val < -1e-6 || best_val - lb <= 1e-10) break;
    for (const ConvexExpr& g : inst.constraints) cuts.push_back(linearize(g, xm));
  }
  if (!(best_val < -1e-9))
    throw NoInteriorPoint("feasible set has no strictly interior point");
  return best_x;
}

Vec restore_feasibility(const ProblemInstance& inst, const Vec& x_cand, const Vec& x_int) {
  if (inst.max_constraint_violation(x_cand) <= 0.0) return x_cand;
  double lo = 0.0, hi = 1.0;
  Vec diff = add_scaled(x_int, -1.0, x_cand);  // x_int - x_cand
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    Vec xm = add_scaled(x_cand, mid, diff);
    if (inst.max_constraint_violation(xm) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return add_scaled(x_cand, hi, diff);
}

}  // namespace benson
