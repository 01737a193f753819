#ifndef BENSON_CONVEXPROG_HPP
#define BENSON_CONVEXPROG_HPP

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "benson/errors.hpp"
#include "benson/linalg.hpp"
#include "benson/linprog.hpp"

namespace benson {

// Convex constraint atoms. Every expression is finite-valued on the box;
// instances needing extended values encode them through the box itself.
struct ConvexExpr;

struct AffineExpr {
  Vec c;
  double d = 0.0;  // c.x + d
};

struct QuadExpr {
  Matrix Q;  // symmetric PSD
  Vec c;
  double d = 0.0;  // 0.5 x'Qx + c.x + d
};

struct Norm2Expr {
  Matrix A;
  Vec b;
  double r = 0.0;  // |A x + b|_2 - r
};

struct MaxExpr {
  std::vector<ConvexExpr> args;
};

struct ConvexExpr {
  std::variant<AffineExpr, QuadExpr, Norm2Expr, MaxExpr> node;
};

double eval(const ConvexExpr& g, const Vec& x);

// A subgradient s with g(y) >= g(x) + s.(y-x) for all y. At Norm2 kinks
// the zero vector is returned; Max ties resolve to the first maximal arg.
Vec subgradient(const ConvexExpr& g, const Vec& x);

// Validates dimensions against n, symmetrizes Q within 1e-10 and clips
// eigenvalues in [-1e-8, 0) to zero. Throws Error on violations.
ConvexExpr sanitize_expr(ConvexExpr g, int n);

enum class Mode { Cpp, Mocp };

struct ProblemInstance {
  Mode mode = Mode::Cpp;
  int n = 0;  // variable count
  int q = 0;  // body dimension; the objective has q+1 rows
  Matrix G;   // q x n, full row rank (Cpp mode)
  Matrix C;   // (q+1) x n (Mocp mode)
  std::vector<ConvexExpr> constraints;
  Vec box_lo, box_hi;  // finite; the compactness certificate for X
  std::optional<Vec> interior_point;
  // Preferred representatives for scalarizations with non-unique optima,
  // tried in order and used only when optimal within the solver gap.
  std::vector<Vec> solution_hints;

  void validate() const;
  // Objective rows of the associated multiobjective program:
  // C in Mocp mode, [G; -1'G] in Cpp mode.
  Matrix objective_rows() const;
  double max_constraint_violation(const Vec& x) const;
};

struct ScalarSolution {
  Vec x;
  double value = 0.0;      // objective at x (restored feasible)
  double z = 0.0;          // P2 only: the optimal shift
  Vec w_dual;              // P2 only: weights, w >= 0, 1'w = 1
  int iterations = 0;      // master solves
  double max_violation = 0.0;
  double gap = 0.0;        // value minus the final relaxation bound
};

// Kelley cutting-plane solver for the two scalarizations over the box
// relaxation. The Slater point is computed lazily once per engine.
class ScalarizationEngine {
 public:
  explicit ScalarizationEngine(const ProblemInstance& inst, double benson_eps = 0.1);

  // min w'Gamma(x) over X
  ScalarSolution solve_p1(const Vec& w) const;
  // min z s.t. x in X, Gamma(x) - z e <= v; recovers the dual weights
  ScalarSolution solve_p2(const Vec& v) const;
  const Vec& slater_point() const;
  // Null when the feasible set has no strictly interior point (thin sets
  // still solve exactly through the affine cut path).
  const Vec* try_slater() const;

  double delta() const { return delta_; }
  int solve_count() const { return solves_; }
  const ProblemInstance& instance() const { return inst_; }
  const Matrix& gamma() const { return gamma_; }
  Vec gamma_at(const Vec& x) const { return gamma_.multiply(x); }

 private:
  const ProblemInstance& inst_;
  Matrix gamma_;
  double delta_;
  mutable std::optional<Vec> slater_;
  mutable int slater_state_ = 0;  // 0 unknown, 1 available, -1 unavailable
  mutable int solves_ = 0;
};

ScalarSolution solve_p1(const ProblemInstance& inst, const Vec& w);
ScalarSolution solve_p2(const ProblemInstance& inst, const Vec& v);

// Strictly feasible point: the supplied interior_point when present,
// otherwise Kelley on min t s.t. g_i(x) <= t. Throws NoInteriorPoint when
// the computed minimum is >= -1e-9.
Vec find_slater_point(const ProblemInstance& inst);

// Smallest lambda in [0,1] (bisection, 60 iterations) moving x_cand
// toward x_int until max_i g_i <= 0.
Vec restore_feasibility(const ProblemInstance& inst, const Vec& x_cand, const Vec& x_int);

}  // namespace benson

#endif
