#ifndef BENSON_LINPROG_HPP
#define BENSON_LINPROG_HPP

#include <limits>
#include <vector>

#include "benson/errors.hpp"
#include "benson/linalg.hpp"

namespace benson {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPivotTol = 1e-9;

enum class RowSense { LE, EQ, GE };
enum class LpStatus { Optimal, Infeasible, Unbounded };

// min c.x  s.t.  A x {<=,=,>=} b,  lo <= x <= up (entries may be +-inf).
struct LpProblem {
  Vec c;
  Matrix A;
  Vec b;
  std::vector<RowSense> sense;
  Vec lo, up;

  int num_rows() const { return A.rows; }
  int num_vars() const { return static_cast<int>(c.size()); }
};

// Row duals use the convention y = c_B B^{-1} of the equation form
// A x + s = b: at an optimum y_i <= 0 on <= rows and y_i >= 0 on >= rows,
// and c.x = y.b + sum of reduced costs times nonbasic bound values.
// On Infeasible, y_dual carries the phase-one Farkas multipliers; on
// Unbounded, x carries the improving ray direction.
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Vec x;
  double objective = 0.0;
  Vec y_dual;
  Vec reduced_costs;
  int iterations = 0;
};

LpSolution solve_lp(const LpProblem& p);

}  // namespace benson

#endif
