#ifndef BENSON_BENSON_DUAL_HPP
#define BENSON_BENSON_DUAL_HPP

#include "benson/benson_run.hpp"
#include "benson/convexprog.hpp"
#include "benson/geometry.hpp"

namespace benson {

// phi(y, y*) = sum_{i<=q} y_i y*_i + y_{q+1} (1 - sum_{i<=q} y*_i) - y*_{q+1}
double coupling_phi(const Vec& y, const Vec& ystar);

// w(t) = (t_1, ..., t_q, 1 - sum_{i<=q} t_i); always sums to one.
Vec weight_map_w(const Vec& t);

// D*(t) = (t_1, ..., t_q, opt P1(w(t))); a point of the lower image.
Vec dual_point_Dstar(const ProblemInstance& inst, const Vec& t);
Vec dual_point_Dstar(const ScalarizationEngine& engine, const Vec& t);

// Outer approximation of the lower image induced by the single-point
// inner approximation {Gamma(xbar)} + R^{q+1}_+, where xbar solves the
// weighted-sum scalarization at wbar (wbar > 0, 1'wbar = 1).
Polyhedron initialize_dual_outer(const ProblemInstance& inst, const Vec& wbar);
Polyhedron initialize_dual_outer(const ScalarizationEngine& engine, const Vec& wbar);

// H-rep {w(t).y >= t_{q+1}} over the vertices t of d_outer, with the
// V-rep computed by double description. Vertices suffice because phi is
// affine in y* and increases along the recession direction -e^{q+1}.
Polyhedron dual_to_primal_inner(const Polyhedron& d_outer);

struct DualRunResult {
  Polyhedron p_inner;
  Polyhedron d_outer;
  double eps = 0.0;
  int cuts = 0;
  int solves = 0;
  std::vector<TraceRecord> trace;
};

// Shrinking outer approximation of the lower image; cuts with
// {phi(Gamma(x), .) >= 0} while a vertex fails the eps test, then turns
// the terminal dual set into the inner approximation of the upper image.
// An empty wbar selects the default e/(q+1).
DualRunResult run_dual(const ProblemInstance& inst, double eps, Vec wbar = {},
                       const RunOptions& options = {});

}  // namespace benson

#endif
