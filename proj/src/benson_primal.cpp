#include "benson/benson_primal.hpp"

#include <cmath>

namespace benson {

namespace {

// Ties at the eps test accept; the band only absorbs solver noise, one
// order below the confirmation tolerances used by the validation suite.
constexpr double kTieTol = 1e-9;

double safety_margin(const ScalarSolution& sol) {
  return sol.gap + 1e-12 * (1.0 + std::fabs(sol.value));
}

}  // namespace

Polyhedron initialize_outer(const ScalarizationEngine& engine) {
  const int dim = engine.instance().q + 1;
  Vec y(dim);
  for (int i = 0; i < dim; ++i) {
    ScalarSolution sol = engine.solve_p1(unit_vector(dim, i));
    y[i] = sol.value - safety_margin(sol);
  }
  std::vector<Halfspace> hs;
  VRep vr;
  for (int i = 0; i < dim; ++i) {
    hs.emplace_back(unit_vector(dim, i), y[i]);
    vr.rays.push_back(unit_vector(dim, i));
  }
  vr.vertices.push_back(std::move(y));
  return Polyhedron::from_both(dim, std::move(hs), std::move(vr));
}

Polyhedron initialize_outer(const ProblemInstance& inst) {
  inst.validate();
  return initialize_outer(ScalarizationEngine(inst));
}

PrimalRunResult run_primal(const ProblemInstance& inst, double eps,
                           const RunOptions& options) {
  if (!(eps > 0)) throw Error("eps must be positive");
  inst.validate();
  ScalarizationEngine engine(inst, eps);

  PrimalRunResult result;
  result.eps = eps;
  Polyhedron outer = initialize_outer(engine);
  detail::VertexQueue queue;
  queue.sync(outer.vrep().vertices);

  for (;;) {
    int idx = queue.pick(options.selection);
    if (idx < 0) break;
    Vec v = queue.vertices()[idx];
    ScalarSolution sol = engine.solve_p2(v);

    if (sol.z > eps + kTieTol) {
      // Supporting halfspace {w.y >= beta} of the upper image, with the
      // achieved solver gap subtracted so inexact inner solves can never
      // shave true points.
      ScalarSolution support = engine.solve_p1(sol.w_dual);
      Halfspace hs(sol.w_dual, support.value - safety_margin(support));
      outer = dd_add_halfspace(outer, hs);

      TraceRecord rec;
      rec.vertex = std::move(v);
      rec.score = sol.z;
      rec.cut = true;
      rec.cut_hs = hs;
      result.trace.push_back(std::move(rec));

      if (++result.cuts > options.max_cuts)
        throw IterationCap("primal cut budget exceeded");
      queue.sync(outer.vrep().vertices);
    } else {
      queue.confirm(v);
      TraceRecord rec;
      rec.vertex = std::move(v);
      rec.score = sol.z;
      rec.cut = false;
      rec.support = engine.gamma_at(sol.x);
      result.trace.push_back(std::move(rec));
    }
  }

  result.p_outer = std::move(outer);
  result.solves = engine.solve_count();
  return result;
}

}  // namespace benson
