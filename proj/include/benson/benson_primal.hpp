#ifndef BENSON_BENSON_PRIMAL_HPP
#define BENSON_BENSON_PRIMAL_HPP

#include "benson/benson_run.hpp"
#include "benson/convexprog.hpp"
#include "benson/geometry.hpp"

namespace benson {

struct PrimalRunResult {
  Polyhedron p_outer;
  double eps = 0.0;
  int cuts = 0;
  int solves = 0;
  std::vector<TraceRecord> trace;
};

// Initial outer approximation {y} + R^{q+1}_+ where y_i is the optimal
// value of the weighted-sum scalarization at the i-th unit weight,
// shifted down by the achieved solver gap so the set always contains the
// upper image.
Polyhedron initialize_outer(const ProblemInstance& inst);
Polyhedron initialize_outer(const ScalarizationEngine& engine);

// Shrinking outer approximation of the upper image: query a vertex,
// solve the translative scalarization, cut with the recovered supporting
// halfspace while the shift exceeds eps.
PrimalRunResult run_primal(const ProblemInstance& inst, double eps,
                           const RunOptions& options = {});

}  // namespace benson

#endif
