#ifndef BENSON_PROJECTION_HPP
#define BENSON_PROJECTION_HPP

#include <optional>

#include "benson/benson_dual.hpp"
#include "benson/benson_primal.hpp"
#include "benson/convexprog.hpp"
#include "benson/geometry.hpp"

namespace benson {

enum class Kind { Outer, Inner };
enum class Level { PLevel, YLevel };
enum class Algorithm { Primal, Dual };

struct ApproxResult {
  Kind kind = Kind::Outer;
  double eps = 0.0;
  double certified_bound = 0.0;
  Polyhedron p_level;                 // in R^{q+1}
  std::optional<Polyhedron> y_level;  // in R^q; absent in Mocp mode
  int cuts = 0;
  int solves = 0;
  std::vector<TraceRecord> trace;
};

struct ApproxOptions {
  Selection selection = Selection::Fifo;
  int max_cuts = 10000;
  std::optional<Vec> wbar;  // dual algorithm only
};

// The multiobjective program associated with a projection instance:
// objective rows [G; -1'G], so every objective column sums to zero.
ProblemInstance build_mocp(const ProblemInstance& cpp);

// Slice with the hyperplane {1'y = 0}, then drop the last coordinate.
// The result is bounded for every valid P-level set.
Polyhedron extract_Y(const Polyhedron& p_level, int q);

// Certified Hausdorff error: eps sqrt(q+1) at the P level and
// eps sqrt(q^2+q-1) at the Y level.
double error_bound(int q, double eps, Level level);

// Full driver: associate the multiobjective program, run the requested
// algorithm, extract the body-level approximation, report the bound.
ApproxResult approximate_body(const ProblemInstance& inst, double eps,
                              Algorithm algorithm, const ApproxOptions& options = {});

}  // namespace benson

#endif
