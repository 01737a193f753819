#include "benson/projection.hpp"

#include <cmath>

namespace benson {

ProblemInstance build_mocp(const ProblemInstance& cpp) {
  if (cpp.mode != Mode::Cpp) throw Error("build_mocp expects a projection instance");
  cpp.validate();  // includes the rank check on G
  ProblemInstance mocp = cpp;
  mocp.mode = Mode::Mocp;
  mocp.C = cpp.objective_rows();
  mocp.G = Matrix();
  return mocp;
}

Polyhedron extract_Y(const Polyhedron& p_level, int q) {
  Polyhedron sliced = slice_by_hyperplane(p_level, ones(q + 1), 0.0);
  const VRep& vr = sliced.vrep();
  if (!vr.rays.empty())
    throw Error("slice of a P-level set is unexpectedly unbounded");
  return Polyhedron::from_vrep(q, project_drop_last(vr));
}

double error_bound(int q, double eps, Level level) {
  if (q < 1 || !(eps > 0)) throw Error("error_bound requires q >= 1 and eps > 0");
  double qq = static_cast<double>(q);
  if (level == Level::PLevel) return eps * std::sqrt(qq + 1.0);
  return eps * std::sqrt(qq * qq + qq - 1.0);
}

ApproxResult approximate_body(const ProblemInstance& inst, double eps,
                              Algorithm algorithm, const ApproxOptions& options) {
  inst.validate();
  const bool projection_mode = inst.mode == Mode::Cpp;
  ProblemInstance mocp = projection_mode ? build_mocp(inst) : inst;

  RunOptions run_opts;
  run_opts.selection = options.selection;
  run_opts.max_cuts = options.max_cuts;

  ApproxResult result;
  result.eps = eps;
  if (algorithm == Algorithm::Primal) {
    PrimalRunResult rr = run_primal(mocp, eps, run_opts);
    result.kind = Kind::Outer;
    result.p_level = std::move(rr.p_outer);
    result.cuts = rr.cuts;
    result.solves = rr.solves;
    result.trace = std::move(rr.trace);
  } else {
    Vec wbar = options.wbar.value_or(Vec(inst.q + 1, 1.0 / (inst.q + 1)));
    DualRunResult rr = run_dual(mocp, eps, std::move(wbar), run_opts);
    result.kind = Kind::Inner;
    result.p_level = std::move(rr.p_inner);
    result.cuts = rr.cuts;
    result.solves = rr.solves;
    result.trace = std::move(rr.trace);
  }
  if (projection_mode) {
    result.y_level = extract_Y(result.p_level, inst.q);
    result.certified_bound = error_bound(inst.q, eps, Level::YLevel);
  } else {
    result.certified_bound = error_bound(inst.q, eps, Level::PLevel);
  }
  return result;
}

}  // namespace benson
