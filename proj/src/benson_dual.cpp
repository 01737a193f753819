#include "benson/benson_dual.hpp"

#include <cmath>

namespace benson {

namespace {

constexpr double kTieTol = 1e-9;

Vec clipped_weights(const Vec& t) {
  Vec w = weight_map_w(t);
  double sum = 0.0;
  for (double& wi : w) {
    if (wi < -1e-7) throw Error("vertex left the dual feasible region");
    if (wi < 0.0) wi = 0.0;
    sum += wi;
  }
  kernels::scale(1.0 / sum, w.data(), w.size());
  return w;
}

// {y* : phi(o, y*) >= 0} as a stored halfspace:
// sum_{i<=q} (o_i - o_{q+1}) y*_i - y*_{q+1} >= -o_{q+1}.
Halfspace phi_halfspace(const Vec& o) {
  const int last = static_cast<int>(o.size()) - 1;
  Vec a(o.size());
  for (int i = 0; i < last; ++i) a[i] = o[i] - o[last];
  a[last] = -1.0;
  return Halfspace(std::move(a), -o[last]);
}

}  // namespace

double coupling_phi(const Vec& y, const Vec& ystar) {
  if (y.size() != ystar.size() || y.size() < 2) throw Error("coupling dimension mismatch");
  const std::size_t last = y.size() - 1;
  double s = 0.0, sum_star = 0.0;
  for (std::size_t i = 0; i < last; ++i) {
    s += y[i] * ystar[i];
    sum_star += ystar[i];
  }
  return s + y[last] * (1.0 - sum_star) - ystar[last];
}

Vec weight_map_w(const Vec& t) {
  if (t.size() < 2) throw Error("weight map needs dimension at least 2");
  Vec w(t.size());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    w[i] = t[i];
    sum += t[i];
  }
  w[t.size() - 1] = 1.0 - sum;
  return w;
}

Vec dual_point_Dstar(const ScalarizationEngine& engine, const Vec& t) {
  Vec w = clipped_weights(t);
  ScalarSolution sol = engine.solve_p1(w);
  Vec d(t.begin(), t.end() - 1);
  d.push_back(sol.value);
  return d;
}

Vec dual_point_Dstar(const ProblemInstance& inst, const Vec& t) {
  inst.validate();
  return dual_point_Dstar(ScalarizationEngine(inst), t);
}

Polyhedron initialize_dual_outer(const ScalarizationEngine& engine, const Vec& wbar) {
  const int q = engine.instance().q;
  const int dim = q + 1;
  if (static_cast<int>(wbar.size()) != dim) throw Error("wbar dimension mismatch");
  double sum = 0.0;
  for (double w : wbar) {
    if (!(w > 0)) throw Error("wbar must be strictly positive");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-9) throw Error("wbar must sum to one");

  ScalarSolution sol = engine.solve_p1(wbar);
  Vec o = engine.gamma_at(sol.x);

  std::vector<Halfspace> hs;
  for (int i = 0; i < q; ++i) hs.emplace_back(unit_vector(dim, i), 0.0);
  Vec simplex_row(dim, -1.0);
  simplex_row[q] = 0.0;
  hs.emplace_back(std::move(simplex_row), -1.0);
  hs.push_back(phi_halfspace(o));
  return Polyhedron::from_hrep(dim, std::move(hs)).with_vrep();
}

Polyhedron initialize_dual_outer(const ProblemInstance& inst, const Vec& wbar) {
  inst.validate();
  return initialize_dual_outer(ScalarizationEngine(inst), wbar);
}

Polyhedron dual_to_primal_inner(const Polyhedron& d_outer) {
  Polyhedron d = d_outer.has_vrep() ? d_outer : d_outer.with_vrep();
  const int dim = d.dim();
  const VRep& vr = d.vrep();
  for (const Vec& r : vr.rays) {
    Vec expected(dim, 0.0);
    expected[dim - 1] = -1.0;
    if (dist2(r, expected) > 1e-7)
      throw Error("dual set has an unexpected recession direction");
  }
  std::vector<Halfspace> hs;
  for (const Vec& t : vr.vertices) {
    Halfspace h(weight_map_w(t), t[dim - 1]);
    bool dup = false;
    for (const Halfspace& other : hs)
      if (std::fabs(h.b - other.b) <= 1e-12 && dist2(h.a, other.a) <= 1e-12) {
        dup = true;
        break;
      }
    if (!dup) hs.push_back(std::move(h));
  }
  return Polyhedron::from_hrep(dim, std::move(hs)).with_vrep();
}

DualRunResult run_dual(const ProblemInstance& inst, double eps, Vec wbar,
                       const RunOptions& options) {
  if (!(eps > 0)) throw Error("eps must be positive");
  inst.validate();
  const int dim = inst.q + 1;
  if (wbar.empty()) wbar.assign(dim, 1.0 / dim);
  ScalarizationEngine engine(inst, eps);

  DualRunResult result;
  result.eps = eps;
  Polyhedron douter = initialize_dual_outer(engine, wbar);
  detail::VertexQueue queue;
  queue.sync(douter.vrep().vertices);

  for (;;) {
    int idx = queue.pick(options.selection);
    if (idx < 0) break;
    Vec t = queue.vertices()[idx];
    Vec w = clipped_weights(t);
    ScalarSolution sol = engine.solve_p1(w);
    Vec o = engine.gamma_at(sol.x);
    double phi = coupling_phi(o, t);

    if (phi < -eps - kTieTol) {
      Halfspace hs = phi_halfspace(o);
      douter = dd_add_halfspace(douter, hs);

      TraceRecord rec;
      rec.vertex = std::move(t);
      rec.score = phi;
      rec.cut = true;
      rec.cut_hs = hs;
      result.trace.push_back(std::move(rec));

      if (++result.cuts > options.max_cuts)
        throw IterationCap("dual cut budget exceeded");
      queue.sync(douter.vrep().vertices);
    } else {
      queue.confirm(t);
      TraceRecord rec;
      rec.vertex = t;
      rec.score = phi;
      rec.cut = false;
      Vec s(t.begin(), t.end() - 1);
      s.push_back(sol.value);
      rec.support = std::move(s);
      result.trace.push_back(std::move(rec));
    }
  }

  result.p_inner = dual_to_primal_inner(douter);
  result.d_outer = std::move(douter);
  result.solves = engine.solve_count();
  return result;
}

}  // namespace benson
