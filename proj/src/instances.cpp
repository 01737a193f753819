#include "benson/instances.hpp"

#include <cmath>
#include <random>

#include "benson/metrics.hpp"

namespace benson {

namespace {

ConvexExpr affine(Vec c, double d) {
  ConvexExpr g;
  g.node = AffineExpr{std::move(c), d};
  return g;
}

double y_level_bound(int q, double eps) {
  double qq = static_cast<double>(q);
  return eps * std::sqrt(qq * qq + qq - 1.0);
}

}  // namespace

GeneratedInstance gen_primal_tight_mocp(int q) {
  if (q < 1) throw Error("q must be at least 1");
  const int n = q + 1;
  GeneratedInstance out;
  out.name = "primal-mocp";
  out.eps = 1.0 / (q + 1);

  ProblemInstance& inst = out.instance;
  inst.mode = Mode::Mocp;
  inst.n = n;
  inst.q = q;
  inst.C = Matrix::identity(n);
  // X = conv{e^i - e/(q+1)}: x >= -e/(q+1) plus 1'x = 0 as two inequalities.
  for (int i = 0; i < n; ++i)
    inst.constraints.push_back(affine(scaled(unit_vector(n, i), -1.0), -out.eps));
  inst.constraints.push_back(affine(ones(n), 0.0));
  inst.constraints.push_back(affine(Vec(n, -1.0), 0.0));
  inst.box_lo.assign(n, -1.0);
  inst.box_hi.assign(n, 2.0);

  std::vector<Halfspace> pref;
  for (int i = 0; i < n; ++i) pref.emplace_back(unit_vector(n, i), -out.eps);
  pref.emplace_back(ones(n), 0.0);
  out.reference_p = Polyhedron::from_hrep(n, std::move(pref)).with_vrep();
  out.expected_p_vertices.push_back(Vec(n, -out.eps));
  out.expected_cuts = 0;
  out.expected_dh = out.eps * std::sqrt(static_cast<double>(n));
  return out;
}

GeneratedInstance gen_primal_tight_cpp(int q) {
  if (q < 2) throw Error("q must be at least 2");
  const int n = q;
  GeneratedInstance out;
  out.name = "primal-cpp";
  out.eps = 1.0 / (q + 2);

  ProblemInstance& inst = out.instance;
  inst.mode = Mode::Cpp;
  inst.n = n;
  inst.q = q;
  inst.G = Matrix::identity(n);
  inst.constraints.push_back(affine(scaled(unit_vector(n, q - 1), -1.0), 0.0));
  for (int i = 0; i < q - 1; ++i) {
    Vec c = unit_vector(n, q - 1);
    c[i] -= 2.0;
    inst.constraints.push_back(affine(std::move(c), 0.0));
  }
  Vec last(n, 1.0);
  last[q - 1] = 1.5;
  inst.constraints.push_back(affine(std::move(last), -1.0));
  inst.box_lo.assign(n, -1.0);
  inst.box_hi.assign(n, 2.0);
  Vec interior(n, 1.0 / (2.0 * (q + 2)));
  interior[q - 1] = 1.0 / (4.0 * (q + 2));
  inst.interior_point = std::move(interior);

  // Body vertices: 0, the first q-1 unit vectors, and u.
  Vec u(n, 1.0 / (q + 2));
  u[q - 1] = 2.0 / (q + 2);
  out.reference_y_vertices.push_back(Vec(n, 0.0));
  for (int i = 0; i < q - 1; ++i) out.reference_y_vertices.push_back(unit_vector(n, i));
  out.reference_y_vertices.push_back(u);

  // Outer approximation after the single cut: conv{0, e^1, ..., e^q}.
  out.expected_y_vertices.push_back(Vec(n, 0.0));
  for (int i = 0; i < q; ++i) out.expected_y_vertices.push_back(unit_vector(n, i));
  out.expected_cuts = 1;
  out.expected_dh = y_level_bound(q, out.eps);

  VRep pv;
  {
    Vec v0(n + 1, 0.0);
    pv.vertices.push_back(std::move(v0));
    for (int i = 0; i < q - 1; ++i) {
      Vec v = unit_vector(n + 1, i);
      v[n] = -1.0;
      pv.vertices.push_back(std::move(v));
    }
    Vec vu = u;
    double s = 0.0;
    for (double c : u) s += c;
    vu.push_back(-s);
    pv.vertices.push_back(std::move(vu));
    for (int i = 0; i < n + 1; ++i) pv.rays.push_back(unit_vector(n + 1, i));
  }
  out.reference_p = Polyhedron::from_vrep(n + 1, std::move(pv)).with_hrep();
  return out;
}

GeneratedInstance gen_dual_tight_cpp(int q) {
  if (q < 1) throw Error("q must be at least 1");
  const int n = q;
  GeneratedInstance out;
  out.name = "dual-cpp";
  out.eps = 1.0 / (q + 1);
  out.wbar.assign(q + 1, 1.0 / (q + 1));

  ProblemInstance& inst = out.instance;
  inst.mode = Mode::Cpp;
  inst.n = n;
  inst.q = q;
  inst.G = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    inst.constraints.push_back(affine(scaled(unit_vector(n, i), -1.0), 0.0));
  inst.constraints.push_back(affine(ones(n), -1.0));
  inst.box_lo.assign(n, -0.5);
  inst.box_hi.assign(n, 1.5);
  inst.interior_point = Vec(n, 1.0 / (2.0 * q));
  inst.solution_hints.push_back(Vec(n, 1.0 / (q + 1)));

  out.reference_y_vertices.push_back(Vec(n, 0.0));
  for (int i = 0; i < n; ++i) out.reference_y_vertices.push_back(unit_vector(n, i));
  out.expected_y_vertices.push_back(Vec(n, 1.0 / (q + 1)));
  out.expected_cuts = 0;
  out.expected_dh = y_level_bound(q, out.eps);

  VRep pv;
  pv.vertices.push_back(Vec(q + 1, 0.0));
  for (int i = 0; i < q; ++i) {
    Vec v = unit_vector(q + 1, i);
    v[q] = -1.0;
    pv.vertices.push_back(std::move(v));
  }
  for (int i = 0; i <= q; ++i) pv.rays.push_back(unit_vector(q + 1, i));
  out.reference_p = Polyhedron::from_vrep(q + 1, std::move(pv)).with_hrep();

  // Lower image, as an H-representation.
  std::vector<Halfspace> dref;
  for (int j = 0; j < q; ++j) dref.emplace_back(unit_vector(q + 1, j), 0.0);
  {
    Vec a(q + 1, -1.0);
    a[q] = 0.0;
    dref.emplace_back(std::move(a), -1.0);
  }
  for (int j = 0; j < q; ++j) {
    Vec a(q + 1, 1.0);
    a[j] = 2.0;
    a[q] = -1.0;
    dref.emplace_back(std::move(a), 1.0);
  }
  {
    Vec a(q + 1, 0.0);
    a[q] = -1.0;
    dref.emplace_back(std::move(a), 0.0);
  }
  out.reference_d = Polyhedron::from_hrep(q + 1, std::move(dref)).with_vrep();
  return out;
}

GeneratedInstance gen_dual_tight_mocp(int q, double eps) {
  if (q < 1) throw Error("q must be at least 1");
  if (!(eps > 0)) throw Error("eps must be positive");
  const int n = q + 1;

  std::vector<Vec> xs(n + 1);  // xs[i] for i = 1..q+1; xs[0] set below
  for (int i = 1; i <= n; ++i) {
    Vec v(n, 0.0);
    for (int j = 0; j < i; ++j) v[j] = 1.0 / i;
    xs[i] = std::move(v);
  }
  Vec centroid(n, 0.0);
  for (int i = 1; i <= n; ++i) kernels::axpy(1.0 / n, xs[i].data(), centroid.data(), n);
  xs[0] = add_scaled(centroid, -eps, ones(n));

  // The trace needs the apex to stay the unique minimizer of weights near
  // the first unit vector: eps below (H_{q+1} - 1)/(q+1).
  double harmonic = 0.0;
  for (int i = 1; i <= n; ++i) harmonic += 1.0 / i;
  double eps_max = (harmonic - 1.0) / n;
  if (eps >= 0.9 * eps_max)
    throw EpsTooLarge("eps too large for the nested-centroid construction");

  VRep body;
  for (int i = 1; i <= n; ++i) body.vertices.push_back(xs[i]);
  double dist0 = dist_point_to_polytope(xs[0], body).first;
  if (dist0 <= 10.0 * kVertexDedupTol)
    throw EpsTooLarge("eps too small: the shifted centroid is not a distinct vertex");

  GeneratedInstance out;
  out.name = "dual-mocp";
  out.eps = eps;
  {
    Vec w(n, 1e-3);
    w[0] += 1.0;
    kernels::scale(1.0 / (1.0 + n * 1e-3), w.data(), w.size());
    out.wbar = std::move(w);
  }

  ProblemInstance& inst = out.instance;
  inst.mode = Mode::Mocp;
  inst.n = n;
  inst.q = q;
  inst.C = Matrix::identity(n);
  VRep sv = body;
  sv.vertices.push_back(xs[0]);
  for (const Halfspace& h : v_to_h(sv, n))
    inst.constraints.push_back(affine(scaled(h.a, -1.0), h.b));
  inst.box_lo.assign(n, -0.5);
  inst.box_hi.assign(n, 1.5);
  for (int i = n; i >= 1; --i) inst.solution_hints.push_back(xs[i]);

  VRep pv = sv;
  for (int i = 0; i < n; ++i) pv.rays.push_back(unit_vector(n, i));
  out.reference_p = Polyhedron::from_vrep(n, std::move(pv)).with_hrep();
  for (int i = 1; i <= n; ++i) out.expected_p_vertices.push_back(xs[i]);
  out.expected_dh = eps * std::sqrt(static_cast<double>(n));
  return out;
}

ProblemInstance gen_random_polytope_cpp(int q, int n, int m, std::uint64_t seed) {
  if (q < 1 || q > n) throw Error("need 1 <= q <= n");
  if (m < n + 1) throw Error("need at least n+1 constraints");
  std::mt19937_64 rng(seed);
  auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto uniform = [&](double a, double b) { return a + (b - a) * u01(); };

  ProblemInstance inst;
  inst.mode = Mode::Cpp;
  inst.n = n;
  inst.q = q;

  Vec center(n);
  for (double& c : center) c = uniform(-0.3, 0.3);

  for (int i = 0; i < m; ++i) {
    Vec a(n);
    double nrm = 0.0;
    do {
      for (double& c : a) c = uniform(-1.0, 1.0);
      nrm = norm2(a);
    } while (nrm < 1e-3);
    kernels::scale(1.0 / nrm, a.data(), a.size());
    double margin = uniform(0.3, 1.0);
    double rhs = dot(a, center) + margin;
    inst.constraints.push_back(affine(std::move(a), -rhs));
  }
  inst.box_lo.assign(n, -2.0);
  inst.box_hi.assign(n, 2.0);
  inst.interior_point = center;

  for (;;) {
    Matrix g(q, n);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = uniform(-1.0, 1.0);
    if (rank(g, 1e-8) == q) {
      inst.G = std::move(g);
      break;
    }
  }
  inst.validate();
  return inst;
}

}  // namespace benson
