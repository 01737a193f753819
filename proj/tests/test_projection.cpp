#include <doctest.h>

#include <cmath>

#include "benson/instances.hpp"
#include "benson/metrics.hpp"
#include "benson/projection.hpp"
#include "benson/validation.hpp"

using namespace benson;

TEST_CASE("build_mocp") {
  GeneratedInstance gen = gen_dual_tight_cpp(2);  // G = I_2
  ProblemInstance mocp = build_mocp(gen.instance);
  CHECK(mocp.mode == Mode::Mocp);
  REQUIRE(mocp.C.rows == 3);
  CHECK(mocp.C(0, 0) == 1.0);
  CHECK(mocp.C(1, 1) == 1.0);
  CHECK(mocp.C(2, 0) == -1.0);
  CHECK(mocp.C(2, 1) == -1.0);

  // objective columns sum to zero for every projection instance
  for (int seed : {5, 6, 7}) {
    ProblemInstance inst = gen_random_polytope_cpp(2, 4, 6, seed);
    Matrix c = build_mocp(inst).C;
    for (int j = 0; j < c.cols; ++j) {
      double s = 0.0;
      for (int i = 0; i < c.rows; ++i) s += c(i, j);
      CHECK(std::fabs(s) <= 1e-12);
    }
  }

  ProblemInstance bad = gen_random_polytope_cpp(2, 3, 5, 9);
  bad.G = Matrix(2, 3);  // rank zero
  CHECK_THROWS_AS(build_mocp(bad), RankDeficient);
}

TEST_CASE("extract_Y") {
  // outer approximation of the single-cut example
  std::vector<Halfspace> hs = {Halfspace({1, 0, 0}, 0), Halfspace({0, 1, 0}, 0),
                               Halfspace({0, 0, 1}, -1), Halfspace({1, 1, 1}, 0)};
  Polyhedron p = Polyhedron::from_hrep(3, hs).with_vrep();
  Polyhedron y = extract_Y(p, 2);
  CHECK(vertex_set_match(y.vrep().vertices, {{0, 0}, {1, 0}, {0, 1}}, 1e-8));

  // orthant collapses to the origin
  std::vector<Halfspace> orth;
  for (int i = 0; i < 3; ++i) orth.emplace_back(unit_vector(3, i), 0.0);
  Polyhedron o = Polyhedron::from_hrep(3, orth).with_vrep();
  CHECK(vertex_set_match(extract_Y(o, 2).vrep().vertices, {{0, 0}}, 1e-9));

  // single-point inner approximation projects to a point
  std::vector<Halfspace> inner = {Halfspace({1, 0, 0}, 1.0 / 3),
                                  Halfspace({0, 1, 0}, 1.0 / 3),
                                  Halfspace({0, 0, 1}, -2.0 / 3)};
  Polyhedron pi = Polyhedron::from_hrep(3, inner).with_vrep();
  CHECK(vertex_set_match(extract_Y(pi, 2).vrep().vertices, {{1.0 / 3, 1.0 / 3}}, 1e-9));

  // a P-level set strictly above the balance plane has an empty slice
  std::vector<Halfspace> high;
  for (int i = 0; i < 3; ++i) high.emplace_back(unit_vector(3, i), 1.0);
  Polyhedron ph = Polyhedron::from_hrep(3, high).with_vrep();
  CHECK_THROWS_AS(extract_Y(ph, 2), EmptyPolyhedron);
}

TEST_CASE("error_bound") {
  CHECK(error_bound(2, 0.25, Level::YLevel) ==
        doctest::Approx(std::sqrt(5.0) / 4.0).epsilon(1e-12));
  CHECK(error_bound(1, 0.37, Level::YLevel) == doctest::Approx(0.37).epsilon(1e-12));
  CHECK(error_bound(3, 0.25, Level::PLevel) == doctest::Approx(0.5).epsilon(1e-12));
  for (int q = 1; q <= 10; ++q) {
    double ratio = error_bound(q, 0.3, Level::YLevel) / error_bound(q, 0.3, Level::PLevel);
    double gamma = std::sqrt(q - 1.0 / (q + 1));
    CHECK(std::fabs(ratio - gamma) <= 1e-12);
  }
  CHECK_THROWS_AS(error_bound(0, 0.1, Level::YLevel), Error);
}

TEST_CASE("approximate_body reproduces both projection examples at q=2") {
  GeneratedInstance outer_gen = gen_primal_tight_cpp(2);
  ApproxOptions opts;
  opts.selection = Selection::Lexmin;
  ApproxResult outer = approximate_body(outer_gen.instance, outer_gen.eps,
                                        Algorithm::Primal, opts);
  CHECK(outer.kind == Kind::Outer);
  CHECK(outer.cuts == 1);
  REQUIRE(outer.y_level.has_value());
  CHECK(vertex_set_match(outer.y_level->vrep().vertices, {{0, 0}, {1, 0}, {0, 1}}, 1e-6));
  CHECK(outer.certified_bound == doctest::Approx(std::sqrt(5.0) / 4.0).epsilon(1e-12));
  VRep body;
  body.vertices = outer_gen.reference_y_vertices;
  double dh = hausdorff_nested(body, outer.y_level->vrep()).d_h;
  CHECK(std::fabs(dh - outer.certified_bound) <= 1e-6);

  GeneratedInstance inner_gen = gen_dual_tight_cpp(2);
  ApproxOptions dual_opts = opts;
  dual_opts.wbar = inner_gen.wbar;
  ApproxResult inner = approximate_body(inner_gen.instance, inner_gen.eps,
                                        Algorithm::Dual, dual_opts);
  CHECK(inner.kind == Kind::Inner);
  CHECK(inner.cuts == 0);
  REQUIRE(inner.y_level.has_value());
  CHECK(vertex_set_match(inner.y_level->vrep().vertices, {{1.0 / 3, 1.0 / 3}}, 1e-6));
  VRep body2;
  body2.vertices = inner_gen.reference_y_vertices;
  double dh2 = hausdorff_nested(inner.y_level->vrep(), body2).d_h;
  CHECK(std::fabs(dh2 - std::sqrt(5.0) / 3.0) <= 1e-6);
}

TEST_CASE("mocp passthrough skips extraction") {
  GeneratedInstance gen = gen_primal_tight_mocp(2);
  ApproxResult res = approximate_body(gen.instance, gen.eps, Algorithm::Primal);
  CHECK_FALSE(res.y_level.has_value());
  CHECK(res.certified_bound ==
        doctest::Approx(gen.eps * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("sandwich and bound compliance on a random instance") {
  ProblemInstance inst = gen_random_polytope_cpp(2, 3, 5, 321);
  double eps = 0.05;
  ApproxResult outer = approximate_body(inst, eps, Algorithm::Primal);
  ApproxResult inner = approximate_body(inst, eps, Algorithm::Dual);

  // exact body via the feasible set's vertices mapped through G
  std::vector<Halfspace> hs;
  for (const ConvexExpr& g : inst.constraints) {
    const auto& aff = std::get<AffineExpr>(g.node);
    hs.emplace_back(scaled(aff.c, -1.0), aff.d);
  }
  for (int j = 0; j < inst.n; ++j) {
    hs.emplace_back(unit_vector(inst.n, j), inst.box_lo[j]);
    hs.emplace_back(scaled(unit_vector(inst.n, j), -1.0), -inst.box_hi[j]);
  }
  VRep x = dd_h_to_v(hs, inst.n);
  VRep y_exact;
  for (const Vec& v : x.vertices) y_exact.vertices.push_back(inst.G.multiply(v));

  for (const Vec& v : inner.y_level->vrep().vertices)
    CHECK(dist_point_to_polytope(v, y_exact).first <= 1e-7);
  for (const Vec& v : y_exact.vertices)
    CHECK(dist_point_to_polytope(v, outer.y_level->vrep()).first <= 1e-7);

  double bound = error_bound(inst.q, eps, Level::YLevel);
  CHECK(hausdorff_nested(y_exact, outer.y_level->vrep()).d_h <= bound + 1e-6);
  CHECK(hausdorff_nested(inner.y_level->vrep(), y_exact).d_h <= bound + 1e-6);
}

TEST_CASE("singleton body collapses to a point") {
  ProblemInstance inst;
  inst.mode = Mode::Cpp;
  inst.n = 2;
  inst.q = 2;
  inst.G = Matrix::identity(2);
  Vec x0 = {0.3, -0.1};
  for (int i = 0; i < 2; ++i) {
    ConvexExpr up, dn;
    up.node = AffineExpr{unit_vector(2, i), -x0[i]};
    dn.node = AffineExpr{scaled(unit_vector(2, i), -1.0), x0[i]};
    inst.constraints.push_back(std::move(up));
    inst.constraints.push_back(std::move(dn));
  }
  inst.box_lo.assign(2, -2.0);
  inst.box_hi.assign(2, 2.0);
  for (Algorithm alg : {Algorithm::Primal, Algorithm::Dual}) {
    ApproxResult res = approximate_body(inst, 0.1, alg);
    REQUIRE(res.y_level.has_value());
    CHECK(vertex_set_match(res.y_level->vrep().vertices, {x0}, 1e-7));
  }
}
