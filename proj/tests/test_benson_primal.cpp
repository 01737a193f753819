#include <doctest.h>

#include <cmath>

#include "benson/benson_primal.hpp"
#include "benson/instances.hpp"
#include "benson/projection.hpp"
#include "benson/validation.hpp"

using namespace benson;

namespace {

ProblemInstance singleton_instance(const Vec& x0) {
  ProblemInstance inst;
  const int n = static_cast<int>(x0.size());
  inst.mode = Mode::Mocp;
  inst.n = n;
  inst.q = n - 1;
  inst.C = Matrix::identity(n);
  for (int i = 0; i < n; ++i) {
    ConvexExpr up, dn;
    up.node = AffineExpr{unit_vector(n, i), -x0[i]};
    dn.node = AffineExpr{scaled(unit_vector(n, i), -1.0), x0[i]};
    inst.constraints.push_back(std::move(up));
    inst.constraints.push_back(std::move(dn));
  }
  inst.box_lo.assign(n, -2.0);
  inst.box_hi.assign(n, 2.0);
  return inst;
}

}  // namespace

TEST_CASE("initialize_outer reproduces the worked starting points") {
  // single-cut projection example: P0 = {-e3} + R^3_+
  GeneratedInstance tight = gen_primal_tight_cpp(2);
  Polyhedron p0 = initialize_outer(build_mocp(tight.instance));
  REQUIRE(p0.vrep().vertices.size() == 1);
  CHECK(dist2(p0.vrep().vertices[0], {0, 0, -1}) <= 1e-9);
  CHECK(p0.vrep().rays.size() == 3);

  // simplex family: P0 = {-e/(q+1)} + R^{q+1}_+
  GeneratedInstance mocp = gen_primal_tight_mocp(2);
  Polyhedron m0 = initialize_outer(mocp.instance);
  REQUIRE(m0.vrep().vertices.size() == 1);
  CHECK(dist2(m0.vrep().vertices[0], Vec(3, -1.0 / 3)) <= 1e-9);

  // singleton feasible set: P0 = {Gamma(x0)} + R^{q+1}_+
  ProblemInstance single = singleton_instance({0.25, -0.5});
  Polyhedron s0 = initialize_outer(single);
  REQUIRE(s0.vrep().vertices.size() == 1);
  CHECK(dist2(s0.vrep().vertices[0], {0.25, -0.5}) <= 1e-9);
}

TEST_CASE("simplex family stops at the initial approximation") {
  for (int q : {2, 3}) {
    GeneratedInstance gen = gen_primal_tight_mocp(q);
    RunOptions opts;
    opts.selection = Selection::Lexmin;
    PrimalRunResult res = run_primal(gen.instance, gen.eps, opts);
    CHECK(res.cuts == 0);
    REQUIRE(res.p_outer.vrep().vertices.size() == 1);
    CHECK(dist2(res.p_outer.vrep().vertices[0], Vec(q + 1, -gen.eps)) <= 1e-8);
    double dh = hausdorff_plevel(*gen.reference_p, res.p_outer);
    CHECK(std::fabs(dh - gen.eps * std::sqrt(q + 1.0)) <= 1e-6);
  }
}

TEST_CASE("single-cut projection example: exactly one cut, known vertices") {
  GeneratedInstance gen = gen_primal_tight_cpp(2);
  ProblemInstance mocp = build_mocp(gen.instance);
  RunOptions opts;
  opts.selection = Selection::Lexmin;
  PrimalRunResult res = run_primal(mocp, gen.eps, opts);
  CHECK(res.cuts == 1);
  CHECK(vertex_set_match(res.p_outer.vrep().vertices,
                         {{0, 0, 0}, {1, 0, -1}, {0, 1, -1}}, 1e-6));
  // the cut is the balance hyperplane
  bool found = false;
  for (const TraceRecord& rec : res.trace)
    if (rec.cut) {
      found = true;
      CHECK(dist2(rec.cut_hs->a, scaled(ones(3), 1.0 / std::sqrt(3.0))) <= 1e-6);
      CHECK(std::fabs(rec.cut_hs->b) <= 1e-6);
      CHECK(rec.score == doctest::Approx(1.0 / 3).epsilon(1e-7));
    }
  CHECK(found);
}

TEST_CASE("acceptance is tight at the shift tie") {
  // the last vertex of the single-cut run sits exactly at z = eps; the
  // trace must confirm it rather than cut again
  GeneratedInstance gen = gen_primal_tight_cpp(2);
  ProblemInstance mocp = build_mocp(gen.instance);
  RunOptions opts;
  opts.selection = Selection::Lexmin;
  PrimalRunResult res = run_primal(mocp, gen.eps, opts);
  bool tie_confirmed = false;
  for (const TraceRecord& rec : res.trace)
    if (!rec.cut && std::fabs(rec.score - gen.eps) <= 1e-9) tie_confirmed = true;
  CHECK(tie_confirmed);

  // nudging eps below the tie forces further cuts
  PrimalRunResult tighter = run_primal(mocp, gen.eps - 1e-6, opts);
  CHECK(tighter.cuts >= 2);
}

TEST_CASE("singleton feasible set confirms immediately") {
  ProblemInstance single = singleton_instance({0.5, 0.25});
  PrimalRunResult res = run_primal(single, 0.05);
  CHECK(res.cuts == 0);
  REQUIRE(res.p_outer.vrep().vertices.size() == 1);
  CHECK(dist2(res.p_outer.vrep().vertices[0], {0.5, 0.25}) <= 1e-8);
}

TEST_CASE("properties on random polyhedral instances") {
  for (int seed : {11, 12}) {
    ProblemInstance inst = gen_random_polytope_cpp(2, 3, 5, seed);
    ProblemInstance mocp = build_mocp(inst);
    double eps = 0.05;
    PrimalRunResult res = run_primal(mocp, eps);

    // reference upper image from the feasible set's vertices
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
    Matrix gamma = inst.objective_rows();
    VRep pref;
    for (const Vec& v : x.vertices) pref.vertices.push_back(gamma.multiply(v));
    for (int i = 0; i <= inst.q; ++i) pref.rays.push_back(unit_vector(inst.q + 1, i));
    Polyhedron ref = Polyhedron::from_vrep(inst.q + 1, pref).with_hrep();

    // eps-translate inclusion for every result vertex
    Vec shift(inst.q + 1, eps);
    for (const Vec& v : res.p_outer.vrep().vertices)
      CHECK(contains_point(ref, add_scaled(v, 1.0, shift), 1e-7));

    // every generated cut supports the image of the feasible set
    for (const TraceRecord& rec : res.trace) {
      if (!rec.cut) continue;
      for (const Vec& v : pref.vertices) CHECK(rec.cut_hs->eval(v) >= -1e-7);
    }

    // monotonicity: the final vertex set satisfies every earlier cut
    for (const Vec& v : res.p_outer.vrep().vertices)
      for (const TraceRecord& rec : res.trace)
        if (rec.cut) CHECK(rec.cut_hs->eval(v) >= -1e-7);

    // Hausdorff error bound at the P level
    double dh = hausdorff_plevel(ref, res.p_outer);
    CHECK(dh <= eps * std::sqrt(inst.q + 1.0) + 1e-6);
  }
}

TEST_CASE("a zero cut budget trips the iteration cap") {
  GeneratedInstance gen = gen_primal_tight_cpp(2);
  ProblemInstance mocp = build_mocp(gen.instance);
  RunOptions opts;
  opts.max_cuts = 0;
  CHECK_THROWS_AS(run_primal(mocp, gen.eps, opts), IterationCap);
}
