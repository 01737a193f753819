#include <doctest.h>

#include <cmath>
#include <random>

#include "benson/geometry.hpp"
#include "benson/linprog.hpp"

using namespace benson;

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random LP with box bounds and interior-anchored rows, always feasible
// and bounded.
LpProblem random_lp(int d, int m, std::mt19937_64& rng) {
  LpProblem p;
  p.c.resize(d);
  for (double& c : p.c) c = 2.0 * u01(rng) - 1.0;
  p.A = Matrix(m, d);
  p.b.resize(m);
  p.sense.assign(m, RowSense::LE);
  for (int i = 0; i < m; ++i) {
    Vec a(d);
    double nrm = 0.0;
    do {
      for (double& c : a) c = 2.0 * u01(rng) - 1.0;
      nrm = norm2(a);
    } while (nrm < 1e-3);
    kernels::scale(1.0 / nrm, a.data(), a.size());
    for (int j = 0; j < d; ++j) p.A(i, j) = a[j];
    p.b[i] = 0.2 + 0.8 * u01(rng);
  }
  p.lo.assign(d, -2.0);
  p.up.assign(d, 2.0);
  return p;
}

// Brute-force optimum by vertex enumeration of the feasible region.
double brute_force_min(const LpProblem& p) {
  std::vector<Halfspace> hs;
  const int d = p.num_vars();
  for (int i = 0; i < p.num_rows(); ++i) {
    Vec a(d);
    for (int j = 0; j < d; ++j) a[j] = -p.A(i, j);
    hs.emplace_back(std::move(a), -p.b[i]);  // a.x <= b
  }
  for (int j = 0; j < d; ++j) {
    hs.emplace_back(unit_vector(d, j), p.lo[j]);
    hs.emplace_back(scaled(unit_vector(d, j), -1.0), -p.up[j]);
  }
  VRep v = dd_h_to_v(hs, d);
  double best = kInf;
  for (const Vec& x : v.vertices) best = std::min(best, dot(p.c, x));
  return best;
}

}  // namespace

TEST_CASE("two-variable LP by inspection") {
  LpProblem p;
  p.c = {-1.0, -2.0};
  p.A = Matrix(1, 2);
  p.A(0, 0) = 1.0;
  p.A(0, 1) = 1.0;
  p.b = {1.0};
  p.sense = {RowSense::LE};
  p.lo = {0.0, 0.0};
  p.up = {kInf, kInf};
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(s.x[0] == doctest::Approx(0.0));
  CHECK(s.x[1] == doctest::Approx(1.0));
}

TEST_CASE("infeasible LP") {
  LpProblem p;
  p.c = {1.0};
  p.A = Matrix(1, 1);
  p.A(0, 0) = 1.0;
  p.b = {-1.0};
  p.sense = {RowSense::LE};
  p.lo = {0.0};
  p.up = {kInf};
  CHECK(solve_lp(p).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded LP returns a ray") {
  LpProblem p;
  p.c = {-1.0};
  p.A = Matrix(0, 1);
  p.b = {};
  p.sense = {};
  p.lo = {0.0};
  p.up = {kInf};
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Unbounded);
  CHECK(dot(p.c, s.x) < 0.0);
}

TEST_CASE("equality rows and free variables") {
  // min x + y s.t. x + y = 1, x - y >= -3, y free
  LpProblem p;
  p.c = {1.0, 1.0};
  p.A = Matrix(2, 2);
  p.A(0, 0) = 1.0;
  p.A(0, 1) = 1.0;
  p.A(1, 0) = 1.0;
  p.A(1, 1) = -1.0;
  p.b = {1.0, -3.0};
  p.sense = {RowSense::EQ, RowSense::GE};
  p.lo = {-kInf, -kInf};
  p.up = {kInf, kInf};
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s.x[0] + s.x[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("oracle: mixed row senses match vertex enumeration") {
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    LpProblem p = random_lp(d, 4 + static_cast<int>(rng() % 3), rng);
    // rewrite some rows as the equivalent >= form to exercise GE slacks
    for (int i = 0; i < p.num_rows(); ++i) {
      if (rng() % 3 == 0) {
        for (int j = 0; j < d; ++j) p.A(i, j) = -p.A(i, j);
        p.b[i] = -p.b[i];
        p.sense[i] = RowSense::GE;
      }
    }
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    // oracle over halfspaces oriented by sense
    std::vector<Halfspace> hs;
    for (int i = 0; i < p.num_rows(); ++i) {
      Vec a(d);
      for (int j = 0; j < d; ++j) a[j] = p.A(i, j);
      if (p.sense[i] == RowSense::LE)
        hs.emplace_back(scaled(a, -1.0), -p.b[i]);
      else
        hs.emplace_back(a, p.b[i]);
    }
    for (int j = 0; j < d; ++j) {
      hs.emplace_back(unit_vector(d, j), -2.0);
      hs.emplace_back(scaled(unit_vector(d, j), -1.0), -2.0);
    }
    double ref = kInf;
    for (const Vec& v : dd_h_to_v(hs, d).vertices) ref = std::min(ref, dot(p.c, v));
    CHECK(std::fabs(s.objective - ref) <= 1e-7 * (1.0 + std::fabs(ref)));

    // row duals carry the sense-correct sign
    for (int i = 0; i < p.num_rows(); ++i) {
      if (p.sense[i] == RowSense::LE) CHECK(s.y_dual[i] <= 1e-9);
      if (p.sense[i] == RowSense::GE) CHECK(s.y_dual[i] >= -1e-9);
    }
  }
}

TEST_CASE("oracle: simplex matches vertex enumeration on random LPs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);  // 2..3
    int m = 3 + static_cast<int>(rng() % 6);  // 3..8
    LpProblem p = random_lp(d, m, rng);
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    double ref = brute_force_min(p);
    CHECK(std::fabs(s.objective - ref) <= 1e-7 * (1.0 + std::fabs(ref)));
  }
}

TEST_CASE("duals: complementary slackness and adjusted strong duality") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    int m = 3 + static_cast<int>(rng() % 5);
    LpProblem p = random_lp(d, m, rng);
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);

    // primal feasibility
    Vec ax = p.A.multiply(s.x);
    for (int i = 0; i < m; ++i) CHECK(ax[i] <= p.b[i] + 1e-8);
    // sign and complementary slackness of the row duals
    for (int i = 0; i < m; ++i) {
      CHECK(s.y_dual[i] <= 1e-9);
      if (std::fabs(s.y_dual[i]) > 1e-7)
        CHECK(std::fabs(ax[i] - p.b[i]) <= 1e-6);
    }
    // dual feasibility: reduced costs are sign-correct at the bounds
    for (int j = 0; j < d; ++j) {
      if (std::fabs(s.x[j] - p.lo[j]) <= 1e-9)
        CHECK(s.reduced_costs[j] >= -1e-8);
      else if (std::fabs(s.x[j] - p.up[j]) <= 1e-9)
        CHECK(s.reduced_costs[j] <= 1e-8);
      else
        CHECK(std::fabs(s.reduced_costs[j]) <= 1e-8);
    }
    // c.x = y.b + reduced costs at bounds
    double rhs = dot(s.y_dual, p.b) + dot(s.reduced_costs, s.x);
    CHECK(std::fabs(s.objective - rhs) <= 1e-7 * (1.0 + std::fabs(s.objective)));
  }
}
