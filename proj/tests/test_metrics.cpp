#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "benson/metrics.hpp"
#include "benson/validation.hpp"

using namespace benson;

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

VRep random_polytope(int d, int k, std::mt19937_64& rng) {
  VRep v;
  for (int i = 0; i < k; ++i) {
    Vec p(d);
    for (double& c : p) c = 2.0 * u01(rng) - 1.0;
    v.vertices.push_back(std::move(p));
  }
  return v;
}

// Deterministic barycentric lattice: all weight vectors with denominator
// m over the vertex set.
double lattice_min_distance(const Vec& p, const VRep& poly, int m) {
  const int k = static_cast<int>(poly.vertices.size());
  double best = kInf;
  std::vector<int> comp(k, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == k - 1) {
      comp[idx] = left;
      Vec x(p.size(), 0.0);
      for (int i = 0; i < k; ++i)
        if (comp[i] > 0)
          kernels::axpy(static_cast<double>(comp[i]) / m, poly.vertices[i].data(),
                        x.data(), x.size());
      best = std::min(best, dist2(x, p));
      return;
    }
    for (int c = 0; c <= left; ++c) {
      comp[idx] = c;
      rec(idx + 1, left - c);
    }
  };
  rec(0, m);
  return best;
}

}  // namespace

TEST_CASE("nearest point: containment and vertex cases") {
  VRep simplex;
  simplex.vertices = {{0, 0}, {1, 0}, {0, 1}};

  auto [d_in, a_in] = dist_point_to_polytope({0.2, 0.2}, simplex);
  CHECK(d_in <= 1e-9);
  CHECK(dist2(a_in, {0.2, 0.2}) <= 1e-9);

  auto [d_v, a_v] = dist_point_to_polytope({2.0, 0.0}, simplex);
  CHECK(d_v == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dist2(a_v, {1.0, 0.0}) <= 1e-9);
}

TEST_CASE("nearest point rejects rays") {
  VRep v;
  v.vertices = {{0, 0}};
  v.rays = {{1, 0}};
  CHECK_THROWS_AS(dist_point_to_polytope({1, 1}, v), RaysPresent);
}

TEST_CASE("oracle: Wolfe matches the barycentric lattice") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);  // 2..3
    int k = 3 + static_cast<int>(rng() % 4);  // 3..6
    VRep poly = random_polytope(d, k, rng);
    Vec p(d);
    for (double& c : p) c = 4.0 * u01(rng) - 2.0;

    auto [dist, nearest] = dist_point_to_polytope(p, poly);
    // variational inequality certifies optimality
    for (const Vec& v : poly.vertices) {
      Vec pa = add_scaled(p, -1.0, nearest);
      Vec va = add_scaled(v, -1.0, nearest);
      CHECK(dot(pa, va) <= 1e-9);
    }

    const int m = 24;
    double grid = lattice_min_distance(p, poly, m);
    CHECK(grid >= dist - 1e-9);
    double diam = 0.0;
    for (const Vec& a : poly.vertices)
      for (const Vec& b : poly.vertices) diam = std::max(diam, dist2(a, b));
    CHECK(grid - dist <= diam * (k - 1) / (2.0 * m) + 1e-9);
  }
}

TEST_CASE("hausdorff_nested: identical sets") {
  VRep tri;
  tri.vertices = {{0, 0}, {1, 0}, {0, 1}};
  CHECK(hausdorff_nested(tri, tri).d_h <= 1e-9);
}

TEST_CASE("hausdorff_nested: single-cut example pair, q=2") {
  VRep body;  // conv{0, e1, u}
  body.vertices = {{0, 0}, {1, 0}, {0.25, 0.5}};
  VRep outer;  // conv{0, e1, e2}
  outer.vertices = {{0, 0}, {1, 0}, {0, 1}};
  DistanceReport rep = hausdorff_nested(body, outer);
  CHECK(rep.d_h == doctest::Approx(std::sqrt(5.0) / 4.0).epsilon(1e-9));
  CHECK(dist2(rep.witness_outer, {0, 1}) <= 1e-9);
  CHECK(dist2(rep.witness_inner, {0.25, 0.5}) <= 1e-7);
}

TEST_CASE("hausdorff_nested: point against the unit simplex, q=2") {
  VRep inner;
  inner.vertices = {{1.0 / 3, 1.0 / 3}};
  VRep outer;
  outer.vertices = {{0, 0}, {1, 0}, {0, 1}};
  DistanceReport rep = hausdorff_nested(inner, outer);
  CHECK(rep.d_h == doctest::Approx(std::sqrt(5.0) / 3.0).epsilon(1e-9));
  CHECK(norm2(rep.witness_outer) == doctest::Approx(1.0));
}

TEST_CASE("hausdorff_nested: swapped arguments raise NotNested") {
  VRep inner;
  inner.vertices = {{0, 0}, {1, 0}, {0, 1}};
  VRep small;
  small.vertices = {{0.25, 0.25}};
  CHECK_THROWS_AS(hausdorff_nested(inner, small), NotNested);
}

TEST_CASE("hausdorff_sampled: lower bound and convergence on the example pair") {
  VRep body;
  body.vertices = {{0, 0}, {1, 0}, {0.25, 0.5}};
  VRep outer;
  outer.vertices = {{0, 0}, {1, 0}, {0, 1}};
  double nested = hausdorff_nested(body, outer).d_h;
  double sampled = hausdorff_sampled(body, outer, 100000, 7);
  CHECK(sampled <= nested + 1e-9);
  CHECK(sampled >= nested - 1e-2);
  // deterministic in the seed
  CHECK(sampled == hausdorff_sampled(body, outer, 100000, 7));
}

TEST_CASE("hausdorff_sampled: degenerate single-point inner set") {
  VRep inner;
  inner.vertices = {{0.5, 0.25}};
  VRep outer;
  outer.vertices = {{0, 0}, {1, 0}, {0, 1}};
  double nested = hausdorff_nested(inner, outer).d_h;
  CHECK(hausdorff_sampled(inner, outer, 2000, 3) <= nested + 1e-9);
}

TEST_CASE("property: translate bound for orthant-recession sets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    VRep base = random_polytope(d, 3 + static_cast<int>(rng() % 3), rng);
    Vec shift(d);
    for (double& c : shift) c = 0.5 * u01(rng);  // nonnegative

    VRep nbase = base;
    VRep mbase = base;
    for (Vec& v : mbase.vertices) v = add_scaled(v, 1.0, shift);
    for (int i = 0; i < d; ++i) {
      nbase.rays.push_back(unit_vector(d, i));
      mbase.rays.push_back(unit_vector(d, i));
    }
    Polyhedron n = Polyhedron::from_vrep(d, nbase).with_hrep();
    Polyhedron m = Polyhedron::from_vrep(d, mbase).with_hrep();
    double maxc = 1.0;
    for (const Vec& v : nbase.vertices) maxc = std::max(maxc, norm_inf(v));
    double bound = maxc + norm2(shift) + 1.0;
    DistanceReport rep = hausdorff_nested(truncate_box(m, bound).vrep(),
                                          truncate_box(n, bound).vrep());
    CHECK(rep.d_h <= norm2(shift) + 1e-9);
  }
}

TEST_CASE("property: shrinking the inner set never decreases the distance") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    VRep inner = random_polytope(2, 4, rng);
    Vec centroid(2, 0.0);
    for (const Vec& v : inner.vertices)
      kernels::axpy(1.0 / inner.vertices.size(), v.data(), centroid.data(), 2);
    VRep outer = inner;
    // dilate about the centroid so nesting holds
    for (Vec& v : outer.vertices) v = add_scaled(centroid, 1.5, add_scaled(v, -1.0, centroid));
    double before = hausdorff_nested(inner, outer).d_h;
    VRep smaller = inner;
    smaller.vertices.pop_back();
    double after = hausdorff_nested(smaller, outer).d_h;
    CHECK(after >= before - 1e-9);
  }
}
