#include "benson/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "benson/linprog.hpp"

namespace benson {

namespace {

constexpr double kSupportGapTol = 1e-12;
constexpr double kNestTol = 1e-7;

// Minimum-norm point in the affine hull of the selected shifted vertices:
// KKT system [G 1; 1' 0] (lambda, mu) = (0, 1) with G the Gram matrix.
bool affine_min_norm(const std::vector<Vec>& u, const std::vector<int>& sel, Vec& lambda) {
  const int k = static_cast<int>(sel.size());
  Matrix kkt(k + 1, k + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      double g = dot(u[sel[i]], u[sel[j]]);
      kkt(i, j) = g;
      kkt(j, i) = g;
    }
    kkt(i, i) += 1e-14;  // ridge against rank-deficient corrals
    kkt(i, k) = 1.0;
    kkt(k, i) = 1.0;
  }
  Vec rhs(k + 1, 0.0);
  rhs[k] = 1.0;
  Vec sol;
  if (!solve_linear(kkt, rhs, sol, 1e-14)) return false;
  lambda.assign(sol.begin(), sol.begin() + k);
  return true;
}

}  // namespace

std::pair<double, Vec> dist_point_to_polytope(const Vec& p, const VRep& m) {
  if (!m.rays.empty()) throw RaysPresent("distance requires a bounded polytope");
  if (m.vertices.empty()) throw Error("distance requires at least one vertex");
  const std::size_t count = m.vertices.size();

  std::vector<Vec> u(count);
  for (std::size_t i = 0; i < count; ++i) u[i] = add_scaled(m.vertices[i], -1.0, p);

  std::size_t start = 0;
  double best = dot(u[0], u[0]);
  for (std::size_t i = 1; i < count; ++i) {
    double n = dot(u[i], u[i]);
    if (n < best) {
      best = n;
      start = i;
    }
  }

  std::vector<int> corral{static_cast<int>(start)};
  Vec lambda{1.0};
  Vec x = u[start];

  const int max_iters = std::max<int>(100, 10 * static_cast<int>(count * count));
  for (int iter = 0; iter < max_iters; ++iter) {
    double xx = dot(x, x);
    int j = -1;
    double min_ip = kInf;
    for (std::size_t i = 0; i < count; ++i) {
      double ip = dot(u[i], x);
      if (ip < min_ip) {
        min_ip = ip;
        j = static_cast<int>(i);
      }
    }
    if (min_ip >= xx - kSupportGapTol * std::max(1.0, xx)) break;
    if (std::find(corral.begin(), corral.end(), j) == corral.end()) {
      corral.push_back(j);
      lambda.push_back(0.0);
    }

    for (int minor = 0; minor < max_iters; ++minor) {
      Vec lam_new;
      if (!affine_min_norm(u, corral, lam_new)) {
        // numerically degenerate corral: drop the smallest-weight point
        std::size_t drop = 0;
        for (std::size_t i = 1; i < lambda.size(); ++i)
          if (lambda[i] < lambda[drop]) drop = i;
        corral.erase(corral.begin() + static_cast<long>(drop));
        lambda.erase(lambda.begin() + static_cast<long>(drop));
        continue;
      }
      bool interior = true;
      for (double l : lam_new)
        if (l < 1e-12) interior = false;
      if (interior) {
        lambda = lam_new;
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lam_new[i] < 1e-12) {
          double denom = lambda[i] - lam_new[i];
          if (denom > 1e-300) theta = std::min(theta, lambda[i] / denom);
        }
      }
      std::vector<int> next_corral;
      Vec next_lambda;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        double l = (1.0 - theta) * lambda[i] + theta * lam_new[i];
        if (l > 1e-12) {
          next_corral.push_back(corral[i]);
          next_lambda.push_back(l);
        }
      }
      if (next_corral.empty()) {
        next_corral.push_back(corral[0]);
        next_lambda.push_back(1.0);
      }
      corral = std::move(next_corral);
      lambda = std::move(next_lambda);
    }

    x.assign(p.size(), 0.0);
    for (std::size_t i = 0; i < corral.size(); ++i)
      kernels::axpy(lambda[i], u[corral[i]].data(), x.data(), x.size());
  }

  Vec nearest = add_scaled(p, 1.0, x);
  return {norm2(x), nearest};
}

DistanceReport hausdorff_nested(const VRep& inner, const VRep& outer) {
  if (!inner.rays.empty() || !outer.rays.empty())
    throw RaysPresent("nested Hausdorff distance requires bounded sets");
  if (inner.vertices.empty() || outer.vertices.empty())
    throw Error("nested Hausdorff distance requires nonempty sets");

  for (const Vec& v : inner.vertices) {
    auto [d, ignored] = dist_point_to_polytope(v, outer);
    if (d > kNestTol) throw NotNested("inner vertex lies outside the outer set");
  }

  DistanceReport report;
  report.d_h = -1.0;
  for (const Vec& v : outer.vertices) {
    auto [d, nearest] = dist_point_to_polytope(v, inner);
    report.per_vertex.emplace_back(v, d);
    if (d > report.d_h) {
      report.d_h = d;
      report.witness_outer = v;
      report.witness_inner = nearest;
    }
  }
  return report;
}

double hausdorff_sampled(const VRep& inner, const VRep& outer, int samples,
                         std::uint64_t seed) {
  if (!inner.rays.empty() || !outer.rays.empty())
    throw RaysPresent("sampled Hausdorff distance requires bounded sets");
  const int dim = static_cast<int>(outer.vertices.at(0).size());

  std::vector<Halfspace> facets;
  bool boundary_mode = true;
  try {
    facets = v_to_h(outer, dim);
  } catch (const Error&) {
    boundary_mode = false;  // flat outer set: fall back to hull samples
  }

  std::mt19937_64 rng(seed);
  auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto gaussian = [&]() {
    double a = std::max(u01(), 1e-300), b = u01();
    return std::sqrt(-2.0 * std::log(a)) * std::cos(6.283185307179586 * b);
  };

  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    // random hull point via exponential weights
    Vec point(dim, 0.0);
    double wsum = 0.0;
    for (const Vec& v : outer.vertices) {
      double w = -std::log(std::max(u01(), 1e-300));
      kernels::axpy(w, v.data(), point.data(), point.size());
      wsum += w;
    }
    kernels::scale(1.0 / wsum, point.data(), point.size());

    if (boundary_mode) {
      Vec dir(dim);
      double nrm = 0.0;
      do {
        for (double& c : dir) c = gaussian();
        nrm = norm2(dir);
      } while (nrm < 1e-12);
      kernels::scale(1.0 / nrm, dir.data(), dir.size());
      double tmax = kInf;
      for (const Halfspace& h : facets) {
        double ad = dot(h.a, dir);
        if (ad < -1e-12) tmax = std::min(tmax, h.eval(point) / (-ad));
      }
      if (tmax < kInf) kernels::axpy(tmax, dir.data(), point.data(), point.size());
    }
    best = std::max(best, dist_point_to_polytope(point, inner).first);
  }
  return best;
}

}  // namespace benson
