#ifndef BENSON_INSTANCES_HPP
#define BENSON_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "benson/convexprog.hpp"
#include "benson/geometry.hpp"

namespace benson {

// A generated instance bundled with its machine-readable expectations,
// consumed by the verify command and the validation suite.
struct GeneratedInstance {
  std::string name;
  ProblemInstance instance;
  double eps = 0.0;
  Vec wbar;  // dual runs; empty selects the default

  std::optional<Polyhedron> reference_p;   // exact upper image
  std::optional<Polyhedron> reference_d;   // exact lower image (when known)
  std::vector<Vec> reference_y_vertices;   // exact body vertices (Cpp mode)
  std::vector<Vec> expected_y_vertices;    // expected approximation output
  std::vector<Vec> expected_p_vertices;    // expected P-level vertex set
  std::optional<double> expected_dh;
  std::optional<int> expected_cuts;
};

// Simplex body on which the primal algorithm stops at its initial outer
// approximation with the worst-case P-level error. eps = 1/(q+1).
GeneratedInstance gen_primal_tight_mocp(int q);

// Projection instance whose outer approximation error attains
// eps sqrt(q^2+q-1) after a single cut. eps = 1/(q+2), q >= 2.
GeneratedInstance gen_primal_tight_cpp(int q);

// Unit-simplex projection instance where the dual algorithm stops
// immediately and the inner approximation collapses to one point with the
// worst-case body-level error. eps = 1/(q+1).
GeneratedInstance gen_dual_tight_cpp(int q);

// Nested-centroid simplex family on which the dual algorithm's terminal
// inner approximation misses one vertex by exactly eps sqrt(q+1).
GeneratedInstance gen_dual_tight_mocp(int q, double eps);

// Random bounded full-dimensional projection instance; deterministic in
// the seed, with a strictly interior point recorded on the instance.
ProblemInstance gen_random_polytope_cpp(int q, int n, int m, std::uint64_t seed);

}  // namespace benson

#endif
