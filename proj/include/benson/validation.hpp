#ifndef BENSON_VALIDATION_HPP
#define BENSON_VALIDATION_HPP

#include <string>
#include <vector>

#include "benson/geometry.hpp"
#include "benson/instances.hpp"
#include "benson/projection.hpp"

namespace benson {

// Adds y_i <= bound for every coordinate.
Polyhedron truncate_box(const Polyhedron& poly, double bound);

// Hausdorff distance between nested P-level sets sharing the recession
// cone R^{q+1}_+. Truncating both at a box beyond every vertex leaves the
// distance unchanged, reducing to the bounded nested case.
double hausdorff_plevel(const Polyhedron& inner, const Polyhedron& outer);

// Bijective matching of two vertex lists within tol (Euclidean).
bool vertex_set_match(const std::vector<Vec>& got, const std::vector<Vec>& expected,
                      double tol);

struct VerifyRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Reproduces the four worked examples at the given dimensions; every row
// compares a measured quantity against its expectation.
std::vector<VerifyRow> run_paper_verification(const std::vector<int>& qs, Selection sel);

}  // namespace benson

#endif
