#ifndef BENSON_LINALG_HPP
#define BENSON_LINALG_HPP

#include <cstddef>
#include <vector>

#include "benson/kernels.hpp"

namespace benson {

using Vec = std::vector<double>;

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

  static Matrix identity(int n);
  Matrix transposed() const;
  Vec multiply(const Vec& x) const;            // A x
  Vec multiply_transposed(const Vec& y) const; // A^T y
};

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm_inf(const Vec& a);
double dist2(const Vec& a, const Vec& b);
Vec add_scaled(const Vec& a, double alpha, const Vec& b);  // a + alpha b
Vec scaled(const Vec& a, double alpha);
Vec unit_vector(int n, int i);
Vec ones(int n);

// Gaussian elimination with partial pivoting. Returns false when the
// system is singular at the given pivot tolerance.
bool solve_linear(Matrix A, Vec b, Vec& x, double pivot_tol = 1e-12);

// Inverse by Gauss-Jordan; false when singular.
bool invert(const Matrix& A, Matrix& inv, double pivot_tol = 1e-12);

// Numerical rank of the rows, pivot threshold relative to the largest entry.
int rank(Matrix A, double rel_tol = 1e-8);

// Jacobi eigendecomposition of a symmetric matrix: A = V diag(vals) V^T.
void jacobi_eigen(const Matrix& sym, Vec& vals, Matrix& vecs, int sweeps = 64);

}  // namespace benson

#endif
