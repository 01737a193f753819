#include "benson/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace benson {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::multiply(const Vec& x) const {
  assert(static_cast<int>(x.size()) == cols);
  Vec y(rows, 0.0);
  for (int i = 0; i < rows; ++i) y[i] = kernels::dot(row(i), x.data(), cols);
  return y;
}

Vec Matrix::multiply_transposed(const Vec& y) const {
  assert(static_cast<int>(y.size()) == rows);
  Vec x(cols, 0.0);
  for (int i = 0; i < rows; ++i) kernels::axpy(y[i], row(i), x.data(), cols);
  return x;
}

double dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  return kernels::dot(a.data(), b.data(), a.size());
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double norm_inf(const Vec& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::fabs(v));
  return m;
}

double dist2(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vec add_scaled(const Vec& a, double alpha, const Vec& b) {
  assert(a.size() == b.size());
  Vec r = a;
  kernels::axpy(alpha, b.data(), r.data(), r.size());
  return r;
}

Vec scaled(const Vec& a, double alpha) {
  Vec r = a;
  kernels::scale(alpha, r.data(), r.size());
  return r;
}

Vec unit_vector(int n, int i) {
  Vec e(n, 0.0);
  e[i] = 1.0;
  return e;
}

Vec ones(int n) { return Vec(n, 1.0); }

bool solve_linear(Matrix A, Vec b, Vec& x, double pivot_tol) {
  assert(A.rows == A.cols && static_cast<int>(b.size()) == A.rows);
  const int n = A.rows;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::fabs(A(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::fabs(A(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= pivot_tol) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      double f = A(i, k) / A(k, k);
      if (f == 0.0) continue;
      kernels::axpy(-f, A.row(k) + k, A.row(i) + k, n - k);
      b[i] -= f * b[k];
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
    x[i] = s / A(i, i);
  }
  return true;
}

bool invert(const Matrix& A, Matrix& inv, double pivot_tol) {
  assert(A.rows == A.cols);
  const int n = A.rows;
  Matrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = A(i, j);
    w(i, n + i) = 1.0;
  }
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::fabs(w(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::fabs(w(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= pivot_tol) return false;
    if (piv != k)
      for (int j = 0; j < 2 * n; ++j) std::swap(w(k, j), w(piv, j));
    double d = 1.0 / w(k, k);
    kernels::scale(d, w.row(k), static_cast<std::size_t>(2) * n);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      double f = w(i, k);
      if (f == 0.0) continue;
      kernels::axpy(-f, w.row(k), w.row(i), static_cast<std::size_t>(2) * n);
    }
  }
  inv = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = w(i, n + j);
  return true;
}

int rank(Matrix A, double rel_tol) {
  const int m = A.rows, n = A.cols;
  double scale = 0.0;
  for (double v : A.a) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return 0;
  const double tol = rel_tol * scale;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    double best = tol;
    for (int i = r; i < m; ++i) {
      double v = std::fabs(A(i, col));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < n; ++j) std::swap(A(r, j), A(piv, j));
    for (int i = r + 1; i < m; ++i) {
      double f = A(i, col) / A(r, col);
      if (f == 0.0) continue;
      kernels::axpy(-f, A.row(r) + col, A.row(i) + col, n - col);
    }
    ++r;
  }
  return r;
}

void jacobi_eigen(const Matrix& sym, Vec& vals, Matrix& vecs, int sweeps) {
  assert(sym.rows == sym.cols);
  const int n = sym.rows;
  Matrix a = sym;
  vecs = Matrix::identity(n);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = vecs(k, p), vkq = vecs(k, q);
          vecs(k, p) = c * vkp - s * vkq;
          vecs(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  vals.assign(n, 0.0);
  for (int i = 0; i < n; ++i) vals[i] = a(i, i);
}

}  // namespace benson
