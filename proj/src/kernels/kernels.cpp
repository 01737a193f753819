#include "benson/kernels.hpp"

namespace benson::kernels {

namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);
using ScaleFn = void (*)(double, double*, std::size_t);

struct Dispatch {
  DotFn dot;
  AxpyFn axpy;
  ScaleFn scale;
  const char* name;
};

Dispatch select_backend() {
#if defined(BENSON_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return {detail::dot_avx2, detail::axpy_avx2, detail::scale_avx2, "avx2"};
  }
#endif
#if defined(BENSON_HAVE_NEON_TU)
  return {detail::dot_neon, detail::axpy_neon, detail::scale_neon, "neon"};
#endif
  return {detail::dot_scalar, detail::axpy_scalar, detail::scale_scalar, "scalar"};
}

const Dispatch& dispatch() {
  static const Dispatch d = select_backend();
  return d;
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  return dispatch().dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  dispatch().axpy(alpha, x, y, n);
}

void scale(double alpha, double* x, std::size_t n) {
  dispatch().scale(alpha, x, n);
}

const char* backend() { return dispatch().name; }

}  // namespace benson::kernels
