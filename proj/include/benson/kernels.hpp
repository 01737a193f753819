#ifndef BENSON_KERNELS_HPP
#define BENSON_KERNELS_HPP

#include <cstddef>

// Dense arithmetic kernels for the inner loops (simplex pivots, Gram
// matrices, halfspace evaluation). A scalar reference implementation is
// always available; on x86 an AVX2+FMA variant and on ARM a NEON variant
// are selected at runtime. All variants agree up to floating-point
// reassociation and are equivalence-tested against the scalar kernels.
namespace benson::kernels {

double dot(const double* a, const double* b, std::size_t n);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

// x *= alpha
void scale(double alpha, double* x, std::size_t n);

// Name of the dispatched backend: "scalar", "avx2" or "neon".
const char* backend();

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void scale_scalar(double alpha, double* x, std::size_t n);

#if defined(BENSON_HAVE_AVX2_TU)
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void scale_avx2(double alpha, double* x, std::size_t n);
#endif

#if defined(BENSON_HAVE_NEON_TU)
double dot_neon(const double* a, const double* b, std::size_t n);
void axpy_neon(double alpha, const double* x, double* y, std::size_t n);
void scale_neon(double alpha, double* x, std::size_t n);
#endif

}  // namespace detail

}  // namespace benson::kernels

#endif
