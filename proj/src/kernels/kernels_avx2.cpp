// AVX2 kernels. Lane layout: one __m256d holds two complexes as
// [re0, im0, re1, im1]. Complex products use the addsub/permute idiom;
// conjugation is a sign flip of the imaginary lanes.

#include "backend_impl.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cstdint>

namespace qlocc::kernels {

namespace {

// Sign bit on the imaginary lanes (1 and 3).
inline __m256d imag_negate_mask() {
  return _mm256_castsi256_pd(_mm256_set_epi64x(
      static_cast<long long>(0x8000000000000000ULL), 0,
      static_cast<long long>(0x8000000000000000ULL), 0));
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_hadd_pd(s, s));
}

cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  const __m256d neg = imag_negate_mask();
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    // re lanes: xr*yr + xi*yi; im lanes: xr*yi - xi*yr
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    __m256d xneg = _mm256_xor_pd(xv, neg);
    __m256d yswap = _mm256_permute_pd(yv, 0x5);
    acc_im = _mm256_fmadd_pd(xneg, yswap, acc_im);
  }
  cplx acc{hsum(acc_re), hsum(acc_im)};
  for (; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

cplx dot_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  const __m256d neg = imag_negate_mask();
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    // re lanes: xr*yr - xi*yi; im lanes: xr*yi + xi*yr
    __m256d xneg = _mm256_xor_pd(xv, neg);
    acc_re = _mm256_fmadd_pd(xneg, yv, acc_re);
    __m256d yswap = _mm256_permute_pd(yv, 0x5);
    acc_im = _mm256_fmadd_pd(xv, yswap, acc_im);
  }
  cplx acc{hsum(acc_re), hsum(acc_im)};
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

// [ar*xr - ai*xi, ar*xi + ai*xr] for both complexes in the vector.
inline __m256d cmul(__m256d xv, __m256d va_re, __m256d va_im) {
  __m256d t1 = _mm256_mul_pd(va_re, xv);
  __m256d t2 = _mm256_mul_pd(va_im, _mm256_permute_pd(xv, 0x5));
  return _mm256_addsub_pd(t1, t2);
}

// a * conj(x): [ar*xr + ai*xi, ai*xr - ar*xi].
inline __m256d cmul_conj(__m256d xv, __m256d va_re, __m256d va_im,
                         __m256d neg) {
  __m256d t1 = _mm256_xor_pd(_mm256_mul_pd(va_re, xv), neg);
  __m256d t2 = _mm256_mul_pd(va_im, _mm256_permute_pd(xv, 0x5));
  return _mm256_add_pd(t1, t2);
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d va_re = _mm256_set1_pd(a.real());
  const __m256d va_im = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    yv = _mm256_add_pd(yv, cmul(xv, va_re, va_im));
    _mm256_storeu_pd(yp + 2 * i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void axpy_conj_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d va_re = _mm256_set1_pd(a.real());
  const __m256d va_im = _mm256_set1_pd(a.imag());
  const __m256d neg = imag_negate_mask();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    yv = _mm256_add_pd(yv, cmul_conj(xv, va_re, va_im, neg));
    _mm256_storeu_pd(yp + 2 * i, yv);
  }
  for (; i < n; ++i) y[i] += a * std::conj(x[i]);
}

void scale_avx2(cplx a, cplx* x, std::size_t n) {
  double* xp = reinterpret_cast<double*>(x);
  const __m256d va_re = _mm256_set1_pd(a.real());
  const __m256d va_im = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    _mm256_storeu_pd(xp + 2 * i, cmul(xv, va_re, va_im));
  }
  for (; i < n; ++i) x[i] *= a;
}

double sum_abs2_avx2(const cplx* x, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double out = hsum(acc);
  for (; i < n; ++i) out += std::norm(x[i]);
  return out;
}

}  // namespace

const Backend* avx2_backend_impl() {
  static const Backend backend{
      "avx2",         dot_conj_avx2, dot_avx2,      axpy_avx2,
      axpy_conj_avx2, scale_avx2,    sum_abs2_avx2,
  };
  return &backend;
}

}  // namespace qlocc::kernels

#else

namespace qlocc::kernels {

const Backend* avx2_backend_impl() { return nullptr; }

}  // namespace qlocc::kernels

#endif
