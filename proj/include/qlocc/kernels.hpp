// kernels.hpp
// Complex double-precision array kernels with runtime backend selection.
// The scalar backend is the reference semantics; SIMD backends must agree
// with it and are equivalence-tested in tests/test_kernels.cpp.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qlocc {

using cplx = std::complex<double>;

namespace kernels {

// Every kernel operates on contiguous interleaved (re, im) arrays of length n.
struct Backend {
  const char* name;
  cplx (*dot_conj)(const cplx* x, const cplx* y, std::size_t n);     // sum conj(x_i) * y_i
  cplx (*dot)(const cplx* x, const cplx* y, std::size_t n);          // sum x_i * y_i
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);       // y_i += a * x_i
  void (*axpy_conj)(cplx a, const cplx* x, cplx* y, std::size_t n);  // y_i += a * conj(x_i)
  void (*scale)(cplx a, cplx* x, std::size_t n);                     // x_i *= a
  double (*sum_abs2)(const cplx* x, std::size_t n);                  // sum |x_i|^2
};

const Backend& scalar_backend();

// Null when the binary was built without AVX2 support or the host CPU lacks it.
const Backend* avx2_backend();

// Active backend: chosen once, scalar unless AVX2 is available at runtime.
// QLOCC_KERNELS={auto|scalar|avx2} overrides the choice before first use.
const Backend& active_backend();

// Programmatic override ("scalar", "avx2", "auto"); false if unavailable.
bool select_backend(std::string_view name);

std::vector<std::string> available_backends();

inline cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  return active_backend().dot_conj(x, y, n);
}
inline cplx dot(const cplx* x, const cplx* y, std::size_t n) {
  return active_backend().dot(x, y, n);
}
inline void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  active_backend().axpy(a, x, y, n);
}
inline void axpy_conj(cplx a, const cplx* x, cplx* y, std::size_t n) {
  active_backend().axpy_conj(a, x, y, n);
}
inline void scale(cplx a, cplx* x, std::size_t n) {
  active_backend().scale(a, x, n);
}
inline double sum_abs2(const cplx* x, std::size_t n) {
  return active_backend().sum_abs2(x, n);
}

}  // namespace kernels
}  // namespace qlocc
