// Scalar reference kernels. Deliberately plain loops: these define the
// semantics the SIMD backends are tested against.

#include "qlocc/kernels.hpp"

namespace qlocc::kernels {

namespace {

cplx dot_conj_scalar(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

cplx dot_scalar(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpy_conj_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * std::conj(x[i]);
}

void scale_scalar(cplx a, cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double sum_abs2_scalar(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
  return acc;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{
      "scalar",         dot_conj_scalar, dot_scalar, axpy_scalar,
      axpy_conj_scalar, scale_scalar,    sum_abs2_scalar,
  };
  return backend;
}

}  // namespace qlocc::kernels
