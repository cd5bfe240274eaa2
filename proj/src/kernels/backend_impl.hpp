// Internal glue between the per-ISA translation units and the dispatcher.

#pragma once

#include "qlocc/kernels.hpp"

namespace qlocc::kernels {

// Defined in kernels_avx2.cpp; returns nullptr when that TU was built
// without AVX2+FMA codegen. Runtime CPU support is checked by the dispatcher.
const Backend* avx2_backend_impl();

}  // namespace qlocc::kernels
