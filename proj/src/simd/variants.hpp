#pragma once

#include "paracert/simd/kernels.hpp"

// Internal registry of per-ISA kernel variants. Only the translation
// units compiled for the matching architecture define these.

namespace paracert::simd {

#if defined(PARACERT_HAVE_AVX2)
const KernelTable& avx2_kernels();
bool avx2_supported();
#endif

#if defined(PARACERT_HAVE_NEON)
const KernelTable& neon_kernels();
#endif

}  // namespace paracert::simd
