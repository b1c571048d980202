#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace paracert::simd {

/// Per-check maxima of contact-frame residuals over a batch of points
/// (x1,y1,x2,y2) near the unit sphere. All residuals are >= 0; a kernel
/// call folds its batch maxima into the struct with max().
struct FrameResidualMax {
    double tangency = 0.0;        // |<e_k, p>|
    double orthonormality = 0.0;  // |<e_j, e_k> - delta_jk|
    double alpha_e1 = 0.0;        // |alpha(e1) - 1|
    double alpha_e23 = 0.0;       // |alpha(e2)|, |alpha(e3)|
    double dalpha_e2e3 = 0.0;     // |dalpha(e2, e3) - 2|
    double quaternion = 0.0;      // componentwise |(i n, j n, k n) - (e1, e2, e3)|
};

/// One set of data-parallel inner-loop implementations. Every variant
/// computes bit-identical results to the scalar reference (the kernel
/// translation units are built with -ffp-contract=off, so scalar and
/// vector lanes round the same way).
struct KernelTable {
    const char* name;

    // dst[i] ^= src[i] for i < words
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t words);

    // parity (mod 2) of popcount(a & b) over `words` words
    int (*and_parity)(const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t words);

    // fold per-check residual maxima of `count` points into `out`
    void (*frame_residual_max)(const double* x1, const double* y1,
                               const double* x2, const double* y2,
                               std::size_t count, FrameResidualMax& out);
};

const KernelTable& scalar_kernels();

/// Variants usable on this machine, scalar always first.
std::span<const KernelTable* const> available_kernels();

/// Lookup among available variants; nullptr if absent.
const KernelTable* kernel_by_name(std::string_view name);

/// The selected variant. Chosen once per process: PARACERT_SIMD=<name>
/// overrides, otherwise the widest supported vector ISA wins.
const KernelTable& active();

}  // namespace paracert::simd
