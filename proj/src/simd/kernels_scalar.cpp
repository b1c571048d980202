#include "paracert/simd/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

// Reference kernels. The vector variants (kernels_avx2.cpp,
// kernels_neon.cpp) mirror the exact operation order used here so that
// equivalence tests can require bit-identical outputs.

namespace paracert::simd {
namespace {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

int and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t words) {
    // popcount parity is additive over xor-folding:
    // popcnt(x ^ y) == popcnt(x) + popcnt(y) (mod 2)
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i) acc ^= a[i] & b[i];
    return static_cast<int>(std::popcount(acc) & 1u);
}

struct V4 {
    double c[4];
};

inline double dot4(const V4& a, const V4& b) {
    double s = a.c[0] * b.c[0];
    s = s + a.c[1] * b.c[1];
    s = s + a.c[2] * b.c[2];
    s = s + a.c[3] * b.c[3];
    return s;
}

// alpha_st = x1 dy1 - y1 dx1 + x2 dy2 - y2 dx2, evaluated on v at p
inline double alpha4(const V4& p, const V4& v) {
    double s = p.c[0] * v.c[1];
    s = s - p.c[1] * v.c[0];
    s = s + p.c[2] * v.c[3];
    s = s - p.c[3] * v.c[2];
    return s;
}

// dalpha = 2 (dx1 ^ dy1 + dx2 ^ dy2) on the pair (u, v)
inline double dalpha4(const V4& u, const V4& v) {
    double s = u.c[0] * v.c[1];
    s = s - u.c[1] * v.c[0];
    s = s + u.c[2] * v.c[3];
    s = s - u.c[3] * v.c[2];
    return 2.0 * s;
}

// Hamilton product q * n with quaternion components (w, x, y, z)
inline V4 hamilton(const V4& q, const V4& n) {
    V4 r;
    r.c[0] = q.c[0] * n.c[0] - q.c[1] * n.c[1] - q.c[2] * n.c[2] - q.c[3] * n.c[3];
    r.c[1] = q.c[0] * n.c[1] + q.c[1] * n.c[0] + q.c[2] * n.c[3] - q.c[3] * n.c[2];
    r.c[2] = q.c[0] * n.c[2] - q.c[1] * n.c[3] + q.c[2] * n.c[0] + q.c[3] * n.c[1];
    r.c[3] = q.c[0] * n.c[3] + q.c[1] * n.c[2] - q.c[2] * n.c[1] + q.c[3] * n.c[0];
    return r;
}

void frame_residual_max_scalar(const double* x1, const double* y1,
                               const double* x2, const double* y2,
                               std::size_t count, FrameResidualMax& out) {
    FrameResidualMax m = out;
    for (std::size_t i = 0; i < count; ++i) {
        const V4 p{{x1[i], y1[i], x2[i], y2[i]}};
        const V4 e1{{-p.c[1], p.c[0], -p.c[3], p.c[2]}};
        const V4 e2{{-p.c[2], p.c[3], p.c[0], -p.c[1]}};
        const V4 e3{{-p.c[3], -p.c[2], p.c[1], p.c[0]}};

        double t = std::fabs(dot4(e1, p));
        t = std::max(t, std::fabs(dot4(e2, p)));
        t = std::max(t, std::fabs(dot4(e3, p)));
        m.tangency = std::max(m.tangency, t);

        double o = std::fabs(dot4(e1, e1) - 1.0);
        o = std::max(o, std::fabs(dot4(e2, e2) - 1.0));
        o = std::max(o, std::fabs(dot4(e3, e3) - 1.0));
        o = std::max(o, std::fabs(dot4(e1, e2)));
        o = std::max(o, std::fabs(dot4(e1, e3)));
        o = std::max(o, std::fabs(dot4(e2, e3)));
        m.orthonormality = std::max(m.orthonormality, o);

        m.alpha_e1 = std::max(m.alpha_e1, std::fabs(alpha4(p, e1) - 1.0));

        double a23 = std::fabs(alpha4(p, e2));
        a23 = std::max(a23, std::fabs(alpha4(p, e3)));
        m.alpha_e23 = std::max(m.alpha_e23, a23);

        m.dalpha_e2e3 =
            std::max(m.dalpha_e2e3, std::fabs(dalpha4(e2, e3) - 2.0));

        // n = x1 + y1 i + x2 j + y2 k; left products i n, j n, k n
        // reproduce e1, e2, e3 exactly.
        const V4 qi{{0.0, 1.0, 0.0, 0.0}};
        const V4 qj{{0.0, 0.0, 1.0, 0.0}};
        const V4 qk{{0.0, 0.0, 0.0, 1.0}};
        const V4 in = hamilton(qi, p);
        const V4 jn = hamilton(qj, p);
        const V4 kn = hamilton(qk, p);
        double q = 0.0;
        for (int k = 0; k < 4; ++k) {
            q = std::max(q, std::fabs(in.c[k] - e1.c[k]));
            q = std::max(q, std::fabs(jn.c[k] - e2.c[k]));
            q = std::max(q, std::fabs(kn.c[k] - e3.c[k]));
        }
        m.quaternion = std::max(m.quaternion, q);
    }
    out = m;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        "scalar",
        &xor_words_scalar,
        &and_parity_scalar,
        &frame_residual_max_scalar,
    };
    return table;
}

}  // namespace paracert::simd
