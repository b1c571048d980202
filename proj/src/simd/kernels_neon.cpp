#include "variants.hpp"

#if defined(PARACERT_HAVE_NEON)

#include <arm_neon.h>

#include <algorithm>
#include <bit>

// NEON (aarch64) variant; operation order per lane matches
// kernels_scalar.cpp, results are bit-identical.

namespace paracert::simd {
namespace {

void xor_words_neon(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

int and_parity_neon(const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    std::uint64_t fold = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < words; ++i) fold ^= a[i] & b[i];
    return static_cast<int>(std::popcount(fold) & 1u);
}

struct W2 {
    float64x2_t c[4];
};

inline float64x2_t dot4(const W2& a, const W2& b) {
    float64x2_t s = vmulq_f64(a.c[0], b.c[0]);
    s = vaddq_f64(s, vmulq_f64(a.c[1], b.c[1]));
    s = vaddq_f64(s, vmulq_f64(a.c[2], b.c[2]));
    s = vaddq_f64(s, vmulq_f64(a.c[3], b.c[3]));
    return s;
}

inline float64x2_t alpha4(const W2& p, const W2& v) {
    float64x2_t s = vmulq_f64(p.c[0], v.c[1]);
    s = vsubq_f64(s, vmulq_f64(p.c[1], v.c[0]));
    s = vaddq_f64(s, vmulq_f64(p.c[2], v.c[3]));
    s = vsubq_f64(s, vmulq_f64(p.c[3], v.c[2]));
    return s;
}

inline float64x2_t dalpha4(const W2& u, const W2& v) {
    float64x2_t s = vmulq_f64(u.c[0], v.c[1]);
    s = vsubq_f64(s, vmulq_f64(u.c[1], v.c[0]));
    s = vaddq_f64(s, vmulq_f64(u.c[2], v.c[3]));
    s = vsubq_f64(s, vmulq_f64(u.c[3], v.c[2]));
    return vmulq_f64(vdupq_n_f64(2.0), s);
}

inline W2 hamilton(const W2& q, const W2& n) {
    W2 r;
    r.c[0] = vsubq_f64(vsubq_f64(vsubq_f64(vmulq_f64(q.c[0], n.c[0]),
                                           vmulq_f64(q.c[1], n.c[1])),
                                 vmulq_f64(q.c[2], n.c[2])),
                       vmulq_f64(q.c[3], n.c[3]));
    r.c[1] = vsubq_f64(vaddq_f64(vaddq_f64(vmulq_f64(q.c[0], n.c[1]),
                                           vmulq_f64(q.c[1], n.c[0])),
                                 vmulq_f64(q.c[2], n.c[3])),
                       vmulq_f64(q.c[3], n.c[2]));
    r.c[2] = vaddq_f64(vaddq_f64(vsubq_f64(vmulq_f64(q.c[0], n.c[2]),
                                           vmulq_f64(q.c[1], n.c[3])),
                                 vmulq_f64(q.c[2], n.c[0])),
                       vmulq_f64(q.c[3], n.c[1]));
    r.c[3] = vaddq_f64(vsubq_f64(vaddq_f64(vmulq_f64(q.c[0], n.c[3]),
                                           vmulq_f64(q.c[1], n.c[2])),
                                 vmulq_f64(q.c[2], n.c[1])),
                       vmulq_f64(q.c[3], n.c[0]));
    return r;
}

void frame_residual_max_neon(const double* x1, const double* y1,
                             const double* x2, const double* y2,
                             std::size_t count, FrameResidualMax& out) {
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t two = vdupq_n_f64(2.0);
    const float64x2_t zero = vdupq_n_f64(0.0);

    float64x2_t mt = zero, mo = zero, ma1 = zero, ma23 = zero, md = zero,
                mq = zero;

    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        W2 p{{vld1q_f64(x1 + i), vld1q_f64(y1 + i), vld1q_f64(x2 + i),
              vld1q_f64(y2 + i)}};
        W2 e1{{vnegq_f64(p.c[1]), p.c[0], vnegq_f64(p.c[3]), p.c[2]}};
        W2 e2{{vnegq_f64(p.c[2]), p.c[3], p.c[0], vnegq_f64(p.c[1])}};
        W2 e3{{vnegq_f64(p.c[3]), vnegq_f64(p.c[2]), p.c[1], p.c[0]}};

        float64x2_t t = vabsq_f64(dot4(e1, p));
        t = vmaxq_f64(t, vabsq_f64(dot4(e2, p)));
        t = vmaxq_f64(t, vabsq_f64(dot4(e3, p)));
        mt = vmaxq_f64(mt, t);

        float64x2_t o = vabsq_f64(vsubq_f64(dot4(e1, e1), one));
        o = vmaxq_f64(o, vabsq_f64(vsubq_f64(dot4(e2, e2), one)));
        o = vmaxq_f64(o, vabsq_f64(vsubq_f64(dot4(e3, e3), one)));
        o = vmaxq_f64(o, vabsq_f64(dot4(e1, e2)));
        o = vmaxq_f64(o, vabsq_f64(dot4(e1, e3)));
        o = vmaxq_f64(o, vabsq_f64(dot4(e2, e3)));
        mo = vmaxq_f64(mo, o);

        ma1 = vmaxq_f64(ma1, vabsq_f64(vsubq_f64(alpha4(p, e1), one)));

        float64x2_t a23 = vabsq_f64(alpha4(p, e2));
        a23 = vmaxq_f64(a23, vabsq_f64(alpha4(p, e3)));
        ma23 = vmaxq_f64(ma23, a23);

        md = vmaxq_f64(md, vabsq_f64(vsubq_f64(dalpha4(e2, e3), two)));

        W2 qi{{zero, one, zero, zero}};
        W2 qj{{zero, zero, one, zero}};
        W2 qk{{zero, zero, zero, one}};
        W2 in = hamilton(qi, p);
        W2 jn = hamilton(qj, p);
        W2 kn = hamilton(qk, p);
        float64x2_t q = zero;
        for (int k = 0; k < 4; ++k) {
            q = vmaxq_f64(q, vabsq_f64(vsubq_f64(in.c[k], e1.c[k])));
            q = vmaxq_f64(q, vabsq_f64(vsubq_f64(jn.c[k], e2.c[k])));
            q = vmaxq_f64(q, vabsq_f64(vsubq_f64(kn.c[k], e3.c[k])));
        }
        mq = vmaxq_f64(mq, q);
    }

    out.tangency = std::max(out.tangency, vmaxvq_f64(mt));
    out.orthonormality = std::max(out.orthonormality, vmaxvq_f64(mo));
    out.alpha_e1 = std::max(out.alpha_e1, vmaxvq_f64(ma1));
    out.alpha_e23 = std::max(out.alpha_e23, vmaxvq_f64(ma23));
    out.dalpha_e2e3 = std::max(out.dalpha_e2e3, vmaxvq_f64(md));
    out.quaternion = std::max(out.quaternion, vmaxvq_f64(mq));

    if (i < count) {
        scalar_kernels().frame_residual_max(x1 + i, y1 + i, x2 + i, y2 + i,
                                            count - i, out);
    }
}

}  // namespace

const KernelTable& neon_kernels() {
    static const KernelTable table{
        "neon",
        &xor_words_neon,
        &and_parity_neon,
        &frame_residual_max_neon,
    };
    return table;
}

}  // namespace paracert::simd

#endif  // PARACERT_HAVE_NEON
