#include "variants.hpp"

#if defined(PARACERT_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cstring>

// AVX2 variant. Operation order per lane matches kernels_scalar.cpp
// exactly (no FMA, -ffp-contract=off), so results are bit-identical.

namespace paracert::simd {
namespace {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i s =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_xor_si256(d, s));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

int and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t fold = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < words; ++i) fold ^= a[i] & b[i];
    return static_cast<int>(std::popcount(fold) & 1u);
}

struct W4 {
    __m256d c[4];
};

inline __m256d neg(__m256d x) {
    return _mm256_xor_pd(x, _mm256_set1_pd(-0.0));
}

inline __m256d vabs(__m256d x) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

inline __m256d dot4(const W4& a, const W4& b) {
    __m256d s = _mm256_mul_pd(a.c[0], b.c[0]);
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c[1], b.c[1]));
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c[2], b.c[2]));
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c[3], b.c[3]));
    return s;
}

inline __m256d alpha4(const W4& p, const W4& v) {
    __m256d s = _mm256_mul_pd(p.c[0], v.c[1]);
    s = _mm256_sub_pd(s, _mm256_mul_pd(p.c[1], v.c[0]));
    s = _mm256_add_pd(s, _mm256_mul_pd(p.c[2], v.c[3]));
    s = _mm256_sub_pd(s, _mm256_mul_pd(p.c[3], v.c[2]));
    return s;
}

inline __m256d dalpha4(const W4& u, const W4& v) {
    __m256d s = _mm256_mul_pd(u.c[0], v.c[1]);
    s = _mm256_sub_pd(s, _mm256_mul_pd(u.c[1], v.c[0]));
    s = _mm256_add_pd(s, _mm256_mul_pd(u.c[2], v.c[3]));
    s = _mm256_sub_pd(s, _mm256_mul_pd(u.c[3], v.c[2]));
    return _mm256_mul_pd(_mm256_set1_pd(2.0), s);
}

inline W4 hamilton(const W4& q, const W4& n) {
    W4 r;
    r.c[0] = _mm256_sub_pd(
        _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(q.c[0], n.c[0]),
                                    _mm256_mul_pd(q.c[1], n.c[1])),
                      _mm256_mul_pd(q.c[2], n.c[2])),
        _mm256_mul_pd(q.c[3], n.c[3]));
    r.c[1] = _mm256_sub_pd(
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(q.c[0], n.c[1]),
                                    _mm256_mul_pd(q.c[1], n.c[0])),
                      _mm256_mul_pd(q.c[2], n.c[3])),
        _mm256_mul_pd(q.c[3], n.c[2]));
    r.c[2] = _mm256_add_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(q.c[0], n.c[2]),
                                    _mm256_mul_pd(q.c[1], n.c[3])),
                      _mm256_mul_pd(q.c[2], n.c[0])),
        _mm256_mul_pd(q.c[3], n.c[1]));
    r.c[3] = _mm256_add_pd(
        _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(q.c[0], n.c[3]),
                                    _mm256_mul_pd(q.c[1], n.c[2])),
                      _mm256_mul_pd(q.c[2], n.c[1])),
        _mm256_mul_pd(q.c[3], n.c[0]));
    return r;
}

inline double hmax(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return std::max(std::max(lanes[0], lanes[1]),
                    std::max(lanes[2], lanes[3]));
}

void frame_residual_max_avx2(const double* x1, const double* y1,
                             const double* x2, const double* y2,
                             std::size_t count, FrameResidualMax& out) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d zero = _mm256_setzero_pd();

    __m256d mt = zero, mo = zero, ma1 = zero, ma23 = zero, md = zero,
            mq = zero;

    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        W4 p{{_mm256_loadu_pd(x1 + i), _mm256_loadu_pd(y1 + i),
              _mm256_loadu_pd(x2 + i), _mm256_loadu_pd(y2 + i)}};
        W4 e1{{neg(p.c[1]), p.c[0], neg(p.c[3]), p.c[2]}};
        W4 e2{{neg(p.c[2]), p.c[3], p.c[0], neg(p.c[1])}};
        W4 e3{{neg(p.c[3]), neg(p.c[2]), p.c[1], p.c[0]}};

        __m256d t = vabs(dot4(e1, p));
        t = _mm256_max_pd(t, vabs(dot4(e2, p)));
        t = _mm256_max_pd(t, vabs(dot4(e3, p)));
        mt = _mm256_max_pd(mt, t);

        __m256d o = vabs(_mm256_sub_pd(dot4(e1, e1), one));
        o = _mm256_max_pd(o, vabs(_mm256_sub_pd(dot4(e2, e2), one)));
        o = _mm256_max_pd(o, vabs(_mm256_sub_pd(dot4(e3, e3), one)));
        o = _mm256_max_pd(o, vabs(dot4(e1, e2)));
        o = _mm256_max_pd(o, vabs(dot4(e1, e3)));
        o = _mm256_max_pd(o, vabs(dot4(e2, e3)));
        mo = _mm256_max_pd(mo, o);

        ma1 = _mm256_max_pd(ma1, vabs(_mm256_sub_pd(alpha4(p, e1), one)));

        __m256d a23 = vabs(alpha4(p, e2));
        a23 = _mm256_max_pd(a23, vabs(alpha4(p, e3)));
        ma23 = _mm256_max_pd(ma23, a23);

        md = _mm256_max_pd(md, vabs(_mm256_sub_pd(dalpha4(e2, e3), two)));

        W4 qi{{zero, one, zero, zero}};
        W4 qj{{zero, zero, one, zero}};
        W4 qk{{zero, zero, zero, one}};
        W4 in = hamilton(qi, p);
        W4 jn = hamilton(qj, p);
        W4 kn = hamilton(qk, p);
        __m256d q = zero;
        for (int k = 0; k < 4; ++k) {
            q = _mm256_max_pd(q, vabs(_mm256_sub_pd(in.c[k], e1.c[k])));
            q = _mm256_max_pd(q, vabs(_mm256_sub_pd(jn.c[k], e2.c[k])));
            q = _mm256_max_pd(q, vabs(_mm256_sub_pd(kn.c[k], e3.c[k])));
        }
        mq = _mm256_max_pd(mq, q);
    }

    out.tangency = std::max(out.tangency, hmax(mt));
    out.orthonormality = std::max(out.orthonormality, hmax(mo));
    out.alpha_e1 = std::max(out.alpha_e1, hmax(ma1));
    out.alpha_e23 = std::max(out.alpha_e23, hmax(ma23));
    out.dalpha_e2e3 = std::max(out.dalpha_e2e3, hmax(md));
    out.quaternion = std::max(out.quaternion, hmax(mq));

    if (i < count) {
        scalar_kernels().frame_residual_max(x1 + i, y1 + i, x2 + i, y2 + i,
                                            count - i, out);
    }
}

}  // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table{
        "avx2",
        &xor_words_avx2,
        &and_parity_avx2,
        &frame_residual_max_avx2,
    };
    return table;
}

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

}  // namespace paracert::simd

#endif  // PARACERT_HAVE_AVX2
