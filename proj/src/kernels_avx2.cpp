#include "irslink/kernels.hpp"

#include <immintrin.h>

// AVX2 complex-double kernels, two complex lanes per __m256d register.
// Layout in memory is interleaved (re0, im0, re1, im1).

namespace irslink::kernels::avx2 {

namespace {

// Accumulates acc_re/acc_im with the lanewise product a*b (unconjugated).
inline void cmul_acc(__m256d va, __m256d vb, __m256d& acc_re, __m256d& acc_im) {
    const __m256d b_swap = _mm256_permute_pd(vb, 0x5);  // (im, re) per lane
    const __m256d a_re = _mm256_movedup_pd(va);
    const __m256d a_im = _mm256_permute_pd(va, 0xF);
    // product = (a_re*b_re - a_im*b_im, a_re*b_im + a_im*b_re) interleaved
    const __m256d p = _mm256_fmaddsub_pd(a_re, vb, _mm256_mul_pd(a_im, b_swap));
    acc_re = _mm256_add_pd(acc_re, _mm256_unpacklo_pd(p, p));
    acc_im = _mm256_add_pd(acc_im, _mm256_unpackhi_pd(p, p));
}

// Lanewise complex product, interleaved result.
inline __m256d cmul(__m256d va, __m256d vb) {
    const __m256d b_swap = _mm256_permute_pd(vb, 0x5);
    const __m256d a_re = _mm256_movedup_pd(va);
    const __m256d a_im = _mm256_permute_pd(va, 0xF);
    return _mm256_fmaddsub_pd(a_re, vb, _mm256_mul_pd(a_im, b_swap));
}

inline cdouble reduce(__m256d acc_re, __m256d acc_im) {
    alignas(32) double re[4], im[4];
    _mm256_store_pd(re, acc_re);
    _mm256_store_pd(im, acc_im);
    return {re[0] + re[2], im[0] + im[2]};
}

inline __m256d conj_lanes(__m256d v) {
    const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    return _mm256_xor_pd(v, sign);
}

}  // namespace

cdouble dot_u(const cdouble* a, const cdouble* b, std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
        const __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
        cmul_acc(va, vb, acc_re, acc_im);
    }
    cdouble tail = scalar::dot_u(a + i, b + i, n - i);
    return reduce(acc_re, acc_im) + tail;
}

cdouble dot_c(const cdouble* a, const cdouble* b, std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = conj_lanes(_mm256_loadu_pd(reinterpret_cast<const double*>(a + i)));
        const __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
        cmul_acc(va, vb, acc_re, acc_im);
    }
    cdouble tail = scalar::dot_c(a + i, b + i, n - i);
    return reduce(acc_re, acc_im) + tail;
}

cdouble dot3(const cdouble* a, const cdouble* b, const cdouble* c, std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
        const __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
        const __m256d vc = _mm256_loadu_pd(reinterpret_cast<const double*>(c + i));
        cmul_acc(cmul(va, vb), vc, acc_re, acc_im);
    }
    cdouble tail = scalar::dot3(a + i, b + i, c + i, n - i);
    return reduce(acc_re, acc_im) + tail;
}

double norm_sq(const cdouble* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    alignas(32) double parts[4];
    _mm256_store_pd(parts, acc);
    return parts[0] + parts[1] + parts[2] + parts[3] + scalar::norm_sq(a + i, n - i);
}

const KernelSet set = {dot_u, dot_c, dot3, norm_sq, "avx2"};

}  // namespace irslink::kernels::avx2
