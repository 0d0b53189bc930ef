#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace irslink::kernels {

using cdouble = std::complex<double>;

// Low-level complex inner loops used by the channel builders and the
// beamforming search oracles. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant; the active set is
// chosen once at startup from CPUID. The variants are equivalence-tested
// against the reference.

struct KernelSet {
    // sum_i a[i] * b[i]            (unconjugated bilinear form, w^T a)
    cdouble (*dot_u)(const cdouble* a, const cdouble* b, std::size_t n);
    // sum_i conj(a[i]) * b[i]      (Hermitian inner product, a^H b)
    cdouble (*dot_c)(const cdouble* a, const cdouble* b, std::size_t n);
    // sum_i a[i] * b[i] * c[i]     (diagonal sandwich, d^T diag(t) a)
    cdouble (*dot3)(const cdouble* a, const cdouble* b, const cdouble* c, std::size_t n);
    // sum_i |a[i]|^2
    double (*norm_sq)(const cdouble* a, std::size_t n);
    std::string_view name;
};

namespace scalar {
cdouble dot_u(const cdouble* a, const cdouble* b, std::size_t n);
cdouble dot_c(const cdouble* a, const cdouble* b, std::size_t n);
cdouble dot3(const cdouble* a, const cdouble* b, const cdouble* c, std::size_t n);
double norm_sq(const cdouble* a, std::size_t n);
extern const KernelSet set;
}  // namespace scalar

#if defined(IRSLINK_HAVE_AVX2_BUILD)
namespace avx2 {
cdouble dot_u(const cdouble* a, const cdouble* b, std::size_t n);
cdouble dot_c(const cdouble* a, const cdouble* b, std::size_t n);
cdouble dot3(const cdouble* a, const cdouble* b, const cdouble* c, std::size_t n);
double norm_sq(const cdouble* a, std::size_t n);
extern const KernelSet set;
}  // namespace avx2
bool avx2_supported();
#endif

/// Kernel set selected for this machine.
const KernelSet& active();

inline cdouble dot_u(const cdouble* a, const cdouble* b, std::size_t n) {
    return active().dot_u(a, b, n);
}
inline cdouble dot_c(const cdouble* a, const cdouble* b, std::size_t n) {
    return active().dot_c(a, b, n);
}
inline cdouble dot3(const cdouble* a, const cdouble* b, const cdouble* c, std::size_t n) {
    return active().dot3(a, b, c, n);
}
inline double norm_sq(const cdouble* a, std::size_t n) { return active().norm_sq(a, n); }

}  // namespace irslink::kernels
