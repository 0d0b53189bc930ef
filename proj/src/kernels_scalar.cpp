#include "irslink/kernels.hpp"

namespace irslink::kernels::scalar {

cdouble dot_u(const cdouble* a, const cdouble* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

cdouble dot_c(const cdouble* a, const cdouble* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

cdouble dot3(const cdouble* a, const cdouble* b, const cdouble* c, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pr = a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        const double pi = a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
        re += pr * c[i].real() - pi * c[i].imag();
        im += pr * c[i].imag() + pi * c[i].real();
    }
    return {re, im};
}

double norm_sq(const cdouble* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return acc;
}

const KernelSet set = {dot_u, dot_c, dot3, norm_sq, "scalar"};

}  // namespace irslink::kernels::scalar
