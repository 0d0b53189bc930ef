#include "irslink/kernels.hpp"

namespace irslink::kernels {

#if defined(IRSLINK_HAVE_AVX2_BUILD)
bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
#endif

const KernelSet& active() {
#if defined(IRSLINK_HAVE_AVX2_BUILD)
    static const KernelSet& chosen = avx2_supported() ? avx2::set : scalar::set;
#else
    static const KernelSet& chosen = scalar::set;
#endif
    return chosen;
}

}  // namespace irslink::kernels
