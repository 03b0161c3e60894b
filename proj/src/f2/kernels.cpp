#include "veritop/f2/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace veritop::f2 {

const KernelOps* avx2_kernels_impl();  // defined in kernels_avx2.cpp

const KernelOps* avx2_kernels() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) {
        return avx2_kernels_impl();
    }
#endif
    return nullptr;
}

namespace {

const KernelOps& select_kernels() {
    const char* force = std::getenv("VERITOP_KERNELS");
    if (force != nullptr) {
        if (std::strcmp(force, "scalar") == 0) return scalar_kernels();
        if (std::strcmp(force, "avx2") == 0) {
            const KernelOps* simd = avx2_kernels();
            if (simd != nullptr) return *simd;
            return scalar_kernels();
        }
    }
    const KernelOps* simd = avx2_kernels();
    return simd != nullptr ? *simd : scalar_kernels();
}

}  // namespace

const KernelOps& kernels() {
    static const KernelOps& active = select_kernels();
    return active;
}

const char* active_kernel_name() { return kernels().name; }

}  // namespace veritop::f2
