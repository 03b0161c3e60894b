#pragma once

#include <cstddef>
#include <cstdint>

namespace veritop::f2 {

// Word-level F2 kernels. The scalar implementations are the reference
// semantics; SIMD variants must be bit-identical and are checked against
// the scalar ones in the test suite.
struct KernelOps {
    const char* name;
    // dst[i] ^= src[i]
    void (*xor_into)(uint64_t* dst, const uint64_t* src, size_t nwords);
    // total set bits
    uint64_t (*popcount)(const uint64_t* words, size_t nwords);
    // popcount(a & b)
    uint64_t (*and_popcount)(const uint64_t* a, const uint64_t* b, size_t nwords);
    // true iff all words zero
    bool (*is_zero)(const uint64_t* words, size_t nwords);
};

const KernelOps& scalar_kernels();

// Null when the CPU (or build) lacks AVX2.
const KernelOps* avx2_kernels();

// Active backend: AVX2 when available unless overridden. The environment
// variable VERITOP_KERNELS=scalar|avx2 forces a backend at startup.
const KernelOps& kernels();

const char* active_kernel_name();

}  // namespace veritop::f2
