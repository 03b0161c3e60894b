#include "veritop/f2/kernels.hpp"

namespace veritop::f2 {
namespace {

void xor_into_scalar(uint64_t* dst, const uint64_t* src, size_t nwords) {
    for (size_t i = 0; i < nwords; ++i) {
        dst[i] ^= src[i];
    }
}

uint64_t popcount_scalar(const uint64_t* words, size_t nwords) {
    uint64_t total = 0;
    for (size_t i = 0; i < nwords; ++i) {
        total += static_cast<uint64_t>(__builtin_popcountll(words[i]));
    }
    return total;
}

uint64_t and_popcount_scalar(const uint64_t* a, const uint64_t* b, size_t nwords) {
    uint64_t total = 0;
    for (size_t i = 0; i < nwords; ++i) {
        total += static_cast<uint64_t>(__builtin_popcountll(a[i] & b[i]));
    }
    return total;
}

bool is_zero_scalar(const uint64_t* words, size_t nwords) {
    uint64_t acc = 0;
    for (size_t i = 0; i < nwords; ++i) {
        acc |= words[i];
    }
    return acc == 0;
}

}  // namespace

const KernelOps& scalar_kernels() {
    static const KernelOps ops{
        "scalar",
        &xor_into_scalar,
        &popcount_scalar,
        &and_popcount_scalar,
        &is_zero_scalar,
    };
    return ops;
}

}  // namespace veritop::f2
