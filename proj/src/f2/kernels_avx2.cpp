// AVX2 variants of the F2 word kernels. Compiled with -mavx2 in its own
// translation unit; selected at runtime only when the CPU reports AVX2.

#include "veritop/f2/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace veritop::f2 {
namespace {

void xor_into_avx2(uint64_t* dst, const uint64_t* src, size_t nwords) {
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < nwords; ++i) {
        dst[i] ^= src[i];
    }
}

// Nibble-LUT popcount (vpshufb) with horizontal accumulation via vpsadbw.
inline __m256i popcount_epi8(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

uint64_t popcount_avx2(const uint64_t* words, size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_epi8(v), _mm256_setzero_si256()));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nwords; ++i) {
        total += static_cast<uint64_t>(__builtin_popcountll(words[i]));
    }
    return total;
}

uint64_t and_popcount_avx2(const uint64_t* a, const uint64_t* b, size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i v = _mm256_and_si256(va, vb);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_epi8(v), _mm256_setzero_si256()));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nwords; ++i) {
        total += static_cast<uint64_t>(__builtin_popcountll(a[i] & b[i]));
    }
    return total;
}

bool is_zero_avx2(const uint64_t* words, size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)));
    }
    if (!_mm256_testz_si256(acc, acc)) return false;
    uint64_t tail = 0;
    for (; i < nwords; ++i) {
        tail |= words[i];
    }
    return tail == 0;
}

}  // namespace

const KernelOps* avx2_kernels_impl() {
    static const KernelOps ops{
        "avx2",
        &xor_into_avx2,
        &popcount_avx2,
        &and_popcount_avx2,
        &is_zero_avx2,
    };
    return &ops;
}

}  // namespace veritop::f2

#else

namespace veritop::f2 {
const KernelOps* avx2_kernels_impl() { return nullptr; }
}  // namespace veritop::f2

#endif
