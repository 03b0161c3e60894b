#include "doctest.h"

#include <string>
#include <vector>

#include "veritop/f2/kernels.hpp"
#include "veritop/rng.hpp"

using namespace veritop;
using namespace veritop::f2;

namespace {

std::vector<uint64_t> random_words(Rng& rng, size_t n) {
    std::vector<uint64_t> out(n);
    for (auto& w : out) w = rng.next();
    return out;
}

}  // namespace

TEST_CASE("scalar kernels basic semantics") {
    const KernelOps& k = scalar_kernels();
    std::vector<uint64_t> a{0xffULL, 0x0ULL, 0x8000000000000000ULL};
    std::vector<uint64_t> b{0x0fULL, 0x1ULL, 0x8000000000000000ULL};
    CHECK(k.popcount(a.data(), a.size()) == 9);
    CHECK(k.and_popcount(a.data(), b.data(), a.size()) == 5);
    CHECK_FALSE(k.is_zero(a.data(), a.size()));
    k.xor_into(a.data(), b.data(), a.size());
    CHECK(a[0] == 0xf0ULL);
    CHECK(a[1] == 0x1ULL);
    CHECK(a[2] == 0x0ULL);
    std::vector<uint64_t> z(4, 0);
    CHECK(k.is_zero(z.data(), z.size()));
}

TEST_CASE("avx2 kernels agree with scalar reference") {
    const KernelOps* simd = avx2_kernels();
    if (simd == nullptr) {
        MESSAGE("AVX2 not available on this CPU; equivalence check skipped");
        return;
    }
    const KernelOps& ref = scalar_kernels();
    Rng rng(0x5eedULL, 1);
    // Sweep lengths across word-alignment boundaries, including the SIMD tail.
    for (size_t nwords = 0; nwords <= 19; ++nwords) {
        for (int rep = 0; rep < 50; ++rep) {
            auto a = random_words(rng, nwords);
            auto b = random_words(rng, nwords);
            CHECK(simd->popcount(a.data(), nwords) == ref.popcount(a.data(), nwords));
            CHECK(simd->and_popcount(a.data(), b.data(), nwords) ==
                  ref.and_popcount(a.data(), b.data(), nwords));
            CHECK(simd->is_zero(a.data(), nwords) == ref.is_zero(a.data(), nwords));
            auto a_simd = a;
            auto a_ref = a;
            simd->xor_into(a_simd.data(), b.data(), nwords);
            ref.xor_into(a_ref.data(), b.data(), nwords);
            CHECK(a_simd == a_ref);
        }
    }
    std::vector<uint64_t> z(9, 0);
    CHECK(simd->is_zero(z.data(), z.size()));
    z[8] = 1;
    CHECK_FALSE(simd->is_zero(z.data(), z.size()));
}

TEST_CASE("active backend is one of the registered ones") {
    const char* name = active_kernel_name();
    const bool known = std::string(name) == "scalar" || std::string(name) == "avx2";
    CHECK(known);
}
