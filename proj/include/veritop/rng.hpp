#pragma once

#include <cstdint>
#include <cmath>

namespace veritop {

// splitmix64 step (Sebastiano Vigna's public-domain mixer).
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** seeded from an explicit key chain. Every consumer of
// randomness derives its own stream from (master seed, trial, block, stage),
// so results do not depend on thread scheduling or evaluation order.
class Rng {
  public:
    enum Stage : uint64_t {
        kBlockError = 1,
        kPermutation = 2,
        kTestOutcome = 3,
        kGeneric = 4,
    };

    Rng() : Rng(0, 0, 0, 0) {}

    Rng(uint64_t seed, uint64_t trial = 0, uint64_t block = 0, uint64_t stage = 0) {
        uint64_t key = seed;
        key = splitmix64(key) ^ (trial * 0x9e3779b97f4a7c15ULL);
        key = splitmix64(key) ^ (block * 0xd1b54a32d192ed03ULL);
        key = splitmix64(key) ^ (stage * 0x8cb92ba72f3d8dd7ULL);
        for (auto& word : s_) {
            word = splitmix64(key);
        }
        // All-zero state is invalid for xoshiro; the mixer cannot produce
        // four zero words from any key, but guard anyway.
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
            s_[0] = 1;
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, bound), bias-free (rejection from the top range).
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform() < p;
    }

    // Number of failures before the next success for success probability p;
    // used for sparse iid bit sampling (skip-ahead). p must be in (0, 1).
    uint64_t geometric_skip(double p) {
        double u = uniform();
        // Guard against u == 0 (log(0) = -inf).
        if (u <= 0.0) u = 0x1.0p-53;
        double g = std::floor(std::log1p(-u) / std::log1p(-p));
        if (g < 0.0) g = 0.0;
        return static_cast<uint64_t>(g);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace veritop
