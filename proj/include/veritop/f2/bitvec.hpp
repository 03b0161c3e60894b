#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "veritop/f2/kernels.hpp"
#include "veritop/rng.hpp"

namespace veritop::f2 {

// Length-n vector over F2, packed LSB-first into 64-bit words. Bits past
// the logical length are kept zero so whole-word kernels stay exact.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    size_t words() const { return w_.size(); }
    const uint64_t* data() const { return w_.data(); }
    uint64_t* data() { return w_.data(); }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(size_t i, bool v) {
        const uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= mask;
        } else {
            w_[i >> 6] &= ~mask;
        }
    }

    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    uint64_t weight() const { return kernels().popcount(w_.data(), w_.size()); }
    bool is_zero() const { return kernels().is_zero(w_.data(), w_.size()); }

    // parity(<this, other>) over F2, i.e. popcount(a & b) mod 2.
    bool dot(const BitVec& other) const;

    bool operator==(const BitVec& other) const { return n_ == other.n_ && w_ == other.w_; }
    bool operator!=(const BitVec& other) const { return !(*this == other); }

    // Copy bits [start, start+len) into a fresh vector.
    BitVec slice(size_t start, size_t len) const;
    // XOR `src` into bits [start, start+src.size()).
    void xor_slice(size_t start, const BitVec& src);

    // Indices of set bits in increasing order.
    std::vector<size_t> ones() const;

    void fill_random(Rng& rng);
    // Each bit set independently with probability p (geometric skip-ahead).
    void fill_bernoulli(Rng& rng, double p);

    // "<nbits>:<hex>", bytes little-endian (byte 0 carries bits 0..7).
    std::string to_hex() const;
    static BitVec from_hex(const std::string& text);

  private:
    void mask_tail() {
        if (n_ % 64 != 0 && !w_.empty()) {
            w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
        }
    }

    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace veritop::f2
