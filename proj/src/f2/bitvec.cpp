#include "veritop/f2/bitvec.hpp"

#include <algorithm>
#include <bit>

#include "veritop/common.hpp"

namespace veritop::f2 {

BitVec& BitVec::operator^=(const BitVec& other) {
    VT_REQUIRE(n_ == other.n_, "BitVec xor: length mismatch");
    kernels().xor_into(w_.data(), other.w_.data(), w_.size());
    return *this;
}

bool BitVec::dot(const BitVec& other) const {
    VT_REQUIRE(n_ == other.n_, "BitVec dot: length mismatch");
    return kernels().and_popcount(w_.data(), other.w_.data(), w_.size()) & 1;
}

BitVec BitVec::slice(size_t start, size_t len) const {
    VT_REQUIRE(start + len <= n_, "BitVec slice: out of range");
    BitVec out(len);
    const size_t word0 = start >> 6;
    const unsigned shift = start & 63;
    for (size_t i = 0; i < out.w_.size(); ++i) {
        uint64_t lo = w_[word0 + i] >> shift;
        uint64_t hi = 0;
        if (shift != 0 && word0 + i + 1 < w_.size()) {
            hi = w_[word0 + i + 1] << (64 - shift);
        }
        out.w_[i] = lo | hi;
    }
    out.mask_tail();
    return out;
}

void BitVec::xor_slice(size_t start, const BitVec& src) {
    VT_REQUIRE(start + src.n_ <= n_, "BitVec xor_slice: out of range");
    for (size_t i = 0; i < src.n_; ++i) {
        // Word-at-a-time is possible but slices are cold paths; keep simple.
        if (src.get(i)) flip(start + i);
    }
}

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> out;
    for (size_t wi = 0; wi < w_.size(); ++wi) {
        uint64_t word = w_[wi];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            out.push_back(wi * 64 + static_cast<size_t>(bit));
            word &= word - 1;
        }
    }
    return out;
}

void BitVec::fill_random(Rng& rng) {
    for (auto& word : w_) {
        word = rng.next();
    }
    mask_tail();
}

void BitVec::fill_bernoulli(Rng& rng, double p) {
    clear();
    if (p <= 0.0 || n_ == 0) return;
    if (p >= 1.0) {
        std::fill(w_.begin(), w_.end(), ~uint64_t{0});
        mask_tail();
        return;
    }
    // Dense regime: direct per-bit draws; sparse regime: geometric skips.
    if (p > 0.05) {
        for (size_t i = 0; i < n_; ++i) {
            if (rng.uniform() < p) set(i, true);
        }
        return;
    }
    size_t i = rng.geometric_skip(p);
    while (i < n_) {
        set(i, true);
        i += 1 + rng.geometric_skip(p);
    }
}

std::string BitVec::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out = std::to_string(n_);
    out.push_back(':');
    const size_t nbytes = (n_ + 7) / 8;
    for (size_t b = 0; b < nbytes; ++b) {
        const uint8_t byte = static_cast<uint8_t>(w_[b >> 3] >> ((b & 7) * 8));
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 15]);
    }
    return out;
}

BitVec BitVec::from_hex(const std::string& text) {
    const size_t colon = text.find(':');
    VT_REQUIRE(colon != std::string::npos, "BitVec::from_hex: missing ':'");
    size_t n = 0;
    for (size_t i = 0; i < colon; ++i) {
        VT_REQUIRE(text[i] >= '0' && text[i] <= '9', "BitVec::from_hex: bad length");
        n = n * 10 + static_cast<size_t>(text[i] - '0');
    }
    const size_t nbytes = (n + 7) / 8;
    VT_REQUIRE(text.size() == colon + 1 + 2 * nbytes, "BitVec::from_hex: bad digit count");
    BitVec out(n);
    auto nibble = [](char c) -> uint64_t {
        if (c >= '0' && c <= '9') return static_cast<uint64_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<uint64_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<uint64_t>(c - 'A' + 10);
        contract_fail("BitVec::from_hex: bad hex digit");
    };
    for (size_t b = 0; b < nbytes; ++b) {
        const uint64_t hi = nibble(text[colon + 1 + 2 * b]);
        const uint64_t lo = nibble(text[colon + 2 + 2 * b]);
        out.w_[b >> 3] |= ((hi << 4) | lo) << ((b & 7) * 8);
    }
    const BitVec check = out;
    out.mask_tail();
    VT_REQUIRE(check == out, "BitVec::from_hex: set bits past declared length");
    return out;
}

}  // namespace veritop::f2
