#pragma once

#include <cstddef>
#include <vector>

#include "veritop/f2/bitvec.hpp"

namespace veritop::f2 {

// Dense bit-packed matrix over F2, row-major.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool v) {
        const uint64_t mask = uint64_t{1} << (c & 63);
        uint64_t& word = bits_[r * wpr_ + (c >> 6)];
        if (v) {
            word |= mask;
        } else {
            word &= ~mask;
        }
    }

    const uint64_t* row(size_t r) const { return bits_.data() + r * wpr_; }
    size_t words_per_row() const { return wpr_; }

    // y = M x over F2 (row-parity of AND).
    BitVec mul(const BitVec& x) const;

    BinaryMatrix transposed() const;

    bool operator==(const BinaryMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t wpr_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace veritop::f2
