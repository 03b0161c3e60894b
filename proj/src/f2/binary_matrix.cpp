#include "veritop/f2/binary_matrix.hpp"

#include "veritop/common.hpp"

namespace veritop::f2 {

BitVec BinaryMatrix::mul(const BitVec& x) const {
    VT_REQUIRE(x.size() == cols_, "BinaryMatrix::mul: dimension mismatch");
    BitVec y(rows_);
    const KernelOps& k = kernels();
    for (size_t r = 0; r < rows_; ++r) {
        if (k.and_popcount(row(r), x.data(), wpr_) & 1) {
            y.set(r, true);
        }
    }
    return y;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        const uint64_t* rw = row(r);
        for (size_t w = 0; w < wpr_; ++w) {
            uint64_t word = rw[w];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                t.set(w * 64 + static_cast<size_t>(bit), r, true);
                word &= word - 1;
            }
        }
    }
    return t;
}

}  // namespace veritop::f2
