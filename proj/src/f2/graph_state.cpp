#include "veritop/f2/graph_state.hpp"

#include <istream>
#include <sstream>

#include "veritop/common.hpp"

namespace veritop::f2 {

namespace {
// Below this weight it is cheaper to scatter neighbor lists than to run the
// dense packed mat-vec.
constexpr uint64_t kSparseMatvecCutoff = 512;
}  // namespace

GraphState::GraphState(size_t n_B, size_t n_W, std::vector<std::pair<uint32_t, uint32_t>> edges)
    : nb_(n_B), nw_(n_W), edges_(std::move(edges)), a_(n_W, n_B),
      b_neighbors_(n_B), w_neighbors_(n_W) {
    for (const auto& [b, w] : edges_) {
        VT_REQUIRE(b < nb_ && w < nw_, "GraphState: edge endpoint out of range");
        VT_REQUIRE(!a_.get(w, b), "GraphState: duplicate edge");
        a_.set(w, b, true);
        b_neighbors_[b].push_back(w);
        w_neighbors_[w].push_back(b);
    }
    at_ = a_.transposed();
}

BitVec GraphState::deviation_B(const PauliError& e) const {
    VT_REQUIRE(e.size() == n(), "deviation_B: error length mismatch");
    BitVec dev = e.zpart.slice(0, nb_);
    const BitVec xw = e.xpart.slice(nb_, nw_);
    const uint64_t wt = xw.weight();
    if (wt == 0) return dev;
    if (wt <= kSparseMatvecCutoff) {
        for (size_t w : xw.ones()) {
            for (uint32_t b : w_neighbors_[w]) dev.flip(b);
        }
        return dev;
    }
    dev ^= at_.mul(xw);
    return dev;
}

BitVec GraphState::deviation_W(const PauliError& e) const {
    VT_REQUIRE(e.size() == n(), "deviation_W: error length mismatch");
    BitVec dev = e.zpart.slice(nb_, nw_);
    const BitVec xb = e.xpart.slice(0, nb_);
    const uint64_t wt = xb.weight();
    if (wt == 0) return dev;
    if (wt <= kSparseMatvecCutoff) {
        for (size_t b : xb.ones()) {
            for (uint32_t w : b_neighbors_[b]) dev.flip(w);
        }
        return dev;
    }
    dev ^= a_.mul(xb);
    return dev;
}

MeasurementRecord GraphState::sample_test_outcomes(const PauliError& e, TestKind which,
                                                   Rng& rng) const {
    VT_REQUIRE(e.size() == n(), "sample_test_outcomes: error length mismatch");
    MeasurementRecord rec;
    rec.kind = which;
    rec.basis.resize(n());
    rec.outcome = BitVec(n());
    if (which == TestKind::T_B) {
        // W measured in Z, B measured in X. Z_W is uniform (shifted by the
        // X error on W); X_B is pinned by the stabilizer constraint.
        BitVec zw(nw_);
        zw.fill_random(rng);
        zw ^= e.xpart.slice(nb_, nw_);
        BitVec xb = at_.mul(zw);
        xb ^= deviation_B(e);
        for (size_t q = 0; q < nb_; ++q) {
            rec.basis[q] = Basis::X;
            rec.outcome.set(q, xb.get(q));
        }
        for (size_t q = 0; q < nw_; ++q) {
            rec.basis[nb_ + q] = Basis::Z;
            rec.outcome.set(nb_ + q, zw.get(q));
        }
    } else {
        BitVec zb(nb_);
        zb.fill_random(rng);
        zb ^= e.xpart.slice(0, nb_);
        BitVec xw = a_.mul(zb);
        xw ^= deviation_W(e);
        for (size_t q = 0; q < nb_; ++q) {
            rec.basis[q] = Basis::Z;
            rec.outcome.set(q, zb.get(q));
        }
        for (size_t q = 0; q < nw_; ++q) {
            rec.basis[nb_ + q] = Basis::X;
            rec.outcome.set(nb_ + q, xw.get(q));
        }
    }
    return rec;
}

BitVec GraphState::deviation_from_record(const MeasurementRecord& rec) const {
    VT_REQUIRE(rec.outcome.size() == n(), "deviation_from_record: record length mismatch");
    if (rec.kind == TestKind::T_B) {
        BitVec dev = at_.mul(rec.outcome.slice(nb_, nw_));
        dev ^= rec.outcome.slice(0, nb_);
        return dev;
    }
    BitVec dev = a_.mul(rec.outcome.slice(0, nb_));
    dev ^= rec.outcome.slice(nb_, nw_);
    return dev;
}

bool GraphState::check_stabilizer_identities() const {
    return check_parts(nb_, nw_, edges_, a_, at_);
}

bool GraphState::check_parts(size_t n_B, size_t n_W,
                             const std::vector<std::pair<uint32_t, uint32_t>>& edges,
                             const BinaryMatrix& A, const BinaryMatrix& At) {
    if (A.rows() != n_W || A.cols() != n_B) return false;
    if (At.rows() != n_B || At.cols() != n_W) return false;
    // Edge list -> A is injective (no duplicates allowed at build), so the
    // bijection holds iff the popcounts agree and every edge is present.
    size_t ones = 0;
    for (size_t w = 0; w < n_W; ++w) {
        for (size_t b = 0; b < n_B; ++b) {
            if (A.get(w, b)) {
                ++ones;
                if (A.get(w, b) != At.get(b, w)) return false;
            }
        }
    }
    if (ones != edges.size()) return false;
    for (const auto& [b, w] : edges) {
        if (b >= n_B || w >= n_W || !A.get(w, b)) return false;
    }
    return true;
}

std::string GraphState::to_text() const {
    std::ostringstream out;
    out << nb_ << ' ' << nw_ << '\n';
    for (const auto& [b, w] : edges_) {
        out << b << ' ' << w << '\n';
    }
    return out.str();
}

GraphState GraphState::from_text(std::istream& in) {
    size_t nb = 0;
    size_t nw = 0;
    VT_REQUIRE(static_cast<bool>(in >> nb >> nw), "GraphState::from_text: bad header");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    uint32_t b = 0;
    uint32_t w = 0;
    while (in >> b >> w) {
        edges.emplace_back(b, w);
    }
    return GraphState(nb, nw, std::move(edges));
}

}  // namespace veritop::f2
