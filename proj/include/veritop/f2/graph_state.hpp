#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "veritop/f2/binary_matrix.hpp"
#include "veritop/f2/bitvec.hpp"
#include "veritop/rng.hpp"

namespace veritop::f2 {

// Per-qubit Pauli error in the frame picture: (x component, z component),
// each of length n. Composition is componentwise XOR.
struct PauliError {
    BitVec xpart;
    BitVec zpart;

    PauliError() = default;
    explicit PauliError(size_t n) : xpart(n), zpart(n) {}

    size_t size() const { return xpart.size(); }
    bool is_identity() const { return xpart.is_zero() && zpart.is_zero(); }

    PauliError& operator^=(const PauliError& o) {
        xpart ^= o.xpart;
        zpart ^= o.zpart;
        return *this;
    }
};

enum class TestKind : uint8_t { T_B, T_W };

enum class Basis : uint8_t { X, Z, XY };

// One test-block measurement: per-qubit basis labels and the outcome bits.
struct MeasurementRecord {
    TestKind kind = TestKind::T_B;
    std::vector<Basis> basis;
    BitVec outcome;
};

// Bipartite two-colorable graph state. Qubits are globally indexed with the
// n_B black qubits first, then the n_W white qubits. The adjacency matrix A
// is white-row x black-column, so the stabilizer relations read
//   X_B^{z_B} Z_W^{A z_B} |G> = |G>,   X_W^{z_W} Z_B^{A^T z_W} |G> = |G>.
class GraphState {
  public:
    GraphState(size_t n_B, size_t n_W, std::vector<std::pair<uint32_t, uint32_t>> edges);

    size_t n_B() const { return nb_; }
    size_t n_W() const { return nw_; }
    size_t n() const { return nb_ + nw_; }

    const BinaryMatrix& A() const { return a_; }
    const BinaryMatrix& At() const { return at_; }
    const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }

    bool is_black(size_t global_q) const { return global_q < nb_; }

    // Test statistic of T_B: zpart|_B xor A^T (xpart|_W). Zero for every
    // error that acts trivially on the T_B measurement outcomes.
    BitVec deviation_B(const PauliError& e) const;
    // Mirror for T_W: zpart|_W xor A (xpart|_B).
    BitVec deviation_W(const PauliError& e) const;

    // Draw one measurement record for the requested test. Outcomes are
    // uniform over the stabilizer constraint; the record always satisfies
    //   X_B xor A^T Z_W = deviation_B   (resp. the T_W mirror).
    MeasurementRecord sample_test_outcomes(const PauliError& e, TestKind which, Rng& rng) const;

    // Recompute the test statistic from a record (X_B xor A^T Z_W etc).
    BitVec deviation_from_record(const MeasurementRecord& rec) const;

    // Structural self-check: shapes, edge list <-> A bijection.
    bool check_stabilizer_identities() const;

    // Shape/bijection rules factored out so malformed inputs can be probed.
    static bool check_parts(size_t n_B, size_t n_W,
                            const std::vector<std::pair<uint32_t, uint32_t>>& edges,
                            const BinaryMatrix& A, const BinaryMatrix& At);

    // Text format: "n_B n_W" then one "b w" line per edge (per-color indices).
    std::string to_text() const;
    static GraphState from_text(std::istream& in);

  private:
    size_t nb_ = 0;
    size_t nw_ = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges_;
    BinaryMatrix a_;   // n_W x n_B
    BinaryMatrix at_;  // n_B x n_W
    std::vector<std::vector<uint32_t>> b_neighbors_;  // per black qubit: white neighbors
    std::vector<std::vector<uint32_t>> w_neighbors_;  // per white qubit: black neighbors
};

}  // namespace veritop::f2
