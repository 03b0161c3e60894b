#include "doctest.h"

#include <complex>
#include <sstream>
#include <vector>

#include "veritop/f2/graph_state.hpp"
#include "veritop/rng.hpp"

using namespace veritop;
using namespace veritop::f2;

namespace {

// Amplitude-level oracle for the 2-qubit graph state (1 black = qubit 0,
// 1 white = qubit 1, single edge). Measures qubit 0 in X and qubit 1 in Z
// under a given Pauli error and returns the set of outcome pairs (x_B, z_W)
// with nonzero probability. Used to pin the deviation formulas.
std::vector<std::pair<int, int>> two_qubit_tb_outcomes(bool xB, bool zB, bool xW, bool zW) {
    using cd = std::complex<double>;
    // Basis index i = b0 + 2*b1.
    std::vector<cd> psi(4, cd(0.5, 0.0));
    psi[3] = -psi[3];  // CZ on |++>
    auto apply_x = [&](int q) {
        std::vector<cd> out(4);
        for (int i = 0; i < 4; ++i) out[i ^ (1 << q)] = psi[i];
        psi = out;
    };
    auto apply_z = [&](int q) {
        for (int i = 0; i < 4; ++i) {
            if ((i >> q) & 1) psi[i] = -psi[i];
        }
    };
    if (xB) apply_x(0);
    if (zB) apply_z(0);
    if (xW) apply_x(1);
    if (zW) apply_z(1);
    std::vector<std::pair<int, int>> support;
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            // Project qubit 0 onto |s>_X and qubit 1 onto |t>_Z.
            double prob = 0.0;
            for (int b1 = 0; b1 < 2; ++b1) {
                if (b1 != t) continue;
                // <s|_X on qubit 0: (psi[0 + 2 b1] + (-1)^s psi[1 + 2 b1]) / sqrt(2)
                cd amp = (psi[0 + 2 * b1] + (s ? -1.0 : 1.0) * psi[1 + 2 * b1]) / std::sqrt(2.0);
                prob += std::norm(amp);
            }
            if (prob > 1e-12) support.emplace_back(s, t);
        }
    }
    return support;
}

GraphState two_qubit_graph() {
    return GraphState(1, 1, {{0, 0}});
}

PauliError make_error(size_t n, std::vector<size_t> xs, std::vector<size_t> zs) {
    PauliError e(n);
    for (size_t i : xs) e.xpart.set(i, true);
    for (size_t i : zs) e.zpart.set(i, true);
    return e;
}

GraphState random_graph(Rng& rng, size_t nb, size_t nw) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t b = 0; b < nb; ++b) {
        for (uint32_t w = 0; w < nw; ++w) {
            if (rng.bernoulli(0.4)) edges.emplace_back(b, w);
        }
    }
    return GraphState(nb, nw, std::move(edges));
}

PauliError random_error(Rng& rng, size_t n) {
    PauliError e(n);
    e.xpart.fill_bernoulli(rng, 0.3);
    e.zpart.fill_bernoulli(rng, 0.3);
    return e;
}

}  // namespace

TEST_CASE("two-qubit deviations match the amplitude oracle") {
    GraphState g = two_qubit_graph();
    // Every single-qubit Pauli: check the simulated deviation equals the
    // constraint violation the amplitude oracle exhibits on its support.
    for (int mask = 0; mask < 16; ++mask) {
        const bool xB = mask & 1, zB = mask & 2, xW = mask & 4, zW = mask & 8;
        PauliError e(2);
        e.xpart.set(0, xB);
        e.zpart.set(0, zB);
        e.xpart.set(1, xW);
        e.zpart.set(1, zW);
        const BitVec dev = g.deviation_B(e);
        auto support = two_qubit_tb_outcomes(xB, zB, xW, zW);
        REQUIRE(!support.empty());
        for (auto [s, t] : support) {
            // A = [1]: constraint X_B + A^T Z_W = deviation.
            CHECK(((s ^ t) != 0) == dev.get(0));
        }
    }
}

TEST_CASE("deviation examples on the single-edge graph") {
    GraphState g = two_qubit_graph();
    CHECK(g.deviation_B(make_error(2, {}, {})).is_zero());
    CHECK(g.deviation_W(make_error(2, {}, {})).is_zero());
    // Z on the black qubit flips T_B, not T_W.
    CHECK(g.deviation_B(make_error(2, {}, {0})).get(0));
    CHECK_FALSE(g.deviation_W(make_error(2, {}, {0})).get(0));
    // X on the white qubit flips T_B.
    CHECK(g.deviation_B(make_error(2, {1}, {})).get(0));
    // Z on the white qubit flips T_W.
    CHECK(g.deviation_W(make_error(2, {}, {1})).get(0));
}

TEST_CASE("deviations are linear and ignore the commuting components") {
    Rng rng(2024);
    for (int rep = 0; rep < 25; ++rep) {
        GraphState g = random_graph(rng, 3 + rng.below(20), 3 + rng.below(20));
        PauliError e1 = random_error(rng, g.n());
        PauliError e2 = random_error(rng, g.n());
        PauliError sum = e1;
        sum ^= e2;
        CHECK(g.deviation_B(sum) == (g.deviation_B(e1) ^ g.deviation_B(e2)));
        CHECK(g.deviation_W(sum) == (g.deviation_W(e1) ^ g.deviation_W(e2)));

        // Z on W and X on B never move deviation_B; mirror for deviation_W.
        PauliError commuting(g.n());
        for (size_t q = 0; q < g.n_B(); ++q) commuting.xpart.set(q, rng.bernoulli(0.5));
        for (size_t q = g.n_B(); q < g.n(); ++q) commuting.zpart.set(q, rng.bernoulli(0.5));
        PauliError shifted = e1;
        shifted ^= commuting;
        CHECK(g.deviation_B(shifted) == g.deviation_B(e1));

        PauliError commuting_w(g.n());
        for (size_t q = 0; q < g.n_B(); ++q) commuting_w.zpart.set(q, rng.bernoulli(0.5));
        for (size_t q = g.n_B(); q < g.n(); ++q) commuting_w.xpart.set(q, rng.bernoulli(0.5));
        PauliError shifted_w = e1;
        shifted_w ^= commuting_w;
        CHECK(g.deviation_W(shifted_w) == g.deviation_W(e1));
    }
}

TEST_CASE("sampled records always satisfy the stabilizer constraint") {
    Rng rng(31337);
    for (int rep = 0; rep < 10; ++rep) {
        GraphState g = random_graph(rng, 2 + rng.below(12), 2 + rng.below(12));
        PauliError e = random_error(rng, g.n());
        const BitVec dev_b = g.deviation_B(e);
        const BitVec dev_w = g.deviation_W(e);
        for (int s = 0; s < 20; ++s) {
            auto rec_b = g.sample_test_outcomes(e, TestKind::T_B, rng);
            CHECK(g.deviation_from_record(rec_b) == dev_b);
            auto rec_w = g.sample_test_outcomes(e, TestKind::T_W, rng);
            CHECK(g.deviation_from_record(rec_w) == dev_w);
        }
    }
}

TEST_CASE("fixed seed gives a reproducible record with X_B = Z_W on the edge graph") {
    GraphState g = two_qubit_graph();
    PauliError zero(2);
    Rng rng_a(7, 3, 1, Rng::kTestOutcome);
    Rng rng_b(7, 3, 1, Rng::kTestOutcome);
    auto rec1 = g.sample_test_outcomes(zero, TestKind::T_B, rng_a);
    auto rec2 = g.sample_test_outcomes(zero, TestKind::T_B, rng_b);
    CHECK(rec1.outcome == rec2.outcome);
    // A = [1] forces X_B = Z_W for the zero error.
    CHECK(rec1.outcome.get(0) == rec1.outcome.get(1));
    CHECK(rec1.basis[0] == Basis::X);
    CHECK(rec1.basis[1] == Basis::Z);
}

TEST_CASE("Z-on-black error shows up in every sampled T_B record") {
    GraphState g = two_qubit_graph();
    PauliError e = make_error(2, {}, {0});
    Rng rng(99);
    for (int s = 0; s < 50; ++s) {
        auto rec = g.sample_test_outcomes(e, TestKind::T_B, rng);
        CHECK(rec.outcome.get(0) != rec.outcome.get(1));  // X_B != Z_W
    }
}

TEST_CASE("stabilizer identity check and text round-trip") {
    GraphState g = two_qubit_graph();
    CHECK(g.check_stabilizer_identities());

    // Wrong A shape must be rejected.
    BinaryMatrix bad(2, 1);  // n_W+1 rows
    bad.set(0, 0, true);
    CHECK_FALSE(GraphState::check_parts(1, 1, {{0, 0}}, bad, bad.transposed()));

    Rng rng(555);
    GraphState big = random_graph(rng, 9, 7);
    std::istringstream in(big.to_text());
    GraphState back = GraphState::from_text(in);
    CHECK(back.n_B() == big.n_B());
    CHECK(back.n_W() == big.n_W());
    CHECK(back.edges() == big.edges());
    CHECK(back.check_stabilizer_identities());
}
