#include "doctest.h"

#include <set>

#include "veritop/common.hpp"
#include "veritop/lattice/lattice.hpp"
#include "veritop/rng.hpp"

using namespace veritop;
using namespace veritop::lattice;

namespace {

// Independent BFS oracle over an explicit adjacency, ignoring all the
// sublattice machinery except raw coordinates.
int bfs_oracle(const CubicSublattice& sub, VertexId from, VertexId to) {
    std::vector<int> dist(sub.vertex_count(), -1);
    std::vector<VertexId> q{from};
    dist[from] = 0;
    size_t head = 0;
    while (head < q.size()) {
        VertexId u = q[head++];
        if (u == to) return dist[u];
        for (EdgeId e : sub.incident_edges(u)) {
            if (sub.edge_role(e) != QubitRole::Vacuum) continue;
            VertexId w = sub.other_endpoint(e, u);
            if (w < 0 || sub.vertex_absorbing(w) || dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            q.push_back(w);
        }
    }
    return dist[to];
}

f2::BitVec face_cycle(const ClusterLattice& lat, const std::vector<EdgeId>& dual_edges) {
    f2::BitVec chain(lat.n_B());
    for (EdgeId w : dual_edges) {
        for (EdgeId b : lat.face_boundary(w)) {
            chain.flip(static_cast<size_t>(b));
        }
    }
    return chain;
}

const Membrane* find_membrane(const CubicSublattice& sub, const std::string& name) {
    for (const auto& m : sub.membranes()) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("empty periodic lattice has the textbook counts") {
    ClusterLattice lat = ClusterLattice::build(make_empty_vacuum_spec(2));
    CHECK(lat.n_B() == 3 * 8);
    CHECK(lat.n_W() == 3 * 8);
    CHECK(lat.n() == 6 * 8);
    for (size_t q = 0; q < lat.n(); ++q) {
        CHECK(lat.qubit_role(q) == QubitRole::Vacuum);
    }
    // Every primal vertex touches exactly 6 primal edges.
    for (VertexId v = 0; v < static_cast<VertexId>(lat.primal().vertex_count()); ++v) {
        CHECK(lat.primal().incident_edges(v).size() == 6);
    }
    f2::GraphState g = lat.to_graph_state();
    CHECK(g.check_stabilizer_identities());
    CHECK(g.edges().size() == 4 * lat.n_W());
}

TEST_CASE("invalid specs are rejected") {
    LatticeSpec close_tubes;
    close_tubes.cells = {12, 8, 8};
    close_tubes.d = 4;
    close_tubes.tubes.push_back({SublatticeKind::Primal, Axis::Z, 2, 2, 0});
    close_tubes.tubes.push_back({SublatticeKind::Primal, Axis::Z, 6, 2, 0});  // gap d-1
    CHECK_THROWS_AS(ClusterLattice::build(close_tubes), contract_error);

    LatticeSpec overlap = close_tubes;
    overlap.tubes[1].cu = 2;
    CHECK_THROWS_AS(ClusterLattice::build(overlap), contract_error);

    LatticeSpec small;
    small.cells = {2, 2, 2};
    small.d = 3;  // periodic extent below d
    CHECK_THROWS_AS(ClusterLattice::build(small), contract_error);
}

TEST_CASE("fig2-pair exposes wrap and connect membranes and a singular site") {
    ClusterLattice lat = ClusterLattice::build(make_fig2_pair_spec(3, 0, 1));
    const CubicSublattice& pl = lat.primal();
    REQUIRE(find_membrane(pl, "wrap-wall") != nullptr);
    REQUIRE(find_membrane(pl, "connect-shell") != nullptr);
    REQUIRE(lat.singular_sites().size() == 1);
    const SingularSite& site = lat.singular_sites()[0];
    CHECK(site.membrane_primal.weight() == 3);  // straight chain of length d
    CHECK(site.membrane_dual.weight() == 4);    // the four adjacent faces
    CHECK(pl.edge_role(site.primal_edge) == QubitRole::Singular);
    CHECK(site.region_primal.get(static_cast<size_t>(site.primal_edge)));

    // Defect roles: tube interior edges are defect, their surfaces vacuum.
    const EdgeId tube_interior = pl.edge_at({2, 2, 0}, Axis::Z);
    CHECK(pl.edge_role(tube_interior) == QubitRole::Defect);
    const EdgeId surface = pl.edge_at({1, 2, 0}, Axis::X);
    CHECK(pl.edge_role(surface) == QubitRole::Vacuum);

    f2::GraphState g = lat.to_graph_state();
    CHECK(g.check_stabilizer_identities());
}

TEST_CASE("geodesic distances match the BFS oracle") {
    ClusterLattice empty = ClusterLattice::build(make_empty_vacuum_spec(3));
    const CubicSublattice& pl = empty.primal();
    // Adjacent vertices.
    CHECK(pl.geodesic_distance(pl.vertex_id({0, 0, 0}), pl.vertex_id({1, 0, 0})) == 1);
    // Opposite corner of the 3-torus: wrapped Manhattan distance.
    CHECK(pl.geodesic_distance(pl.vertex_id({0, 0, 0}), pl.vertex_id({2, 2, 2})) == 3);

    // A defect tube forces a detour.
    ClusterLattice fig2 = ClusterLattice::build(make_fig2_pair_spec(3, 0, 1));
    const CubicSublattice& fpl = fig2.primal();
    const VertexId left = fpl.vertex_id({1, 2, 0});
    const VertexId right = fpl.vertex_id({4, 2, 0});
    const int dist = fpl.geodesic_distance(left, right);
    CHECK(dist == bfs_oracle(fpl, left, right));
    CHECK(dist > 3);  // Manhattan distance is 3, tube blocks the straight path

    // Metric properties on random vacuum triples.
    Rng rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        VertexId vs[3];
        for (auto& v : vs) {
            do {
                v = static_cast<VertexId>(rng.below(fpl.vertex_count()));
            } while (fpl.vertex_absorbing(v));
        }
        const int d01 = fpl.geodesic_distance(vs[0], vs[1]);
        const int d10 = fpl.geodesic_distance(vs[1], vs[0]);
        const int d12 = fpl.geodesic_distance(vs[1], vs[2]);
        const int d02 = fpl.geodesic_distance(vs[0], vs[2]);
        CHECK(d01 == d10);
        CHECK(d02 <= d01 + d12);
        CHECK(d01 == bfs_oracle(fpl, vs[0], vs[1]));
    }
}

TEST_CASE("boundary operator vanishes on cycles") {
    ClusterLattice lat = ClusterLattice::build(make_empty_vacuum_spec(3));
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<EdgeId> faces;
        for (int i = 0; i < 5; ++i) {
            faces.push_back(static_cast<EdgeId>(rng.below(lat.n_W())));
        }
        const f2::BitVec cycle = face_cycle(lat, faces);
        CHECK(lat.primal().boundary(cycle).is_zero());
    }
}

TEST_CASE("membrane parities classify the canonical chains") {
    ClusterLattice lat = ClusterLattice::build(make_fig2_pair_spec(3, 0, 1));
    const CubicSublattice& pl = lat.primal();
    const size_t n_mem = pl.membranes().size();

    // Empty chain: all parities zero.
    f2::BitVec empty_chain(lat.n_B());
    for (uint8_t par : pl.membrane_parities(empty_chain)) CHECK(par == 0);

    // Ring encircling tube 1 (perimeter of the box [1,4]x[1,4] at z = 0).
    f2::BitVec ring(lat.n_B());
    for (int x : {1, 2, 3}) {
        ring.set(static_cast<size_t>(pl.edge_at({x, 1, 0}, Axis::X)), true);
        ring.set(static_cast<size_t>(pl.edge_at({x, 4, 0}, Axis::X)), true);
    }
    for (int y : {1, 2, 3}) {
        ring.set(static_cast<size_t>(pl.edge_at({1, y, 0}, Axis::Y)), true);
        ring.set(static_cast<size_t>(pl.edge_at({4, y, 0}, Axis::Y)), true);
    }
    CHECK(ring.weight() == 12);
    CHECK(pl.boundary(ring).is_zero());
    auto ring_par = pl.membrane_parities(ring);
    const Membrane* wall = find_membrane(pl, "wrap-wall");
    const Membrane* shell = find_membrane(pl, "connect-shell");
    REQUIRE((wall && shell));
    size_t wall_idx = 0, shell_idx = 0;
    for (size_t i = 0; i < n_mem; ++i) {
        if (&pl.membranes()[i] == wall) wall_idx = i;
        if (&pl.membranes()[i] == shell) shell_idx = i;
    }
    CHECK(ring_par[wall_idx] == 1);
    CHECK(ring_par[shell_idx] == 0);

    // Straight chain connecting the two tubes (invisible endpoints).
    f2::BitVec connect(lat.n_B());
    for (int x : {3, 4, 5}) {
        connect.set(static_cast<size_t>(pl.edge_at({x, 2, 0}, Axis::X)), true);
    }
    CHECK(pl.boundary(connect).is_zero());  // endpoints absorbed by the tubes
    auto conn_par = pl.membrane_parities(connect);
    CHECK(conn_par[shell_idx] == 1);

    // Torus wrap along z.
    f2::BitVec zwrap(lat.n_B());
    for (int z = 0; z < lat.spec().cells[2]; ++z) {
        zwrap.set(static_cast<size_t>(pl.edge_at({0, 0, z}, Axis::Z)), true);
    }
    auto wrap_par = pl.membrane_parities(zwrap);
    const Membrane* planez = find_membrane(pl, "plane-z");
    size_t planez_idx = 0;
    for (size_t i = 0; i < n_mem; ++i) {
        if (&pl.membranes()[i] == planez) planez_idx = i;
    }
    CHECK(wrap_par[planez_idx] == 1);
    CHECK(wrap_par[wall_idx] == 0);
    CHECK(wrap_par[shell_idx] == 0);
}

TEST_CASE("stabilizer-trivial cycles have parity 0 on every membrane") {
    ClusterLattice lat = ClusterLattice::build(make_fig2_pair_spec(3, 0, 1));
    const CubicSublattice& pl = lat.primal();
    Rng rng(99);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<EdgeId> faces;
        for (int i = 0; i < 1 + static_cast<int>(rng.below(8)); ++i) {
            const EdgeId w = static_cast<EdgeId>(rng.below(lat.n_W()));
            bool clean = true;
            for (EdgeId b : lat.face_boundary(w)) {
                if (pl.edge_role(b) == QubitRole::Defect) clean = false;
            }
            if (clean) faces.push_back(w);
        }
        const f2::BitVec cycle = face_cycle(lat, faces);
        for (uint8_t par : pl.membrane_parities(cycle)) {
            CHECK(par == 0);
        }
    }
}

TEST_CASE("open-boundary sublattices absorb at the outside") {
    LatticeSpec spec;
    spec.cells = {3, 3, 3};
    spec.d = 2;
    spec.boundary = Boundary::Open;
    ClusterLattice lat = ClusterLattice::build(spec);
    const CubicSublattice& pl = lat.primal();
    // Interior vertex of the 4x4x4 vertex grid.
    const VertexId center = pl.vertex_id({2, 2, 2});
    CHECK_FALSE(pl.vertex_absorbing(center));
    CHECK(pl.absorber_distance(center) == 1);  // one step to the outer layer
    // Dual lattice: boundary faces dangle into the outside.
    const CubicSublattice& dl = lat.dual();
    const VertexId cell = dl.vertex_id({1, 1, 1});
    CHECK(dl.absorber_distance(cell) == 2);  // two hops to a dangling face
    f2::GraphState g = lat.to_graph_state();
    CHECK(g.check_stabilizer_identities());
}
