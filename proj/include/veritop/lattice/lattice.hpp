#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veritop/f2/bitvec.hpp"
#include "veritop/f2/graph_state.hpp"

namespace veritop::lattice {

enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };
enum class Boundary : uint8_t { Periodic, Open };
enum class QubitRole : uint8_t { Vacuum, Defect, Singular };
enum class SublatticeKind : uint8_t { Primal, Dual };

using VertexId = int32_t;  // -1 marks the virtual outside of an open lattice
using EdgeId = int32_t;

using Coord = std::array<int, 3>;

// Straight defect tube running the full length of `axis`, with a square
// cross-section of (1+2r) x (1+2r) unit cells centered on cell (cu, cv) in
// the two perpendicular directions (ordered by axis index).
struct DefectTube {
    SublatticeKind sublattice = SublatticeKind::Primal;
    Axis axis = Axis::Z;
    int cu = 0;
    int cv = 0;
    int radius = 0;  // cross-section radius in edges
};

// A singular qubit occupies one primal edge, identified by the edge's base
// vertex coordinate and direction.
struct SingularSiteSpec {
    Coord vertex{0, 0, 0};
    Axis axis = Axis::X;
};

struct LatticeSpec {
    std::array<int, 3> cells{2, 2, 2};  // unit-cell counts L_x, L_y, L_z
    int d = 2;                          // code distance
    Boundary boundary = Boundary::Periodic;
    std::vector<DefectTube> tubes;
    std::vector<SingularSiteSpec> singular_sites;
    std::string layout_name = "custom";
};

enum class MembraneKind : uint8_t { TorusPlane, Wrap, Connect };

// Detection surface stored as the set of edges crossing it. A residual
// chain realizes the corresponding logical failure iff its intersection
// parity with this edge set is odd.
struct Membrane {
    std::string name;
    MembraneKind kind;
    f2::BitVec edges;
};

// One cubic sublattice (primal: vertices of the cell grid; dual: cell
// centers). Qubits live on the edges. Vertices inside defect tubes (and on
// the outer layer of open lattices) absorb error chains and carry no
// syndrome.
class CubicSublattice {
  public:
    enum VertexFlag : uint8_t { kNormal = 0, kDefect = 1, kOuter = 2 };

    struct Edge {
        VertexId a;
        VertexId b;  // -1 for dangling open-boundary edges
        Coord base;
        Axis axis;
    };

    static CubicSublattice make_periodic(std::array<int, 3> cells, SublatticeKind kind);
    static CubicSublattice make_open(std::array<int, 3> cells, SublatticeKind kind);

    SublatticeKind kind() const { return kind_; }
    bool periodic() const { return periodic_; }
    const std::array<int, 3>& vertex_dims() const { return vdims_; }
    const std::array<int, 3>& cells() const { return cells_; }

    size_t vertex_count() const { return vflag_.size(); }
    size_t edge_count() const { return edges_.size(); }

    VertexId vertex_id(const Coord& c) const {
        return c[0] + vdims_[0] * (c[1] + vdims_[1] * c[2]);
    }
    Coord vertex_coord(VertexId v) const;
    // Wraps coordinates on periodic lattices; -1 when outside an open grid.
    VertexId vertex_at(Coord c) const;
    VertexId neighbor(VertexId v, Axis a, int dir) const;

    EdgeId edge_at(Coord base, Axis a) const;
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<EdgeId>& incident_edges(VertexId v) const { return incident_[v]; }
    // The endpoint of `e` other than `v` (-1 if dangling).
    VertexId other_endpoint(EdgeId e, VertexId v) const {
        const Edge& ed = edges_[e];
        return ed.a == v ? ed.b : ed.a;
    }

    uint8_t vertex_flag(VertexId v) const { return vflag_[v]; }
    bool vertex_absorbing(VertexId v) const { return v < 0 || vflag_[v] != kNormal; }
    bool vertex_has_syndrome(VertexId v) const { return v >= 0 && vflag_[v] == kNormal; }
    QubitRole edge_role(EdgeId e) const { return erole_[e]; }

    void mark_defect_vertex(VertexId v) { vflag_[v] = kDefect; }
    void set_edge_role(EdgeId e, QubitRole r) { erole_[e] = r; }
    // Defect edges are those with both endpoints absorbed by a defect.
    void derive_edge_roles_from_vertices();

    // True if the edge may carry correction paths (vacuum role, and not
    // between two absorbing vertices).
    bool edge_traversable(EdgeId e) const {
        return erole_[e] == QubitRole::Vacuum;
    }

    // Vertex boundary of an edge set over syndrome-bearing vertices.
    f2::BitVec boundary(const f2::BitVec& chain) const;

    // BFS geodesic through the vacuum region. Absorbing vertices terminate
    // paths but are never traversed. Returns -1 if unreachable.
    int geodesic_distance(VertexId from, VertexId to) const;
    // Distance to the nearest absorbing vertex (defect region or open
    // boundary); -1 when the lattice has none.
    int absorber_distance(VertexId from) const;

    struct PathSearch {
        std::vector<int> dist;       // -1 = unreached
        std::vector<EdgeId> parent;  // edge used to reach each vertex
        VertexId nearest_absorber = -1;
        int absorber_dist = -1;
        EdgeId absorber_entry = -1;  // last edge of the shortest absorber path
    };
    // Full BFS from one source; `targets` may prune early when everything
    // needed has been reached (pass empty to explore everything).
    PathSearch bfs(VertexId from, const std::vector<VertexId>& targets,
                   bool need_absorber) const;
    // Edge path from `from` to `to` extracted from a search rooted at `from`.
    std::vector<EdgeId> path_to(const PathSearch& search, VertexId from, VertexId to) const;

    const std::vector<Membrane>& membranes() const { return membranes_; }
    std::vector<Membrane>& membranes() { return membranes_; }

    // Parity of |chain ∩ membrane| for each membrane.
    std::vector<uint8_t> membrane_parities(const f2::BitVec& chain) const;

  private:
    SublatticeKind kind_ = SublatticeKind::Primal;
    bool periodic_ = true;
    std::array<int, 3> cells_{0, 0, 0};
    std::array<int, 3> vdims_{0, 0, 0};
    std::vector<uint8_t> vflag_;
    std::vector<QubitRole> erole_;
    std::vector<Edge> edges_;
    std::vector<int32_t> edge_lookup_;  // (vertex, axis) -> EdgeId
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<Membrane> membranes_;

    void finish_build();
};

// One singular site with its local detection data.
struct SingularSite {
    EdgeId primal_edge = -1;
    Coord vertex{0, 0, 0};
    Axis axis = Axis::X;
    // Minimal chain through the site terminating on the adjacent defect
    // surfaces; odd residual parity here marks the site faulty.
    f2::BitVec membrane_primal;
    // The four face qubits adjacent to the site in the graph state; an odd
    // dual residual parity acts as an X-type flip of the site.
    f2::BitVec membrane_dual;
    // Correction region: edges within graph distance ceil(d/2) of the site.
    f2::BitVec region_primal;
    f2::BitVec region_dual;
};

// The full two-colorable 3D cluster geometry: a primal and a dual cubic
// sublattice, qubit roles, logical membranes and singular-site data.
class ClusterLattice {
  public:
    static ClusterLattice build(const LatticeSpec& spec);

    const LatticeSpec& spec() const { return spec_; }
    const CubicSublattice& primal() const { return primal_; }
    const CubicSublattice& dual() const { return dual_; }
    const CubicSublattice& sub(SublatticeKind k) const {
        return k == SublatticeKind::Primal ? primal_ : dual_;
    }

    size_t n_B() const { return primal_.edge_count(); }
    size_t n_W() const { return dual_.edge_count(); }
    size_t n() const { return n_B() + n_W(); }

    QubitRole qubit_role(size_t global_q) const {
        return global_q < n_B() ? primal_.edge_role(static_cast<EdgeId>(global_q))
                                : dual_.edge_role(static_cast<EdgeId>(global_q - n_B()));
    }

    const std::vector<SingularSite>& singular_sites() const { return sites_; }

    // The induced two-colorable graph state (primal edges are the black
    // qubits, dual edges/faces the white ones).
    f2::GraphState to_graph_state() const;

    // The four primal edges on the boundary of the face crossed by a dual
    // edge.
    std::array<EdgeId, 4> face_boundary(EdgeId dual_edge) const;

  private:
    LatticeSpec spec_;
    CubicSublattice primal_;
    CubicSublattice dual_;
    std::vector<SingularSite> sites_;

    ClusterLattice(LatticeSpec spec, CubicSublattice primal, CubicSublattice dual)
        : spec_(std::move(spec)), primal_(std::move(primal)), dual_(std::move(dual)) {}
};

// Canonical layouts.
//
// "empty-vacuum": periodic d x d x d box, no defects, no singular sites;
// the torus wrap classes provide the distance-d failure modes.
LatticeSpec make_empty_vacuum_spec(int d);

// "fig2-pair": two parallel primal defect tubes along z at separation d,
// with 15^l * m singular sites on the line between them.
LatticeSpec make_fig2_pair_spec(int d, int rm_levels, int rm_measurements);

// Membrane parity of a chain (edge set) on one sublattice.
std::vector<uint8_t> membrane_parity(const CubicSublattice& sub, const f2::BitVec& chain);

}  // namespace veritop::lattice
