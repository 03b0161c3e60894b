#include "veritop/lattice/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "veritop/common.hpp"

namespace veritop::lattice {

namespace {

int wrap(int x, int n) { return ((x % n) + n) % n; }

std::array<Axis, 2> perp_axes(Axis a) {
    switch (a) {
        case Axis::X: return {Axis::Y, Axis::Z};
        case Axis::Y: return {Axis::X, Axis::Z};
        default: return {Axis::X, Axis::Y};
    }
}

int axis_i(Axis a) { return static_cast<int>(a); }

}  // namespace

CubicSublattice CubicSublattice::make_periodic(std::array<int, 3> cells, SublatticeKind kind) {
    VT_REQUIRE(cells[0] >= 2 && cells[1] >= 2 && cells[2] >= 2,
               "lattice: need at least 2 cells per axis");
    CubicSublattice s;
    s.kind_ = kind;
    s.periodic_ = true;
    s.cells_ = cells;
    s.vdims_ = cells;
    const size_t nv = static_cast<size_t>(cells[0]) * cells[1] * cells[2];
    s.vflag_.assign(nv, kNormal);
    s.edge_lookup_.assign(3 * nv, -1);
    s.edges_.reserve(3 * nv);
    for (int z = 0; z < cells[2]; ++z) {
        for (int y = 0; y < cells[1]; ++y) {
            for (int x = 0; x < cells[0]; ++x) {
                const Coord c{x, y, z};
                const VertexId v = s.vertex_id(c);
                for (int a = 0; a < 3; ++a) {
                    Coord n = c;
                    n[a] = wrap(n[a] + 1, cells[a]);
                    const EdgeId e = static_cast<EdgeId>(s.edges_.size());
                    s.edges_.push_back({v, s.vertex_id(n), c, static_cast<Axis>(a)});
                    s.edge_lookup_[3 * v + a] = e;
                }
            }
        }
    }
    s.finish_build();
    return s;
}

CubicSublattice CubicSublattice::make_open(std::array<int, 3> cells, SublatticeKind kind) {
    VT_REQUIRE(cells[0] >= 2 && cells[1] >= 2 && cells[2] >= 2,
               "lattice: need at least 2 cells per axis");
    CubicSublattice s;
    s.kind_ = kind;
    s.periodic_ = false;
    s.cells_ = cells;
    if (kind == SublatticeKind::Primal) {
        // Vertex grid (L+1)^3; the outer layer absorbs chains.
        s.vdims_ = {cells[0] + 1, cells[1] + 1, cells[2] + 1};
        const size_t nv = static_cast<size_t>(s.vdims_[0]) * s.vdims_[1] * s.vdims_[2];
        s.vflag_.assign(nv, kNormal);
        s.edge_lookup_.assign(3 * nv, -1);
        for (int z = 0; z < s.vdims_[2]; ++z) {
            for (int y = 0; y < s.vdims_[1]; ++y) {
                for (int x = 0; x < s.vdims_[0]; ++x) {
                    const Coord c{x, y, z};
                    const VertexId v = s.vertex_id(c);
                    if (x == 0 || y == 0 || z == 0 || x == s.vdims_[0] - 1 ||
                        y == s.vdims_[1] - 1 || z == s.vdims_[2] - 1) {
                        s.vflag_[v] = kOuter;
                    }
                    for (int a = 0; a < 3; ++a) {
                        if (c[a] + 1 >= s.vdims_[a]) continue;
                        Coord n = c;
                        n[a] += 1;
                        const EdgeId e = static_cast<EdgeId>(s.edges_.size());
                        s.edges_.push_back({v, s.vertex_id(n), c, static_cast<Axis>(a)});
                        s.edge_lookup_[3 * v + a] = e;
                    }
                }
            }
        }
    } else {
        // Dual vertices are the cells; every face of the cell grid carries a
        // qubit, so boundary faces become dangling edges into the outside.
        s.vdims_ = cells;
        const size_t nv = static_cast<size_t>(cells[0]) * cells[1] * cells[2];
        s.vflag_.assign(nv, kNormal);
        s.edge_lookup_.assign(3 * nv, -1);
        for (int a = 0; a < 3; ++a) {
            const auto [p1, p2] = perp_axes(static_cast<Axis>(a));
            for (int t = 0; t <= cells[a]; ++t) {
                for (int j = 0; j < cells[axis_i(p2)]; ++j) {
                    for (int i = 0; i < cells[axis_i(p1)]; ++i) {
                        Coord lo{};
                        lo[a] = t - 1;
                        lo[axis_i(p1)] = i;
                        lo[axis_i(p2)] = j;
                        Coord hi = lo;
                        hi[a] = t;
                        const VertexId va = (t - 1 >= 0) ? s.vertex_id(lo) : -1;
                        const VertexId vb = (t < cells[a]) ? s.vertex_id(hi) : -1;
                        const EdgeId e = static_cast<EdgeId>(s.edges_.size());
                        s.edges_.push_back({va, vb, lo, static_cast<Axis>(a)});
                        if (va >= 0) s.edge_lookup_[3 * va + a] = e;
                    }
                }
            }
        }
    }
    s.finish_build();
    return s;
}

void CubicSublattice::finish_build() {
    erole_.assign(edges_.size(), QubitRole::Vacuum);
    incident_.assign(vflag_.size(), {});
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        if (edges_[e].a >= 0) incident_[edges_[e].a].push_back(e);
        if (edges_[e].b >= 0) incident_[edges_[e].b].push_back(e);
    }
    // Deterministic traversal order: +x, -x, +y, -y, +z, -z from each vertex.
    for (VertexId v = 0; v < static_cast<VertexId>(incident_.size()); ++v) {
        auto& list = incident_[v];
        std::sort(list.begin(), list.end(), [&](EdgeId l, EdgeId r) {
            const bool l_out = edges_[l].a == v;
            const bool r_out = edges_[r].a == v;
            if (edges_[l].axis != edges_[r].axis) return edges_[l].axis < edges_[r].axis;
            if (l_out != r_out) return l_out;
            return l < r;
        });
    }
}

Coord CubicSublattice::vertex_coord(VertexId v) const {
    const int x = v % vdims_[0];
    const int y = (v / vdims_[0]) % vdims_[1];
    const int z = v / (vdims_[0] * vdims_[1]);
    return {x, y, z};
}

VertexId CubicSublattice::vertex_at(Coord c) const {
    for (int a = 0; a < 3; ++a) {
        if (periodic_) {
            c[a] = wrap(c[a], vdims_[a]);
        } else if (c[a] < 0 || c[a] >= vdims_[a]) {
            return -1;
        }
    }
    return vertex_id(c);
}

VertexId CubicSublattice::neighbor(VertexId v, Axis a, int dir) const {
    Coord c = vertex_coord(v);
    c[axis_i(a)] += dir;
    return vertex_at(c);
}

EdgeId CubicSublattice::edge_at(Coord base, Axis a) const {
    const VertexId v = vertex_at(base);
    if (v < 0) return -1;
    return edge_lookup_[3 * v + axis_i(a)];
}

void CubicSublattice::derive_edge_roles_from_vertices() {
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        const Edge& ed = edges_[e];
        const bool a_def = ed.a >= 0 && vflag_[ed.a] == kDefect;
        const bool b_def = ed.b >= 0 && vflag_[ed.b] == kDefect;
        if (a_def && b_def) erole_[e] = QubitRole::Defect;
    }
}

f2::BitVec CubicSublattice::boundary(const f2::BitVec& chain) const {
    VT_REQUIRE(chain.size() == edges_.size(), "boundary: chain length mismatch");
    f2::BitVec out(vflag_.size());
    for (size_t e : chain.ones()) {
        const Edge& ed = edges_[e];
        if (vertex_has_syndrome(ed.a)) out.flip(static_cast<size_t>(ed.a));
        if (vertex_has_syndrome(ed.b)) out.flip(static_cast<size_t>(ed.b));
    }
    return out;
}

CubicSublattice::PathSearch CubicSublattice::bfs(VertexId from,
                                                 const std::vector<VertexId>& targets,
                                                 bool need_absorber) const {
    VT_REQUIRE(from >= 0 && !vertex_absorbing(from), "bfs: source must be a vacuum vertex");
    PathSearch out;
    out.dist.assign(vflag_.size(), -1);
    out.parent.assign(vflag_.size(), -1);
    out.dist[from] = 0;

    size_t targets_left = 0;
    std::vector<uint8_t> want(vflag_.size(), 0);
    for (VertexId t : targets) {
        if (t >= 0 && !want[t] && t != from) {
            want[t] = 1;
            ++targets_left;
        }
    }
    const bool bounded = !targets.empty() || need_absorber;

    std::vector<VertexId> queue{from};
    size_t head = 0;
    bool absorber_found = !need_absorber;
    while (head < queue.size()) {
        const VertexId u = queue[head++];
        if (bounded && targets_left == 0 && absorber_found) break;
        for (EdgeId e : incident_[u]) {
            if (!edge_traversable(e)) continue;
            const VertexId w = other_endpoint(e, u);
            if (vertex_absorbing(w)) {
                if (!absorber_found) {
                    out.nearest_absorber = w;  // may be -1 for dangling edges
                    out.absorber_dist = out.dist[u] + 1;
                    out.absorber_entry = e;
                    absorber_found = true;
                }
                continue;
            }
            if (out.dist[w] >= 0) continue;
            out.dist[w] = out.dist[u] + 1;
            out.parent[w] = e;
            if (want[w]) {
                want[w] = 0;
                --targets_left;
            }
            queue.push_back(w);
        }
    }
    return out;
}

std::vector<EdgeId> CubicSublattice::path_to(const PathSearch& search, VertexId from,
                                             VertexId to) const {
    VT_REQUIRE(to >= 0 && search.dist[to] >= 0, "path_to: target unreached");
    std::vector<EdgeId> path;
    VertexId cur = to;
    while (cur != from) {
        const EdgeId e = search.parent[cur];
        VT_ASSERT(e >= 0, "path_to: broken parent chain");
        path.push_back(e);
        cur = other_endpoint(e, cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

int CubicSublattice::geodesic_distance(VertexId from, VertexId to) const {
    VT_REQUIRE(to >= 0 && !vertex_absorbing(to), "geodesic: target must be a vacuum vertex");
    if (from == to) return 0;
    const PathSearch s = bfs(from, {to}, false);
    return s.dist[to];
}

int CubicSublattice::absorber_distance(VertexId from) const {
    const PathSearch s = bfs(from, {}, true);
    return s.absorber_dist;
}

std::vector<uint8_t> CubicSublattice::membrane_parities(const f2::BitVec& chain) const {
    std::vector<uint8_t> out;
    out.reserve(membranes_.size());
    for (const Membrane& m : membranes_) {
        out.push_back(chain.dot(m.edges) ? 1 : 0);
    }
    return out;
}

std::vector<uint8_t> membrane_parity(const CubicSublattice& sub, const f2::BitVec& chain) {
    return sub.membrane_parities(chain);
}

namespace {

struct TubeBox {
    // Inclusive vertex ranges per axis; the tube axis spans everything.
    std::array<int, 3> lo;
    std::array<int, 3> hi;
    SublatticeKind sub;
    Axis axis;
};

TubeBox tube_vertex_box(const DefectTube& t, const std::array<int, 3>& dims) {
    const auto [p1, p2] = perp_axes(t.axis);
    TubeBox box;
    box.sub = t.sublattice;
    box.axis = t.axis;
    box.lo = {0, 0, 0};
    box.hi = {dims[0] - 1, dims[1] - 1, dims[2] - 1};
    box.lo[axis_i(p1)] = t.cu - t.radius;
    box.hi[axis_i(p1)] = t.cu + 1 + t.radius;
    box.lo[axis_i(p2)] = t.cv - t.radius;
    box.hi[axis_i(p2)] = t.cv + 1 + t.radius;
    return box;
}

// Minimal edge-count gap between two inclusive intervals on one axis.
int interval_gap(int lo1, int hi1, int lo2, int hi2, int n, bool periodic) {
    int best = 1 << 29;
    for (int u = lo1; u <= hi1; ++u) {
        for (int v = lo2; v <= hi2; ++v) {
            int g = std::abs(u - v);
            if (periodic) g = std::min(g, n - g);
            best = std::min(best, g);
        }
    }
    return best;
}

int box_separation(const TubeBox& a, const TubeBox& b, const std::array<int, 3>& dims,
                   bool periodic) {
    int total = 0;
    for (int ax = 0; ax < 3; ++ax) {
        total += interval_gap(a.lo[ax], a.hi[ax], b.lo[ax], b.hi[ax], dims[ax], periodic);
    }
    return total;
}

// Edges within graph distance `radius` of the seed edges (edges are adjacent
// when they share a non-absorbing vertex).
f2::BitVec edge_ball(const CubicSublattice& sub, const std::vector<EdgeId>& seeds, int radius) {
    f2::BitVec ball(sub.edge_count());
    std::vector<int> dist(sub.edge_count(), -1);
    std::vector<EdgeId> queue;
    for (EdgeId e : seeds) {
        if (e >= 0 && dist[e] < 0) {
            dist[e] = 0;
            ball.set(static_cast<size_t>(e), true);
            queue.push_back(e);
        }
    }
    size_t head = 0;
    while (head < queue.size()) {
        const EdgeId e = queue[head++];
        if (dist[e] >= radius) continue;
        for (VertexId v : {sub.edge(e).a, sub.edge(e).b}) {
            if (v < 0 || sub.vertex_absorbing(v)) continue;
            for (EdgeId nx : sub.incident_edges(v)) {
                if (dist[nx] < 0) {
                    dist[nx] = dist[e] + 1;
                    ball.set(static_cast<size_t>(nx), true);
                    queue.push_back(nx);
                }
            }
        }
    }
    return ball;
}

void add_plane_membranes(CubicSublattice& sub) {
    static const char* names[3] = {"plane-x", "plane-y", "plane-z"};
    for (int a = 0; a < 3; ++a) {
        // Periodic: plane between levels 0 and 1 detects torus wraps.
        // Open: a mid-lattice plane detects boundary-to-boundary spans.
        const int level = sub.periodic() ? 0 : sub.cells()[a] / 2;
        f2::BitVec edges(sub.edge_count());
        for (EdgeId e = 0; e < static_cast<EdgeId>(sub.edge_count()); ++e) {
            const auto& ed = sub.edge(e);
            if (ed.axis == static_cast<Axis>(a) && ed.base[a] == level) {
                edges.set(static_cast<size_t>(e), true);
            }
        }
        sub.membranes().push_back({names[a], MembraneKind::TorusPlane, std::move(edges)});
    }
}

// Wall of v-axis edges between two parallel tubes (wrap-class detector) and
// a cut surface enclosing the first tube (connect-class detector).
void add_pair_membranes(CubicSublattice& sub, const TubeBox& t1, const TubeBox& t2) {
    // The boxes must differ along exactly one perpendicular axis.
    int diff_axis = -1;
    for (int a = 0; a < 3; ++a) {
        if (a == axis_i(t1.axis)) continue;
        if (t1.lo[a] != t2.lo[a] || t1.hi[a] != t2.hi[a]) {
            if (diff_axis != -1) return;  // not a clean parallel pair
            diff_axis = a;
        }
    }
    if (diff_axis < 0) return;
    const TubeBox& left = t1.lo[diff_axis] <= t2.lo[diff_axis] ? t1 : t2;
    const TubeBox& right = t1.lo[diff_axis] <= t2.lo[diff_axis] ? t2 : t1;
    int shared_axis = -1;
    for (int a = 0; a < 3; ++a) {
        if (a != axis_i(t1.axis) && a != diff_axis) shared_axis = a;
    }

    // Wall: edges along the shared perpendicular axis, spanning the gap
    // between the tubes and the tubes' full cross-section thickness. Its
    // surface terminates inside both defect regions.
    f2::BitVec wall(sub.edge_count());
    for (EdgeId e = 0; e < static_cast<EdgeId>(sub.edge_count()); ++e) {
        const auto& ed = sub.edge(e);
        if (axis_i(ed.axis) != shared_axis) continue;
        if (ed.base[diff_axis] < left.hi[diff_axis] + 1 ||
            ed.base[diff_axis] > right.lo[diff_axis] - 1) {
            continue;
        }
        if (ed.base[shared_axis] < t1.lo[shared_axis] ||
            ed.base[shared_axis] > t1.hi[shared_axis] - 1) {
            continue;
        }
        wall.set(static_cast<size_t>(e), true);
    }
    sub.membranes().push_back({"wrap-wall", MembraneKind::Wrap, std::move(wall)});

    // Shell: all edges with exactly one endpoint inside the expanded box
    // around the first tube. Cut surfaces are cocycles by construction.
    auto inside = [&](VertexId v) {
        if (v < 0) return false;
        const Coord c = sub.vertex_coord(v);
        for (int a = 0; a < 3; ++a) {
            if (a == axis_i(left.axis)) continue;
            if (c[a] < left.lo[a] - 1 || c[a] > left.hi[a] + 1) return false;
        }
        return true;
    };
    f2::BitVec shell(sub.edge_count());
    for (EdgeId e = 0; e < static_cast<EdgeId>(sub.edge_count()); ++e) {
        const auto& ed = sub.edge(e);
        if (inside(ed.a) != inside(ed.b)) shell.set(static_cast<size_t>(e), true);
    }
    sub.membranes().push_back({"connect-shell", MembraneKind::Connect, std::move(shell)});
}

}  // namespace

ClusterLattice ClusterLattice::build(const LatticeSpec& spec) {
    VT_REQUIRE(spec.d >= 2, "lattice spec: d must be at least 2");
    const bool periodic = spec.boundary == Boundary::Periodic;
    for (int a = 0; a < 3; ++a) {
        VT_REQUIRE(spec.cells[a] >= 2, "lattice spec: need at least 2 cells per axis");
        if (periodic) {
            VT_REQUIRE(spec.cells[a] >= spec.d,
                       "lattice spec: periodic extent below code distance");
        }
    }

    CubicSublattice primal = periodic
                                 ? CubicSublattice::make_periodic(spec.cells, SublatticeKind::Primal)
                                 : CubicSublattice::make_open(spec.cells, SublatticeKind::Primal);
    CubicSublattice dual = periodic
                               ? CubicSublattice::make_periodic(spec.cells, SublatticeKind::Dual)
                               : CubicSublattice::make_open(spec.cells, SublatticeKind::Dual);

    // Defect tubes: mark the vertex boxes absorbing on the owning sublattice.
    std::vector<TubeBox> boxes;
    for (const DefectTube& tube : spec.tubes) {
        CubicSublattice& sub = tube.sublattice == SublatticeKind::Primal ? primal : dual;
        TubeBox box = tube_vertex_box(tube, sub.vertex_dims());
        const auto [p1, p2] = perp_axes(tube.axis);
        for (Axis pa : {p1, p2}) {
            VT_REQUIRE(box.lo[axis_i(pa)] >= 0 &&
                           box.hi[axis_i(pa)] <= sub.vertex_dims()[axis_i(pa)] - 1,
                       "lattice spec: defect tube does not fit inside the volume");
        }
        boxes.push_back(box);
    }
    for (size_t i = 0; i < boxes.size(); ++i) {
        for (size_t j = i + 1; j < boxes.size(); ++j) {
            if (boxes[i].sub != boxes[j].sub) continue;
            const auto& dims =
                (boxes[i].sub == SublatticeKind::Primal ? primal : dual).vertex_dims();
            const int sep = box_separation(boxes[i], boxes[j], dims, periodic);
            VT_REQUIRE(sep > 0, "lattice spec: defect tubes overlap");
            VT_REQUIRE(sep >= spec.d, "lattice spec: defect tube separation below d");
        }
    }
    for (const TubeBox& box : boxes) {
        CubicSublattice& sub = box.sub == SublatticeKind::Primal ? primal : dual;
        Coord c;
        for (c[2] = box.lo[2]; c[2] <= box.hi[2]; ++c[2]) {
            for (c[1] = box.lo[1]; c[1] <= box.hi[1]; ++c[1]) {
                for (c[0] = box.lo[0]; c[0] <= box.hi[0]; ++c[0]) {
                    sub.mark_defect_vertex(sub.vertex_id(c));
                }
            }
        }
    }
    primal.derive_edge_roles_from_vertices();
    dual.derive_edge_roles_from_vertices();

    // Singular sites (primal edges measured in the XY basis).
    std::vector<EdgeId> site_edges;
    for (const SingularSiteSpec& site : spec.singular_sites) {
        const EdgeId e = primal.edge_at(site.vertex, site.axis);
        VT_REQUIRE(e >= 0, "lattice spec: singular site edge does not exist");
        VT_REQUIRE(primal.edge_role(e) == QubitRole::Vacuum,
                   "lattice spec: singular site must sit on a vacuum edge");
        VT_REQUIRE(!primal.vertex_absorbing(primal.edge(e).a) &&
                       !primal.vertex_absorbing(primal.edge(e).b),
                   "lattice spec: singular site touches a defect region");
        primal.set_edge_role(e, QubitRole::Singular);
        site_edges.push_back(e);
    }

    // Membranes.
    add_plane_membranes(primal);
    add_plane_membranes(dual);
    if (boxes.size() == 2 && boxes[0].sub == boxes[1].sub && boxes[0].axis == boxes[1].axis) {
        CubicSublattice& sub = boxes[0].sub == SublatticeKind::Primal ? primal : dual;
        add_pair_membranes(sub, boxes[0], boxes[1]);
    }
    // Singular qubits are outside the surface-code frame; their logical
    // content is scored by the per-site local membranes instead.
    for (Membrane& m : primal.membranes()) {
        for (EdgeId e : site_edges) m.edges.set(static_cast<size_t>(e), false);
    }

    ClusterLattice lat(spec, std::move(primal), std::move(dual));

    // Singular-site local data.
    const int radius = (spec.d + 1) / 2;
    for (size_t i = 0; i < site_edges.size(); ++i) {
        SingularSite s;
        s.primal_edge = site_edges[i];
        s.vertex = spec.singular_sites[i].vertex;
        s.axis = spec.singular_sites[i].axis;

        // Straight chain through the site along its own axis, extended until
        // it enters the adjacent defect regions.
        const CubicSublattice& pl = lat.primal();
        f2::BitVec chain(pl.edge_count());
        chain.set(static_cast<size_t>(s.primal_edge), true);
        const auto& ed = pl.edge(s.primal_edge);
        for (int dir : {+1, -1}) {
            VertexId cur = dir > 0 ? ed.b : ed.a;
            Coord cc = pl.vertex_coord(cur);
            int steps = 0;
            const int cap = pl.vertex_dims()[axis_i(s.axis)];
            while (cur >= 0 && !pl.vertex_absorbing(cur) && steps++ < cap) {
                Coord base = cc;
                if (dir < 0) base[axis_i(s.axis)] -= 1;
                const EdgeId next = pl.edge_at(base, s.axis);
                if (next < 0) break;  // open boundary reached
                chain.set(static_cast<size_t>(next), true);
                cur = pl.other_endpoint(next, cur);
                cc = pl.vertex_coord(cur);
            }
            VT_REQUIRE(cur < 0 || pl.vertex_absorbing(cur),
                       "lattice spec: singular site has no defect surface along its axis");
        }
        s.membrane_primal = std::move(chain);

        // The four faces adjacent to the site in the graph state.
        s.membrane_dual = f2::BitVec(lat.dual().edge_count());
        const Coord v = ed.base;
        for (Axis n : perp_axes(s.axis)) {
            for (int off : {0, -1}) {
                Coord corner = v;
                int m = -1;  // the axis spanned with s.axis
                for (int a = 0; a < 3; ++a) {
                    if (a != axis_i(s.axis) && a != axis_i(n)) m = a;
                }
                corner[m] += off;
                // Face (corner, normal n) crosses the dual edge based at the
                // cell one step below along n.
                Coord cell = corner;
                cell[axis_i(n)] -= 1;
                const EdgeId de = lat.dual().edge_at(cell, n);
                VT_REQUIRE(de >= 0, "singular site: missing adjacent face qubit");
                s.membrane_dual.set(static_cast<size_t>(de), true);
            }
        }

        s.region_primal = edge_ball(lat.primal(), {s.primal_edge}, radius);
        std::vector<EdgeId> dual_seeds;
        for (size_t de : s.membrane_dual.ones()) dual_seeds.push_back(static_cast<EdgeId>(de));
        s.region_dual = edge_ball(lat.dual(), dual_seeds, radius);
        lat.sites_.push_back(std::move(s));
    }

    return lat;
}

std::array<EdgeId, 4> ClusterLattice::face_boundary(EdgeId dual_edge) const {
    const auto& ed = dual_.edge(dual_edge);
    const Axis n = ed.axis;
    // Face corner in primal-vertex coordinates: one step up along the normal
    // from the lower cell.
    Coord corner = ed.base;
    corner[axis_i(n)] += 1;
    const auto [s1, s2] = perp_axes(n);
    Coord c2 = corner;
    c2[axis_i(s1)] += 1;
    Coord c3 = corner;
    c3[axis_i(s2)] += 1;
    std::array<EdgeId, 4> out{
        primal_.edge_at(corner, s1),
        primal_.edge_at(corner, s2),
        primal_.edge_at(c2, s2),
        primal_.edge_at(c3, s1),
    };
    for (EdgeId e : out) {
        VT_ASSERT(e >= 0, "face_boundary: missing primal edge");
    }
    return out;
}

f2::GraphState ClusterLattice::to_graph_state() const {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(4 * n_W());
    for (EdgeId w = 0; w < static_cast<EdgeId>(n_W()); ++w) {
        for (EdgeId b : face_boundary(w)) {
            edges.emplace_back(static_cast<uint32_t>(b), static_cast<uint32_t>(w));
        }
    }
    return f2::GraphState(n_B(), n_W(), std::move(edges));
}

LatticeSpec make_empty_vacuum_spec(int d) {
    VT_REQUIRE(d >= 2, "empty-vacuum: d must be at least 2");
    LatticeSpec spec;
    spec.cells = {d, d, d};
    spec.d = d;
    spec.boundary = Boundary::Periodic;
    spec.layout_name = "empty-vacuum";
    return spec;
}

LatticeSpec make_fig2_pair_spec(int d, int rm_levels, int rm_measurements) {
    VT_REQUIRE(d >= 3, "fig2-pair: d must be at least 3");
    VT_REQUIRE(d <= 12, "fig2-pair: single-cell tubes support d up to 12 (ring length)");
    VT_REQUIRE(rm_levels >= 0 && rm_levels <= 2, "fig2-pair: rm levels supported in {0,1,2}");
    VT_REQUIRE(rm_measurements >= 0, "fig2-pair: negative measurement count");
    int sites = rm_measurements;
    for (int i = 0; i < rm_levels; ++i) sites *= 15;

    LatticeSpec spec;
    spec.d = d;
    spec.boundary = Boundary::Periodic;
    spec.layout_name = "fig2-pair";
    const int lx = 2 * d + 2;
    const int ly = std::max(6, d);
    const int spacing = d + 1;
    const int lz = std::max({4, d, sites * spacing});
    spec.cells = {lx, ly, lz};

    // Two parallel primal tubes along z separated by d along x.
    spec.tubes.push_back({SublatticeKind::Primal, Axis::Z, 2, 2, 0});
    spec.tubes.push_back({SublatticeKind::Primal, Axis::Z, 2 + d + 1, 2, 0});

    // Singular sites on the straight line between the tubes, spread in z.
    const int xm = 3 + (d - 1) / 2;
    for (int i = 0; i < sites; ++i) {
        const int z = (i * spacing + spacing / 2) % lz;
        spec.singular_sites.push_back({{xm, 2, z}, Axis::X});
    }
    return spec;
}

}  // namespace veritop::lattice
