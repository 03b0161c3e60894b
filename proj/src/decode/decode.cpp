#include "veritop/decode/decode.hpp"

#include <algorithm>
#include <sstream>

#include "veritop/common.hpp"

namespace veritop::decode {

using lattice::CubicSublattice;
using lattice::EdgeId;
using lattice::QubitRole;
using lattice::VertexId;

namespace {
std::atomic<uint64_t> g_validity_checks{0};
std::atomic<uint64_t> g_validity_failures{0};
}  // namespace

uint64_t validity_checks() { return g_validity_checks.load(); }
uint64_t validity_failures() { return g_validity_failures.load(); }
void reset_validity_counters() {
    g_validity_checks = 0;
    g_validity_failures = 0;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::ExactSubsetDp: return "exact";
        case Backend::Blossom: return "blossom";
        default: return "greedy";
    }
}

Backend backend_from_name(const std::string& name) {
    if (name == "exact") return Backend::ExactSubsetDp;
    if (name == "blossom") return Backend::Blossom;
    if (name == "greedy") return Backend::Greedy;
    throw config_error("unknown decoder backend: " + name);
}

Syndrome extract_syndrome(const CubicSublattice& sub, const f2::BitVec& deviation) {
    VT_REQUIRE(deviation.size() == sub.edge_count(),
               "extract_syndrome: deviation length mismatch");
    Syndrome syn;
    syn.flags = f2::BitVec(sub.vertex_count());
    for (size_t e : deviation.ones()) {
        if (sub.edge_role(static_cast<EdgeId>(e)) != QubitRole::Vacuum) continue;
        const auto& ed = sub.edge(static_cast<EdgeId>(e));
        if (sub.vertex_has_syndrome(ed.a)) syn.flags.flip(static_cast<size_t>(ed.a));
        if (sub.vertex_has_syndrome(ed.b)) syn.flags.flip(static_cast<size_t>(ed.b));
    }
    return syn;
}

Correction decode_mwpm(const CubicSublattice& sub, const Syndrome& syn, Backend backend) {
    VT_REQUIRE(syn.flags.size() == sub.vertex_count(), "decode: syndrome length mismatch");
    Correction corr;
    corr.edges = f2::BitVec(sub.edge_count());
    const auto flag_idx = syn.flags.ones();
    if (!flag_idx.empty()) {
        std::vector<VertexId> flags;
        flags.reserve(flag_idx.size());
        for (size_t v : flag_idx) flags.push_back(static_cast<VertexId>(v));
        const int n = static_cast<int>(flags.size());

        // One vacuum-region BFS per flag gives pair distances, absorber
        // distances, and the parent trees used for path reconstruction.
        std::vector<CubicSublattice::PathSearch> searches;
        searches.reserve(flags.size());
        for (VertexId v : flags) {
            searches.push_back(sub.bfs(v, flags, true));
        }

        MatchInstance inst;
        inst.n = n;
        inst.dist.assign(n, std::vector<int>(n, 0));
        inst.boundary.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            inst.boundary[i] = searches[i].absorber_dist;
            for (int j = i + 1; j < n; ++j) {
                inst.dist[i][j] = inst.dist[j][i] = searches[i].dist[flags[j]];
            }
        }

        MatchResult match;
        switch (backend) {
            case Backend::ExactSubsetDp: match = match_exact_subset_dp(inst); break;
            case Backend::Blossom: match = match_blossom(inst); break;
            case Backend::Greedy: match = match_greedy(inst); break;
        }

        for (auto [i, j] : match.pairs) {
            for (EdgeId e : sub.path_to(searches[i], flags[i], flags[j])) {
                corr.edges.flip(static_cast<size_t>(e));
            }
        }
        for (int i : match.to_boundary) {
            const auto& s = searches[i];
            VT_ASSERT(s.absorber_entry >= 0, "decode: absorber match without a path");
            corr.edges.flip(static_cast<size_t>(s.absorber_entry));
            const auto& entry = sub.edge(s.absorber_entry);
            // The non-absorbing endpoint of the entry edge roots the rest of
            // the path back to the flag.
            const VertexId inner = sub.vertex_absorbing(entry.a) ? entry.b : entry.a;
            for (EdgeId e : sub.path_to(s, flags[i], inner)) {
                corr.edges.flip(static_cast<size_t>(e));
            }
        }
    }

    // Postcondition: the correction explains the syndrome bit for bit.
    g_validity_checks.fetch_add(1, std::memory_order_relaxed);
    const Syndrome check = extract_syndrome(sub, corr.edges);
    if (check.flags != syn.flags) {
        g_validity_failures.fetch_add(1, std::memory_order_relaxed);
        VT_ASSERT(false, "decode: correction does not reproduce the syndrome");
    }
    return corr;
}

ResidualAnalysis analyze_residual(const CubicSublattice& sub, int d, const f2::BitVec& deviation,
                                  const Correction& corr) {
    VT_REQUIRE(deviation.size() == sub.edge_count(), "analyze_residual: deviation mismatch");
    ResidualAnalysis out;
    out.residual = deviation;
    // Errors on defect-region qubits are measured in Z during computation
    // and never propagate; drop them before comparing with the correction.
    for (size_t e : deviation.ones()) {
        if (sub.edge_role(static_cast<EdgeId>(e)) == QubitRole::Defect) {
            out.residual.set(e, false);
        }
    }
    out.residual ^= corr.edges;

    // The residual must be syndrome-free: anything else means the decode
    // step was skipped or mismatched.
    VT_ASSERT(extract_syndrome(sub, out.residual).flags.is_zero(),
              "analyze_residual: residual carries syndrome");

    // Connected components over shared vacuum vertices. Chains broken by a
    // defect region count as separate components.
    const auto edges = out.residual.ones();
    std::vector<int32_t> comp_of(edges.size(), -1);
    // Map edge id -> position for adjacency walks.
    std::vector<int32_t> pos_of_edge(sub.edge_count(), -1);
    for (size_t k = 0; k < edges.size(); ++k) {
        pos_of_edge[edges[k]] = static_cast<int32_t>(k);
    }
    int n_comp = 0;
    for (size_t k = 0; k < edges.size(); ++k) {
        if (comp_of[k] >= 0) continue;
        const int32_t c = n_comp++;
        std::vector<size_t> stack{k};
        comp_of[k] = c;
        while (!stack.empty()) {
            const size_t cur = stack.back();
            stack.pop_back();
            const auto& ed = sub.edge(static_cast<EdgeId>(edges[cur]));
            for (VertexId v : {ed.a, ed.b}) {
                if (v < 0 || sub.vertex_absorbing(v)) continue;
                for (EdgeId nx : sub.incident_edges(v)) {
                    const int32_t p = pos_of_edge[nx];
                    if (p >= 0 && comp_of[p] < 0) {
                        comp_of[p] = c;
                        stack.push_back(static_cast<size_t>(p));
                    }
                }
            }
        }
    }
    out.components.resize(n_comp);
    for (size_t k = 0; k < edges.size(); ++k) {
        out.components[comp_of[k]].edges.push_back(static_cast<EdgeId>(edges[k]));
    }
    for (const auto& c : out.components) {
        out.max_component_length =
            std::max(out.max_component_length, static_cast<int>(c.edges.size()));
    }
    out.has_component_ge_d = out.max_component_length >= d;
    out.membrane_parity = sub.membrane_parities(out.residual);
    for (uint8_t p : out.membrane_parity) {
        if (p) out.homology_nontrivial = true;
    }
    return out;
}

SsfResult in_Ssf(const CubicSublattice& sub, int d, const f2::BitVec& deviation,
                 Backend backend) {
    const Syndrome syn = extract_syndrome(sub, deviation);
    const Correction corr = decode_mwpm(sub, syn, backend);
    SsfResult out;
    out.analysis = analyze_residual(sub, d, deviation, corr);
    if (out.analysis.has_component_ge_d) {
        out.member = false;
        out.reason = RejectReason::ComponentLength;
    } else if (out.analysis.homology_nontrivial) {
        // Cross-check: a short residual flipping a membrane; conservative
        // rejection (never observed on the canonical layouts).
        out.member = false;
        out.reason = RejectReason::Homology;
    }
    return out;
}

std::string residual_to_json(const CubicSublattice& sub, const ResidualAnalysis& a) {
    std::ostringstream out;
    out << "{\"components\":[";
    for (size_t i = 0; i < a.components.size(); ++i) {
        if (i) out << ',';
        out << a.components[i].edges.size();
    }
    out << "],\"membrane_parity\":[";
    for (size_t i = 0; i < a.membrane_parity.size(); ++i) {
        if (i) out << ',';
        out << static_cast<int>(a.membrane_parity[i]);
    }
    out << "],\"membranes\":[";
    for (size_t i = 0; i < sub.membranes().size(); ++i) {
        if (i) out << ',';
        out << '"' << sub.membranes()[i].name << '"';
    }
    out << "],\"max_component_length\":" << a.max_component_length
        << ",\"has_component_ge_d\":" << (a.has_component_ge_d ? "true" : "false")
        << ",\"homology_nontrivial\":" << (a.homology_nontrivial ? "true" : "false") << '}';
    return out.str();
}

}  // namespace veritop::decode
