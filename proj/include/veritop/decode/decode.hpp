#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "veritop/decode/matching.hpp"
#include "veritop/f2/bitvec.hpp"
#include "veritop/lattice/lattice.hpp"

namespace veritop::decode {

enum class Backend : uint8_t { ExactSubsetDp, Blossom, Greedy };

const char* backend_name(Backend b);
Backend backend_from_name(const std::string& name);

// Per-vertex syndrome bits on one sublattice (nonzero only on
// syndrome-bearing vacuum vertices).
struct Syndrome {
    f2::BitVec flags;  // indexed by VertexId
};

// Estimated error location: an edge set on one sublattice.
struct Correction {
    f2::BitVec edges;
};

struct ResidualComponent {
    std::vector<lattice::EdgeId> edges;
};

struct ResidualAnalysis {
    f2::BitVec residual;  // (deviation minus defect bits) xor correction
    std::vector<ResidualComponent> components;
    std::vector<uint8_t> membrane_parity;  // aligned with sublattice membranes
    int max_component_length = 0;
    bool has_component_ge_d = false;
    bool homology_nontrivial = false;
};

enum class RejectReason : uint8_t { None, ComponentLength, Homology };

struct SsfResult {
    bool member = true;
    RejectReason reason = RejectReason::None;
    ResidualAnalysis analysis;
};

// Parity of the deviation bits on the vacuum edges around each syndrome
// vertex. Defect-edge bits are harmless and singular-site outcomes are not
// available to the surface-code check, so neither contributes.
Syndrome extract_syndrome(const lattice::CubicSublattice& sub, const f2::BitVec& deviation);

// Minimum-distance decoding: pair flagged vertices (or flag/absorber pairs)
// minimizing total vacuum geodesic length and return the union of the
// realizing paths. Postcondition (checked): the correction reproduces the
// syndrome exactly.
Correction decode_mwpm(const lattice::CubicSublattice& sub, const Syndrome& syn, Backend backend);

// Connected components of deviation xor correction, their lengths, and the
// membrane parities of the full residual.
ResidualAnalysis analyze_residual(const lattice::CubicSublattice& sub, int d,
                                  const f2::BitVec& deviation, const Correction& corr);

// Membership in the surface-code correctable set: no residual component of
// length >= d (with the homology parity as a cross-check).
SsfResult in_Ssf(const lattice::CubicSublattice& sub, int d, const f2::BitVec& deviation,
                 Backend backend);

std::string residual_to_json(const lattice::CubicSublattice& sub, const ResidualAnalysis& a);

// Global validity counters (postcondition audits across a whole run).
uint64_t validity_checks();
uint64_t validity_failures();
void reset_validity_counters();

}  // namespace veritop::decode
