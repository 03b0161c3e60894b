#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace veritop::decode {

// A matching problem over flagged syndrome vertices: pairwise geodesic
// distances plus optional per-vertex costs for terminating a chain in a
// defect region or at an open boundary. -1 marks an unusable option.
struct MatchInstance {
    int n = 0;
    std::vector<std::vector<int>> dist;  // n x n, symmetric, dist[i][i] = 0
    std::vector<int> boundary;           // n entries, -1 = no absorber

    bool has_boundary() const {
        for (int b : boundary) {
            if (b >= 0) return true;
        }
        return false;
    }
};

struct MatchResult {
    std::vector<std::pair<int, int>> pairs;  // matched index pairs, i < j
    std::vector<int> to_boundary;            // vertices matched into an absorber
    int64_t total_weight = 0;
};

// Exhaustive subset dynamic programming; guarantees the global minimum.
// Capacity-limited (throws capacity_error above kExactCapacity vertices).
inline constexpr int kExactCapacity = 24;
MatchResult match_exact_subset_dp(const MatchInstance& inst);

// Blossom (primal-dual, O(n^3)) minimum-weight perfect matching; exact on
// the distance graph.
MatchResult match_blossom(const MatchInstance& inst);

// Cheapest-pair-first heuristic; documented fallback, not minimum.
MatchResult match_greedy(const MatchInstance& inst);

}  // namespace veritop::decode
