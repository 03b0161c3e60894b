#include "veritop/decode/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "veritop/common.hpp"

namespace veritop::decode {

namespace {

void check_feasible_parity(const MatchInstance& inst) {
    if (inst.n % 2 != 0) {
        VT_REQUIRE(inst.has_boundary(),
                   "matching: odd flagged-vertex count on a closed lattice");
    }
}

}  // namespace

MatchResult match_exact_subset_dp(const MatchInstance& inst) {
    check_feasible_parity(inst);
    MatchResult out;
    const int n = inst.n;
    if (n == 0) return out;
    if (n > kExactCapacity) {
        throw capacity_error("exact matcher: more than 24 flagged vertices");
    }
    constexpr int32_t kInf = std::numeric_limits<int32_t>::max() / 4;
    std::vector<int32_t> dp(size_t{1} << n, kInf);
    dp[0] = 0;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        const int i = __builtin_ctz(mask);
        int32_t best = kInf;
        if (inst.boundary[i] >= 0) {
            const int32_t c = dp[mask ^ (1u << i)];
            if (c < kInf) best = std::min(best, c + inst.boundary[i]);
        }
        for (int j = i + 1; j < n; ++j) {
            if (!(mask & (1u << j)) || inst.dist[i][j] < 0) continue;
            const int32_t c = dp[mask ^ (1u << i) ^ (1u << j)];
            if (c < kInf && c + inst.dist[i][j] < best) best = c + inst.dist[i][j];
        }
        dp[mask] = best;
    }
    const uint32_t full = (uint32_t{1} << n) - 1;
    VT_REQUIRE(dp[full] < kInf, "matching: instance infeasible (disconnected flags)");
    out.total_weight = dp[full];

    // Reconstruct; on ties prefer pairing with the smallest partner and use
    // the boundary last, which keeps transcripts deterministic.
    uint32_t mask = full;
    while (mask != 0) {
        const int i = __builtin_ctz(mask);
        int pick = -1;  // -1 = boundary
        int64_t best = kInf;
        for (int j = i + 1; j < n; ++j) {
            if (!(mask & (1u << j)) || inst.dist[i][j] < 0) continue;
            const int64_t c = dp[mask ^ (1u << i) ^ (1u << j)] + inst.dist[i][j];
            if (c < best) {
                best = c;
                pick = j;
            }
        }
        if (inst.boundary[i] >= 0) {
            const int64_t c = dp[mask ^ (1u << i)] + inst.boundary[i];
            if (c < best) {
                best = c;
                pick = -1;
            }
        }
        VT_ASSERT(best == dp[mask], "matching: reconstruction mismatch");
        if (pick < 0) {
            out.to_boundary.push_back(i);
            mask ^= (1u << i);
        } else {
            out.pairs.emplace_back(i, pick);
            mask ^= (1u << i) | (1u << pick);
        }
    }
    return out;
}

MatchResult match_greedy(const MatchInstance& inst) {
    check_feasible_parity(inst);
    MatchResult out;
    const int n = inst.n;
    if (n == 0) return out;
    struct Cand {
        int cost;
        int i;
        int j;  // j == n means boundary
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (inst.dist[i][j] >= 0) cands.push_back({inst.dist[i][j], i, j});
        }
        if (inst.boundary[i] >= 0) cands.push_back({inst.boundary[i], i, n});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    std::vector<uint8_t> used(n, 0);
    int left = n;
    for (const Cand& c : cands) {
        if (left == 0) break;
        if (used[c.i]) continue;
        if (c.j == n) {
            used[c.i] = 1;
            out.to_boundary.push_back(c.i);
            out.total_weight += c.cost;
            --left;
        } else if (!used[c.j]) {
            used[c.i] = used[c.j] = 1;
            out.pairs.emplace_back(c.i, c.j);
            out.total_weight += c.cost;
            left -= 2;
        }
    }
    VT_REQUIRE(left == 0, "matching: instance infeasible (disconnected flags)");
    return out;
}

namespace {

// Primal-dual blossom algorithm for maximum-weight matching on a dense
// graph (1-indexed, integer weights, absent edges have weight 0). With all
// present weights shifted far above zero the maximum-weight matching is a
// minimum-cost perfect matching of the original instance.
class BlossomSolver {
  public:
    explicit BlossomSolver(const std::vector<std::vector<int64_t>>& weights)
        : n_(static_cast<int>(weights.size()) - 1) {
        const int cap = 2 * n_ + 1;
        g_.assign(cap, std::vector<Edge>(cap));
        lab_.assign(cap, 0);
        match_.assign(cap, 0);
        slack_.assign(cap, 0);
        st_.assign(cap, 0);
        pa_.assign(cap, 0);
        s_.assign(cap, -1);
        vis_.assign(cap, 0);
        flower_.assign(cap, {});
        flower_from_.assign(cap, std::vector<int>(n_ + 1, 0));
        for (int u = 1; u <= n_; ++u) {
            for (int v = 1; v <= n_; ++v) {
                g_[u][v] = Edge{u, v, weights[u][v]};
            }
        }
    }

    // Returns the mate array (0 = unmatched).
    std::vector<int> solve() {
        n_x_ = n_;
        int64_t w_max = 0;
        for (int u = 1; u <= n_; ++u) {
            st_[u] = u;
            flower_from_[u][u] = u;
            for (int v = 1; v <= n_; ++v) w_max = std::max(w_max, g_[u][v].w);
        }
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        while (matching()) {
        }
        return match_;
    }

  private:
    struct Edge {
        int u = 0;
        int v = 0;
        int64_t w = 0;
    };

    int64_t e_delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2; }

    void update_slack(int u, int x) {
        if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x])) slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u) {
            if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
        }
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
        } else {
            for (int i : flower_[x]) q_push(i);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_) {
            for (int i : flower_[x]) set_st(i, b);
        }
    }

    int get_pr(int b, int xr) {
        const int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                                        flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return static_cast<int>(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = g_[u][v].v;
        if (u > n_) {
            const Edge e = g_[u][v];
            const int xr = flower_from_[u][e.u];
            const int pr = get_pr(u, xr);
            for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
            set_match(xr, v);
            std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
        }
    }

    void augment(int u, int v) {
        for (;;) {
            const int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++t_; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == t_) return u;
            vis_[u] = t_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (const int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x) {
                if (g_[b][x].w == 0 || e_delta(g_[xs][x]) < e_delta(g_[b][x])) {
                    g_[b][x] = g_[xs][x];
                    g_[x][b] = g_[x][xs];
                }
            }
            for (int x = 1; x <= n_; ++x) {
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
            }
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (const int i : flower_[b]) set_st(i, i);
        const int xr = flower_from_[b][g_[b][pa_[b]].u];
        const int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            const int xs = flower_[b][i];
            const int xns = flower_[b][i + 1];
            pa_[xs] = g_[xns][xs].u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (size_t i = static_cast<size_t>(pr) + 1; i < flower_[b].size(); ++i) {
            const int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const Edge& e) {
        const int u = st_[e.u];
        const int v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            const int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            q_push(nu);
        } else if (s_[v] == 0) {
            const int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool matching() {
        std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x) {
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                q_push(x);
            }
        }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                const int u = q_.front();
                q_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v) {
                    if (g_[u][v].w > 0 && st_[u] != st_[v]) {
                        if (e_delta(g_[u][v]) == 0) {
                            if (on_found_edge(g_[u][v])) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
                }
            }
            int64_t d = kInf;
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            }
            for (int x = 1; x <= n_x_; ++x) {
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1) {
                        d = std::min(d, e_delta(g_[slack_[x]][x]));
                    } else if (s_[x] == 0) {
                        d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
                    }
                }
            }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[b] == b) {
                    if (s_[b] == 0) {
                        lab_[b] += d * 2;
                    } else if (s_[b] == 1) {
                        lab_[b] -= d * 2;
                    }
                }
            }
            q_.clear();
            for (int x = 1; x <= n_x_; ++x) {
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    e_delta(g_[slack_[x]][x]) == 0) {
                    if (on_found_edge(g_[slack_[x]][x])) return true;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
            }
        }
    }

    static constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
    int n_;
    int n_x_ = 0;
    int t_ = 0;
    std::vector<std::vector<Edge>> g_;
    std::vector<int64_t> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> q_;
};

}  // namespace

MatchResult match_blossom(const MatchInstance& inst) {
    check_feasible_parity(inst);
    MatchResult out;
    const int n = inst.n;
    if (n == 0) return out;

    // Reduction: vertex i gets a virtual partner i+n when an absorber is
    // reachable; virtual-virtual edges are free so unused absorbers pair up.
    const bool use_boundary = inst.has_boundary();
    const int total = use_boundary ? 2 * n : n;
    VT_REQUIRE(total % 2 == 0, "matching: odd node count");

    int64_t max_cost = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) max_cost = std::max<int64_t>(max_cost, inst.dist[i][j]);
        if (inst.boundary[i] >= 0) max_cost = std::max<int64_t>(max_cost, inst.boundary[i]);
    }
    // Large enough that maximum-weight implies perfect.
    const int64_t big = max_cost * (total / 2 + 1) + 1;

    std::vector<std::vector<int64_t>> w(total + 1, std::vector<int64_t>(total + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (inst.dist[i][j] >= 0) {
                w[i + 1][j + 1] = w[j + 1][i + 1] = big - inst.dist[i][j];
            }
        }
    }
    if (use_boundary) {
        for (int i = 0; i < n; ++i) {
            if (inst.boundary[i] >= 0) {
                w[i + 1][n + i + 1] = w[n + i + 1][i + 1] = big - inst.boundary[i];
            }
            for (int j = i + 1; j < n; ++j) {
                w[n + i + 1][n + j + 1] = w[n + j + 1][n + i + 1] = big;
            }
        }
    }

    BlossomSolver solver(w);
    std::vector<int> mate = solver.solve();
    for (int i = 1; i <= total; ++i) {
        VT_REQUIRE(mate[i] != 0, "matching: blossom failed to find a perfect matching");
    }
    for (int i = 0; i < n; ++i) {
        const int m = mate[i + 1] - 1;
        if (m >= n) {
            VT_ASSERT(m == n + i, "matching: vertex matched to a foreign absorber slot");
            out.to_boundary.push_back(i);
            out.total_weight += inst.boundary[i];
        } else if (m > i) {
            out.pairs.emplace_back(i, m);
            out.total_weight += inst.dist[i][m];
        }
    }
    return out;
}

}  // namespace veritop::decode
