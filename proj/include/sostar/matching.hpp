#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sostar {

// Maximum matching on a small general (not necessarily bipartite) graph,
// exact via bitmask DP over vertex subsets.  Vertices 0..n-1, n <= 24.
class SmallGraph {
public:
    explicit SmallGraph(std::size_t n) : n_(n), adj_(n, 0) {
        if (n > 24) throw std::invalid_argument("SmallGraph supports at most 24 vertices");
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= n_ || v >= n_ || u == v) throw std::invalid_argument("bad edge");
        adj_[u] |= (1u << v);
        adj_[v] |= (1u << u);
    }

    std::size_t size() const { return n_; }
    bool has_edge(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1u; }

    std::size_t max_matching() const { return matching_of_subset((n_ ? (1u << n_) : 1u) - 1u); }

    // Matching number of the induced subgraph on `subset` (bitmask).
    std::size_t matching_of_subset(std::uint32_t subset) const {
        std::map<std::uint32_t, std::size_t> memo;
        return match_rec(subset, memo);
    }

    // A maximum matching, extracted greedily from the lowest vertex; the
    // result is deterministic.
    std::vector<std::pair<std::size_t, std::size_t>> extract_matching() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        std::uint32_t s = (n_ ? (1u << n_) : 1u) - 1u;
        std::size_t nu = matching_of_subset(s);
        while (nu > 0) {
            bool advanced = false;
            for (std::size_t v = 0; v < n_ && !advanced; ++v) {
                if (!((s >> v) & 1u)) continue;
                for (std::size_t u = v + 1; u < n_; ++u) {
                    if (!((s >> u) & 1u) || !has_edge(v, u)) continue;
                    std::uint32_t rest = s & ~(1u << v) & ~(1u << u);
                    if (matching_of_subset(rest) == nu - 1) {
                        out.push_back({v, u});
                        s = rest;
                        --nu;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) break; // v is exposed in some maximum matching
            }
            if (!advanced) {
                // drop the lowest remaining vertex and continue
                std::size_t v = 0;
                while (!((s >> v) & 1u)) ++v;
                s &= ~(1u << v);
            }
        }
        return out;
    }

    // Vertices that no maximum matching covers.
    std::vector<std::size_t> always_exposed() const {
        std::uint32_t full = (n_ ? (1u << n_) : 1u) - 1u;
        std::size_t nu = matching_of_subset(full);
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < n_; ++v) {
            bool covered = false;
            for (std::size_t u = 0; u < n_ && !covered; ++u) {
                if (!has_edge(v, u)) continue;
                std::uint32_t rest = full & ~(1u << v) & ~(1u << u);
                if (nu >= 1 && matching_of_subset(rest) == nu - 1) covered = true;
            }
            if (!covered) out.push_back(v);
        }
        return out;
    }

private:
    std::size_t match_rec(std::uint32_t s, std::map<std::uint32_t, std::size_t>& memo) const {
        if (s == 0) return 0;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        std::size_t v = 0;
        while (!((s >> v) & 1u)) ++v;
        std::uint32_t without_v = s & ~(1u << v);
        std::size_t best = match_rec(without_v, memo); // leave v unmatched
        std::uint32_t nbrs = adj_[v] & without_v;
        while (nbrs) {
            std::uint32_t u_bit = nbrs & (~nbrs + 1u);
            nbrs ^= u_bit;
            std::size_t cand = 1 + match_rec(without_v & ~u_bit, memo);
            if (cand > best) best = cand;
        }
        memo[s] = best;
        return best;
    }

    std::size_t n_;
    std::vector<std::uint32_t> adj_;
};

// Kuhn's augmenting-path maximum matching for bipartite graphs given as an
// adjacency list from left vertices to right vertices.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::size_t n_left, std::size_t n_right)
        : adj_(n_left), n_right_(n_right) {}

    void add_edge(std::size_t l, std::size_t r) {
        if (l >= adj_.size() || r >= n_right_) throw std::invalid_argument("bad edge");
        adj_[l].push_back(r);
    }

    std::size_t max_matching() const {
        std::vector<int> match_r(n_right_, -1);
        std::vector<char> used;
        std::size_t res = 0;
        for (std::size_t l = 0; l < adj_.size(); ++l) {
            used.assign(adj_.size(), 0);
            if (try_augment(l, used, match_r)) ++res;
        }
        return res;
    }

    bool has_perfect_matching() const {
        return adj_.size() == n_right_ && max_matching() == adj_.size();
    }

private:
    bool try_augment(std::size_t l, std::vector<char>& used, std::vector<int>& match_r) const {
        if (used[l]) return false;
        used[l] = 1;
        for (std::size_t r : adj_[l]) {
            if (match_r[r] < 0 ||
                try_augment(static_cast<std::size_t>(match_r[r]), used, match_r)) {
                match_r[r] = static_cast<int>(l);
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::size_t n_right_;
};

// Structural rank of a generic skew-symmetric matrix supported on the simple
// graph of its admissible entries: twice the maximum matching.
inline std::size_t generic_skew_rank(std::size_t n,
                                     const std::set<std::pair<std::size_t, std::size_t>>& support) {
    SmallGraph g(n);
    for (const auto& [i, j] : support) g.add_edge(i, j);
    return 2 * g.max_matching();
}

// Same, with a per-entry admissibility filter.
template <typename HostOk>
std::size_t generic_skew_rank(std::size_t n,
                              const std::set<std::pair<std::size_t, std::size_t>>& support,
                              HostOk&& host_ok) {
    SmallGraph g(n);
    for (const auto& e : support)
        if (host_ok(e)) g.add_edge(e.first, e.second);
    return 2 * g.max_matching();
}

} // namespace sostar
