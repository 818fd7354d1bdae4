#pragma once

#include "sostar/higgs.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace sostar {

inline long expected_dimension(long n, long g) {
    if (n < 1 || g < 2) throw std::invalid_argument("expected_dimension: need n >= 1, g >= 2");
    return n * (2 * n - 1) * (g - 1);
}

// Dimension of the maximal odd-rank locus: the even-rank maximal moduli of
// rank 4m plus a Jacobian factor.
inline long rigid_dimension(long m, long g) {
    if (m < 1 || g < 2) throw std::invalid_argument("rigid_dimension: need m >= 1, g >= 2");
    return 2 * m * (4 * m - 1) * (g - 1) + g;
}

// End V -> Lambda^2 V (x) K + Lambda^2 V* (x) K with
// psi |-> (-beta psi^t - psi beta, gamma psi + psi^t gamma).
struct DeformationComplexSummary {
    SplitBundle left;  // End V, rank n^2
    SplitBundle right; // Lambda^2 V (x) K + Lambda^2 V* (x) K, rank n(n-1)
    // map pattern: from End summand index to right summand index
    std::set<std::pair<std::size_t, std::size_t>> map_pattern;
};

inline DeformationComplexSummary complex_summary(const SOStarHiggsObject& H) {
    DeformationComplexSummary S;
    std::size_t n = H.rank();
    // End V summand order: (a -> b) at index a*n + b, symbol L_a^* (x) L_b.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            S.left.summands.push_back(tensor(dual(H.V.summands[a]), H.V.summands[b]));
    // Right: V-side pairs {c,d} (c<d) first, then dual-side pairs, K-twisted.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) pairs.push_back({c, d});
    for (const auto& [c, d] : pairs)
        S.right.summands.push_back(
            tensor(tensor(H.V.summands[c], H.V.summands[d]), LineSymbol::canonical()));
    for (const auto& [c, d] : pairs)
        S.right.summands.push_back(tensor(
            tensor(dual(H.V.summands[c]), dual(H.V.summands[d])), LineSymbol::canonical()));
    auto pair_index = [&](std::size_t c, std::size_t d) {
        std::size_t lo = std::min(c, d), hi = std::max(c, d);
        std::size_t idx = 0;
        for (const auto& [x, y] : pairs) {
            if (x == lo && y == hi) return idx;
            ++idx;
        }
        return idx;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t src = a * n + b; // psi component F_a -> F_b
            for (const auto& [p, q] : H.beta_support) {
                std::size_t x = (p == a) ? q : (q == a ? p : n);
                if (x < n && x != b) S.map_pattern.insert({src, pair_index(b, x)});
            }
            for (const auto& [p, q] : H.gamma_support) {
                std::size_t x = (p == b) ? q : (q == b ? p : n);
                if (x < n && x != a)
                    S.map_pattern.insert({src, pairs.size() + pair_index(a, x)});
            }
        }
    return S;
}

// Negative Euler characteristic of the deformation complex, computed from
// the split pieces; the degree contributions of the two skew squares cancel
// so the value only depends on (n, g).
inline long complex_euler(const SOStarHiggsObject& H) {
    DeformationComplexSummary S = complex_summary(H);
    return -(riemann_roch_chi(H.ctx, S.left) - riemann_roch_chi(H.ctx, S.right));
}

} // namespace sostar
