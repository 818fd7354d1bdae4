#pragma once

#include "sostar/aux_checkers.hpp"
#include "sostar/higgs.hpp"
#include "sostar/stability.hpp"

#include <stdexcept>
#include <string>

namespace sostar {

// K^2-twisted pair (W, Omega, psi) attached to a maximal object whose gamma
// pattern is structurally invertible.  W = V (x) K^{-1/2}, Omega carries the
// gamma pattern, psi the composite pattern of beta after Omega.
struct UStarPair {
    CurveContext ctx;
    SplitBundle W;
    Support omega_support;   // skew pattern of the symplectic form W -> W*
    EndoSupport psi_support; // K^2-twisted endomorphism W -> W (x) K^2
};

namespace detail {

// Skew extension of an upper-triangular support, as directed entries.
inline EndoSupport skew_extension(const Support& s) {
    EndoSupport out;
    for (const auto& [a, b] : s) {
        out.insert({a, b});
        out.insert({b, a});
    }
    return out;
}

} // namespace detail

inline UStarPair cayley(const SOStarHiggsObject& H) {
    std::size_t n = H.rank();
    long g = H.ctx.genus;
    if (n % 2 != 0) throw std::invalid_argument("cayley: rank must be even");
    if (toledo(H) != static_cast<long>(n) * (g - 1))
        throw std::invalid_argument("cayley: Toledo invariant is not maximal");
    if (gamma_iso_status(H) != SkewIsoStatus::Iso)
        throw std::invalid_argument("cayley: gamma is not structurally invertible");
    if (!H.ctx.has_k_half)
        throw std::invalid_argument("cayley: context has no square root of K");

    UStarPair P;
    P.ctx = H.ctx;
    LineSymbol l0 = dual(LineSymbol::canonical_half()); // K^{-1/2}
    P.W = H.V.tensored(l0);
    P.omega_support = H.gamma_support;
    // psi = (beta (x) 1) after (gamma (x) 1): compose the skew extensions.
    EndoSupport beta_dir = detail::skew_extension(H.beta_support);
    EndoSupport gamma_dir = detail::skew_extension(H.gamma_support);
    for (const auto& [i, j] : beta_dir)
        for (const auto& [jj, k] : gamma_dir)
            if (j == jj) P.psi_support.insert({k, i}); // W -k-> W* -j..i-> W
    return P;
}

inline void validate_pair(const UStarPair& P) {
    std::size_t n = P.W.rank();
    SmallGraph g(n);
    for (const auto& [a, b] : P.omega_support) {
        if (b >= n) throw std::invalid_argument("pair: omega entry out of range");
        g.add_edge(a, b);
    }
    auto matching = g.extract_matching();
    if (2 * matching.size() != n)
        throw std::invalid_argument("pair: omega pattern is not structurally nondegenerate");
    // degree bookkeeping along the matching, and the induced involution
    std::vector<std::size_t> sigma(n);
    for (const auto& [a, b] : matching) {
        if (P.W.summands[a].degree(P.ctx) + P.W.summands[b].degree(P.ctx) != 0)
            throw std::invalid_argument("pair: matched degrees do not cancel");
        sigma[a] = b;
        sigma[b] = a;
    }
    bool pure_matching = P.omega_support.size() == matching.size();
    for (const auto& [src, dst] : P.psi_support) {
        if (src >= n || dst >= n) throw std::invalid_argument("pair: psi entry out of range");
        // the involution is canonical only for a pure matching form
        if (pure_matching && !P.psi_support.count({sigma[dst], sigma[src]}))
            throw std::invalid_argument("pair: psi is not symmetric under the matching");
    }
}

inline SOStarHiggsObject cayley_inverse(const UStarPair& P) {
    validate_pair(P);
    SOStarHiggsObject H;
    H.ctx = P.ctx;
    H.V = P.W.tensored(LineSymbol::canonical_half());
    H.gamma_support = P.omega_support;
    // beta = psi after Omega^{-1}.  For a matching-shaped Omega the inverse
    // pattern is the matching itself.
    EndoSupport omega_dir = detail::skew_extension(P.omega_support);
    for (const auto& [k, i] : P.psi_support)
        for (const auto& [kk, j] : omega_dir)
            if (k == kk) {
                if (i != j) H.beta_support.insert({std::min(i, j), std::max(i, j)});
            }
    return H;
}

// Prop-A.5-style verdict for the pair, through the symplectic checker.
inline Verdict ustar_stability(const UStarPair& P) {
    validate_pair(P);
    SymplHiggsObject O{P.ctx, P.W, P.omega_support, P.psi_support};
    return ustar_check(O);
}

// ---------------------------------------------------------------------------
// Rigidity decomposition for odd rank at maximal Toledo invariant.
// ---------------------------------------------------------------------------

struct RigidityDecomposition {
    LineSymbol kernel_line;
    std::size_t kernel_index = 0;
    SOStarHiggsObject core; // rank n-1, maximal
    long rank_gamma = 0;    // l
    long torsion_degree = 0;
    long ker_degree = 0;
    long w_gamma_degree = 0;
    bool second_fundamental_form_zero = true; // forced, never computed
};

inline RigidityDecomposition rigidity_decompose(const SOStarHiggsObject& H) {
    std::size_t n = H.rank();
    long g = H.ctx.genus;
    if (n % 2 != 1 || n < 3) throw std::invalid_argument("rigidity: rank must be odd and >= 3");
    long m = static_cast<long>(n / 2);
    if (toledo(H) != m * (2 * g - 2))
        throw std::invalid_argument("rigidity: Toledo invariant is not maximal");
    PolystableResult ps = check_polystable(H);
    if (ps.outcome == PolystableResult::Outcome::NotPolystable)
        throw std::invalid_argument("rigidity: object is not polystable");

    SmallGraph gg(n);
    for (const auto& [a, b] : H.gamma_support) gg.add_edge(a, b);
    auto exposed = gg.always_exposed();
    if (exposed.size() != 1)
        throw std::invalid_argument("rigidity: structural kernel of gamma is not a line (" +
                                    std::to_string(exposed.size()) + " candidates)");
    std::size_t kv = exposed[0];

    RigidityDecomposition R;
    R.kernel_index = kv;
    R.kernel_line = H.V.summands[kv];
    R.rank_gamma = static_cast<long>(rank_gamma(H));
    R.ker_degree = R.kernel_line.degree(H.ctx);
    R.torsion_degree = 0; // structurally zero in the split generic model
    // deg(ker gamma) = d + deg(W_gamma) = d - l(g-1) + t/2
    R.w_gamma_degree = R.ker_degree - toledo(H);
    if (R.rank_gamma != 2 * m)
        throw std::invalid_argument("rigidity: gamma does not have full even rank 2m");
    if (R.ker_degree != 0)
        throw std::invalid_argument(
            "rigidity: structural kernel has nonzero degree (non-polystable evidence)");
    for (const auto& [a, b] : H.beta_support)
        if (a == kv || b == kv)
            throw std::invalid_argument("rigidity: beta has cross terms into the kernel line");

    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (i != kv) rest.push_back(i);
    R.core = sub_object(H, rest);
    return R;
}

} // namespace sostar
