#pragma once

#include "sostar/curve.hpp"
#include "sostar/matching.hpp"
#include "sostar/matrix.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sostar {

using SupportEntry = std::pair<std::size_t, std::size_t>; // (i, j) with i < j, 0-based
using Support = std::set<SupportEntry>;

// Split-model Higgs object: V = sum of line symbols, with beta and gamma
// given as strictly-upper-triangular support patterns (skewness is
// structural: the full matrices are the skew extensions).  Entries may carry
// optional exact coefficients; structural operations ignore them.
struct SOStarHiggsObject {
    CurveContext ctx;
    SplitBundle V;
    Support beta_support;
    Support gamma_support;
    std::map<SupportEntry, GaussianRational> beta_coeff;  // optional
    std::map<SupportEntry, GaussianRational> gamma_coeff; // optional

    std::size_t rank() const { return V.rank(); }
    long degree() const { return V.degree(ctx); }

    LineSymbol beta_host(const SupportEntry& e) const {
        return tensor(tensor(V.summands[e.first], V.summands[e.second]), LineSymbol::canonical());
    }
    LineSymbol gamma_host(const SupportEntry& e) const {
        return tensor(tensor(dual(V.summands[e.first]), dual(V.summands[e.second])),
                      LineSymbol::canonical());
    }
};

struct ValidationIssue {
    std::string field; // "beta" or "gamma"
    SupportEntry entry;
    std::string message;
};

// Checks index bounds and that each support entry's host admits a generic
// section; every violating entry is listed.
inline std::vector<ValidationIssue> validate(const SOStarHiggsObject& H) {
    std::vector<ValidationIssue> issues;
    std::size_t n = H.rank();
    auto check = [&](const Support& s, const char* which, bool is_beta) {
        for (const auto& e : s) {
            if (e.first >= e.second || e.second >= n) {
                issues.push_back({which, e, "entry must satisfy i < j <= rank"});
                continue;
            }
            LineSymbol host = is_beta ? H.beta_host(e) : H.gamma_host(e);
            if (h0_generic(H.ctx, host) == 0)
                issues.push_back({which, e,
                                  "no generic section: host " + host.to_string() +
                                      " has h0 = 0"});
        }
    };
    check(H.beta_support, "beta", true);
    check(H.gamma_support, "gamma", false);
    return issues;
}

inline bool is_valid(const SOStarHiggsObject& H) { return validate(H).empty(); }

inline long toledo(const SOStarHiggsObject& H) { return H.degree(); }

// (V, beta, gamma) -> (V*, gamma, beta); an involution up to nothing at all
// in the split model, since summand order is preserved.
inline SOStarHiggsObject dualize(const SOStarHiggsObject& H) {
    SOStarHiggsObject r;
    r.ctx = H.ctx;
    r.V = H.V.dualized();
    r.beta_support = H.gamma_support;
    r.gamma_support = H.beta_support;
    r.beta_coeff = H.gamma_coeff;
    r.gamma_coeff = H.beta_coeff;
    return r;
}

// Only entries whose host carries a generic section contribute to the rank.
// On validated objects the filter is vacuous.
inline std::size_t rank_beta(const SOStarHiggsObject& H) {
    return generic_skew_rank(H.rank(), H.beta_support, [&](const SupportEntry& e) {
        return h0_generic(H.ctx, H.beta_host(e)) > 0;
    });
}
inline std::size_t rank_gamma(const SOStarHiggsObject& H) {
    return generic_skew_rank(H.rank(), H.gamma_support, [&](const SupportEntry& e) {
        return h0_generic(H.ctx, H.gamma_host(e)) > 0;
    });
}

// Structural model of "gamma is an isomorphism": n even, the support pattern
// has full generic rank, and the determinant symbol (det V*)^2 (x) K^n is the
// trivial label.  A degree-0 but nontrivial label means the object cannot
// carry a nonvanishing determinant section; that is reported as a modeling
// inconsistency rather than silently accepted.
enum class SkewIsoStatus { Iso, NotIso, DegreeZeroNontrivialLabel };

inline SkewIsoStatus gamma_iso_status(const SOStarHiggsObject& H) {
    std::size_t n = H.rank();
    if (n % 2 != 0) return SkewIsoStatus::NotIso;
    // judged on the raw pattern so that inconsistent labellings are caught
    // below rather than silently filtered
    if (generic_skew_rank(n, H.gamma_support) != n) return SkewIsoStatus::NotIso;
    LineSymbol det_sym = tensor(pow(dual(H.V.det()), 2), LineSymbol::canonical(static_cast<long>(n)));
    if (det_sym.is_trivial()) return SkewIsoStatus::Iso;
    if (det_sym.degree(H.ctx) == 0) return SkewIsoStatus::DegreeZeroNontrivialLabel;
    return SkewIsoStatus::NotIso;
}

inline SkewIsoStatus beta_iso_status(const SOStarHiggsObject& H) {
    return gamma_iso_status(dualize(H));
}

// Endomorphism-valued support on 2n indices: V summands first, then V*
// summands; entry (src, dst) means a component from summand src to summand
// dst (twisted by K).
using EndoSupport = std::set<std::pair<std::size_t, std::size_t>>;

struct AssociatedComplexHiggs {
    SplitBundle E; // V followed by V*
    EndoSupport Phi_support;
    bool with_quadratic_form = false;
    std::size_t n = 0; // summand i of V pairs with summand n+i of V* under Q
};

inline AssociatedComplexHiggs associated_sl(const SOStarHiggsObject& H) {
    AssociatedComplexHiggs A;
    A.n = H.rank();
    A.E = H.V;
    for (const auto& L : H.V.dualized().summands) A.E.summands.push_back(L);
    for (const auto& [i, j] : H.beta_support) {
        // beta: V* -> V (x) K, components L_j* -> L_i and L_i* -> L_j
        A.Phi_support.insert({A.n + j, i});
        A.Phi_support.insert({A.n + i, j});
    }
    for (const auto& [i, j] : H.gamma_support) {
        // gamma: V -> V* (x) K
        A.Phi_support.insert({i, A.n + j});
        A.Phi_support.insert({j, A.n + i});
    }
    return A;
}

inline AssociatedComplexHiggs associated_so(const SOStarHiggsObject& H) {
    AssociatedComplexHiggs A = associated_sl(H);
    A.with_quadratic_form = true;
    return A;
}

// Generic rank of the block anti-diagonal Phi pattern.
inline std::size_t phi_pattern_rank(const SOStarHiggsObject& H) {
    return rank_beta(H) + rank_gamma(H);
}

} // namespace sostar
