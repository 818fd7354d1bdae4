#pragma once

#include "sostar/higgs.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sostar {

enum class Status { Stable, StrictlySemistable, Unstable };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Stable: return "Stable";
        case Status::StrictlySemistable: return "StrictlySemistable";
        case Status::Unstable: return "Unstable";
    }
    return "?";
}

using IndexSet = std::set<std::size_t>;

// 0 c V1 c V2 c V with V_a spanned by the summands in S_a; equalities
// between the terms are allowed.
struct TwoStepFiltration {
    IndexSet S1;
    IndexSet S2;
};

struct TwoStepWitness {
    TwoStepFiltration filtration;
    long defect = 0; // deg V - deg V1 - deg V2
};

struct WeightedWitness {
    std::vector<IndexSet> chain; // strictly increasing, ends at the full set
    std::vector<Rational> lambdas;
    Rational defect;
};

struct Verdict {
    Status status = Status::Stable;
    std::optional<TwoStepWitness> witness;
    std::optional<WeightedWitness> weighted_witness;
    bool repeated_labels_warning = false;
    std::string note;
};

inline bool has_repeated_labels(const SOStarHiggsObject& H) {
    std::set<LineSymbol> seen;
    for (const auto& L : H.V.summands)
        if (!seen.insert(L).second) return true;
    return false;
}

// Entrywise form of the four invariance conditions for a two-step
// filtration: beta(V2^perp) in V1 (x) K, beta(V1^perp) in V2 (x) K,
// gamma(V2) in V1^perp (x) K, gamma(V1) in V2^perp (x) K.
inline bool invariant_two_step(const SOStarHiggsObject& H, const TwoStepFiltration& F) {
    auto in1 = [&](std::size_t a) { return F.S1.count(a) > 0; };
    auto in2 = [&](std::size_t a) { return F.S2.count(a) > 0; };
    for (const auto& [a, b] : H.beta_support) {
        if (!in2(b) && !in1(a)) return false;
        if (!in2(a) && !in1(b)) return false;
        if (!in1(b) && !in2(a)) return false;
        if (!in1(a) && !in2(b)) return false;
    }
    for (const auto& [a, b] : H.gamma_support) {
        if (in2(a) && in1(b)) return false;
        if (in2(b) && in1(a)) return false;
        if (in1(a) && in2(b)) return false;
        if (in1(b) && in2(a)) return false;
    }
    return true;
}

inline long subset_degree(const SOStarHiggsObject& H, const IndexSet& S) {
    long d = 0;
    for (std::size_t a : S) d += H.V.summands[a].degree(H.ctx);
    return d;
}

inline long two_step_defect(const SOStarHiggsObject& H, const TwoStepFiltration& F) {
    return H.degree() - subset_degree(H, F.S1) - subset_degree(H, F.S2);
}

namespace detail {

inline IndexSet mask_to_set(std::uint32_t mask, std::size_t n) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) s.insert(i);
    return s;
}

// Canonical deterministic order on filtrations: ascending (S1 mask, S2 mask),
// which coincides with lexicographic order on sorted index lists.
template <typename Fn>
void for_each_two_step(std::size_t n, Fn&& fn) {
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;
    for (std::uint32_t s1 = 0; s1 <= full; ++s1) {
        // supersets of s1
        std::uint32_t rest = full & ~s1;
        std::uint32_t sub = 0;
        while (true) {
            fn(s1, s1 | sub);
            if (sub == rest) break;
            sub = (sub - rest) & rest;
        }
    }
}

} // namespace detail

// Prop-style two-step decision: enumerate all coordinate filtrations
// S1 <= S2, keep the invariant ones, and compare defects against 0.
// The filtration 0 = V1 c V2 = V is excluded from the strictness test.
inline Verdict check_semistable(const SOStarHiggsObject& H) {
    std::size_t n = H.rank();
    if (n > 16)
        throw std::invalid_argument("check_semistable: exhaustive enumeration supports rank <= 16");
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;

    std::optional<TwoStepWitness> worst;     // most negative defect, lex-least filtration
    std::optional<TwoStepWitness> zero_wit;  // lex-least zero-defect nontrivial witness

    auto lex_less = [](const TwoStepFiltration& a, const TwoStepFiltration& b) {
        if (a.S1 != b.S1) return a.S1 < b.S1;
        return a.S2 < b.S2;
    };
    detail::for_each_two_step(n, [&](std::uint32_t m1, std::uint32_t m2) {
        TwoStepFiltration F{detail::mask_to_set(m1, n), detail::mask_to_set(m2, n)};
        if (!invariant_two_step(H, F)) return;
        long defect = two_step_defect(H, F);
        if (defect < 0) {
            if (!worst || defect < worst->defect ||
                (defect == worst->defect && lex_less(F, worst->filtration)))
                worst = TwoStepWitness{F, defect};
        } else if (defect == 0) {
            bool trivial = (m1 == 0 && m2 == full);
            if (!trivial && (!zero_wit || lex_less(F, zero_wit->filtration)))
                zero_wit = TwoStepWitness{F, 0};
        }
    });

    Verdict v;
    v.repeated_labels_warning = has_repeated_labels(H);
    if (worst) {
        v.status = Status::Unstable;
        v.witness = worst;
        return v;
    }
    if (zero_wit) {
        v.status = Status::StrictlySemistable;
        v.witness = zero_wit;
        return v;
    }
    v.status = Status::Stable;
    if (v.repeated_labels_warning) {
        // Repeated labels may hide non-coordinate destabilizing subbundles;
        // cap the verdict conservatively.
        v.status = Status::StrictlySemistable;
        v.note = "repeated summand labels: verdict capped at StrictlySemistable";
    }
    return v;
}

// ---------------------------------------------------------------------------
// Polystability (two-step refinement) and the summand classifier.
// ---------------------------------------------------------------------------

struct PolystabilityFailure {
    TwoStepFiltration filtration;
    std::string reason;
};

enum class SummandKind {
    StableSOStar,    // stable with phi != 0, stable over the orthogonal group
    UStarType,       // skew intertwiner V ~ V* (structural test)
    UpqType,         // cross-shaped pair with balanced degrees
    ZeroFieldBundle, // phi = 0, degree-zero stable line
    Unclassifiable
};

inline const char* summand_kind_name(SummandKind k) {
    switch (k) {
        case SummandKind::StableSOStar: return "stable-sostar";
        case SummandKind::UStarType: return "ustar";
        case SummandKind::UpqType: return "upq";
        case SummandKind::ZeroFieldBundle: return "zero-field";
        case SummandKind::Unclassifiable: return "unclassifiable";
    }
    return "?";
}

struct SummandType {
    std::vector<std::size_t> indices;
    SummandKind kind = SummandKind::Unclassifiable;
    bool structural = false; // the U* intertwiner test is label-level only
    std::string detail;
};

struct PolystableResult {
    enum class Outcome { Stable, Polystable, NotPolystable } outcome;
    std::vector<std::vector<std::size_t>> decomposition; // summand index groups
    std::optional<PolystabilityFailure> failure;
};

// Extract the sub-object supported on a group of summand indices.
inline SOStarHiggsObject sub_object(const SOStarHiggsObject& H,
                                    const std::vector<std::size_t>& idx) {
    SOStarHiggsObject piece;
    piece.ctx = H.ctx;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        pos[idx[k]] = k;
        piece.V.summands.push_back(H.V.summands[idx[k]]);
    }
    auto keep = [&](const Support& s, const std::map<SupportEntry, GaussianRational>& coeff,
                    Support& out, std::map<SupportEntry, GaussianRational>& out_coeff) {
        for (const auto& e : s) {
            auto ia = pos.find(e.first), ib = pos.find(e.second);
            if (ia == pos.end() || ib == pos.end()) continue;
            SupportEntry ne{std::min(ia->second, ib->second), std::max(ia->second, ib->second)};
            out.insert(ne);
            auto c = coeff.find(e);
            if (c != coeff.end()) out_coeff[ne] = c->second;
        }
    };
    keep(H.beta_support, H.beta_coeff, piece.beta_support, piece.beta_coeff);
    keep(H.gamma_support, H.gamma_coeff, piece.gamma_support, piece.gamma_coeff);
    return piece;
}

// Connected components of the support graph; isolated summands are their own
// components.  Cross terms between components vanish, so these are the
// candidate direct summands of a polystable object.
inline std::vector<std::vector<std::size_t>> support_components(const SOStarHiggsObject& H) {
    std::size_t n = H.rank();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (const auto& [a, b] : H.beta_support) unite(a, b);
    for (const auto& [a, b] : H.gamma_support) unite(a, b);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

// Two-step polystability refinement: every zero-defect invariant filtration
// (other than 0 = V1 c V2 = V) must split, i.e. every beta entry lies in
// Lambda^2(V2/V1) or crosses V1 x V/V2, and likewise for gamma.
inline PolystableResult check_polystable(const SOStarHiggsObject& H) {
    Verdict semi = check_semistable(H);
    if (semi.status == Status::Unstable)
        throw std::invalid_argument("check_polystable called on an unstable object");

    PolystableResult res;
    std::size_t n = H.rank();
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;

    std::optional<PolystabilityFailure> failure;
    detail::for_each_two_step(n, [&](std::uint32_t m1, std::uint32_t m2) {
        if (failure) return;
        if (m1 == 0 && m2 == full) return;
        TwoStepFiltration F{detail::mask_to_set(m1, n), detail::mask_to_set(m2, n)};
        if (!invariant_two_step(H, F)) return;
        if (two_step_defect(H, F) != 0) return;
        auto inA = [&](std::size_t a) { return F.S1.count(a) > 0; };
        auto inB = [&](std::size_t a) { return F.S2.count(a) > 0 && !F.S1.count(a); };
        auto inC = [&](std::size_t a) { return !F.S2.count(a); };
        auto splits = [&](const SupportEntry& e) {
            bool both_middle = inB(e.first) && inB(e.second);
            bool cross = (inA(e.first) && inC(e.second)) || (inC(e.first) && inA(e.second));
            return both_middle || cross;
        };
        for (const auto& e : H.beta_support)
            if (!splits(e)) {
                failure = PolystabilityFailure{
                    F, "beta entry (" + std::to_string(e.first + 1) + "," +
                           std::to_string(e.second + 1) + ") does not split"};
                return;
            }
        for (const auto& e : H.gamma_support)
            if (!splits(e)) {
                failure = PolystabilityFailure{
                    F, "gamma entry (" + std::to_string(e.first + 1) + "," +
                           std::to_string(e.second + 1) + ") does not split"};
                return;
            }
    });

    if (failure) {
        res.outcome = PolystableResult::Outcome::NotPolystable;
        res.failure = failure;
        return res;
    }
    res.outcome = (semi.status == Status::Stable) ? PolystableResult::Outcome::Stable
                                                  : PolystableResult::Outcome::Polystable;
    res.decomposition = support_components(H);
    return res;
}

namespace detail {

// Structural skew intertwiner test: a fixed-point-free involution sigma with
// L_{sigma(a)} = L_a^* that conjugates the beta support onto the gamma
// support.  Searched by backtracking over the (at most 8-point) index set.
inline bool find_skew_intertwiner(const SOStarHiggsObject& H,
                                  const std::vector<std::size_t>& idx) {
    std::size_t m = idx.size();
    if (m % 2 != 0) return false;
    std::vector<long> part(m, -1);
    auto supports_match = [&]() {
        auto conj = [&](const Support& s) {
            Support out;
            for (const auto& [a, b] : s) {
                std::size_t ca = static_cast<std::size_t>(part[a]);
                std::size_t cb = static_cast<std::size_t>(part[b]);
                out.insert({std::min(ca, cb), std::max(ca, cb)});
            }
            return out;
        };
        SOStarHiggsObject piece = sub_object(H, idx);
        return conj(piece.beta_support) == piece.gamma_support;
    };
    SOStarHiggsObject piece = sub_object(H, idx);
    std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
        while (a < m && part[a] >= 0) ++a;
        if (a == m) return supports_match();
        for (std::size_t b = a + 1; b < m; ++b) {
            if (part[b] >= 0) continue;
            if (piece.V.summands[b] != dual(piece.V.summands[a])) continue;
            part[a] = static_cast<long>(b);
            part[b] = static_cast<long>(a);
            if (rec(a + 1)) return true;
            part[a] = part[b] = -1;
        }
        return false;
    };
    return rec(0);
}

// Bipartition of a connected support graph, if one exists with every edge
// crossing.  Returns (side A, side C) with the lowest index in A.
inline bool cross_bipartition(const SOStarHiggsObject& piece, std::vector<std::size_t>& A,
                              std::vector<std::size_t>& C) {
    std::size_t m = piece.rank();
    std::vector<int> color(m, -1);
    std::vector<std::vector<std::size_t>> adj(m);
    for (const auto& [a, b] : piece.beta_support) { adj[a].push_back(b); adj[b].push_back(a); }
    for (const auto& [a, b] : piece.gamma_support) { adj[a].push_back(b); adj[b].push_back(a); }
    std::vector<std::size_t> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : adj[v]) {
            if (color[u] < 0) {
                color[u] = 1 - color[v];
                stack.push_back(u);
            } else if (color[u] == color[v]) {
                return false;
            }
        }
    }
    for (std::size_t v = 0; v < m; ++v) {
        if (color[v] < 0) return false; // disconnected piece; caller guarantees otherwise
        (color[v] == 0 ? A : C).push_back(v);
    }
    return true;
}

} // namespace detail

// Tags each direct summand of a polystable object with its structure type.
// Types are tested in an order that makes them mutually exclusive per
// summand: zero Higgs field, skew intertwiner, balanced cross pair, then
// stable piece.
inline std::vector<SummandType> classify_summands(const SOStarHiggsObject& H) {
    PolystableResult ps = check_polystable(H);
    if (ps.outcome == PolystableResult::Outcome::NotPolystable)
        throw std::invalid_argument("classify_summands called on a non-polystable object");

    std::vector<SummandType> out;
    for (const auto& idx : ps.decomposition) {
        SummandType t;
        t.indices = idx;
        SOStarHiggsObject piece = sub_object(H, idx);
        bool phi_zero = piece.beta_support.empty() && piece.gamma_support.empty();
        if (phi_zero) {
            if (piece.rank() == 1 && piece.degree() == 0) {
                t.kind = SummandKind::ZeroFieldBundle;
                t.detail = "degree-zero line, zero Higgs field";
            } else {
                t.kind = SummandKind::Unclassifiable;
                t.detail = "zero Higgs field but not a degree-zero line";
            }
            out.push_back(std::move(t));
            continue;
        }
        if (detail::find_skew_intertwiner(H, idx)) {
            t.kind = SummandKind::UStarType;
            t.structural = true;
            t.detail = "V ~ V* with support intertwining (structural)";
            out.push_back(std::move(t));
            continue;
        }
        std::vector<std::size_t> A, C;
        if (detail::cross_bipartition(piece, A, C)) {
            long degA = 0, degC = 0;
            for (std::size_t v : A) degA += piece.V.summands[v].degree(piece.ctx);
            for (std::size_t v : C) degC += piece.V.summands[v].degree(piece.ctx);
            if (degA == degC) {
                t.kind = SummandKind::UpqType;
                t.detail = "cross pair, ranks (" + std::to_string(A.size()) + "," +
                           std::to_string(C.size()) + "), balanced degrees";
                out.push_back(std::move(t));
                continue;
            }
        }
        Verdict v = check_semistable(piece);
        if (v.status == Status::Stable) {
            t.kind = SummandKind::StableSOStar;
            t.detail = "stable piece with nonzero Higgs field";
        } else {
            t.kind = SummandKind::Unclassifiable;
            t.detail = "connected piece is not stable and matches no split type";
        }
        out.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degree bounds.
// ---------------------------------------------------------------------------

struct MilnorWoodReport {
    long d = 0;
    long rank_beta = 0;
    long rank_gamma = 0;
    long lower = 0; // rank(beta) (1-g)
    long upper = 0; // rank(gamma) (g-1)
    long cap = 0;   // floor(n/2) (2g-2)
    bool within_rank_bounds = false;
    bool within_cap = false;
    bool maximal = false;
    bool gamma_iso = false;
    bool beta_iso = false;
    bool det_label_inconsistency = false;
};

inline MilnorWoodReport milnor_wood(const SOStarHiggsObject& H) {
    MilnorWoodReport r;
    long g = H.ctx.genus;
    long n = static_cast<long>(H.rank());
    r.d = toledo(H);
    r.rank_beta = static_cast<long>(rank_beta(H));
    r.rank_gamma = static_cast<long>(rank_gamma(H));
    r.lower = r.rank_beta * (1 - g);
    r.upper = r.rank_gamma * (g - 1);
    r.cap = (n / 2) * (2 * g - 2);
    r.within_rank_bounds = (r.lower <= r.d) && (r.d <= r.upper);
    r.within_cap = std::abs(r.d) <= r.cap;
    r.maximal = std::abs(r.d) == r.cap;
    if (r.d == n * (g - 1)) {
        auto s = gamma_iso_status(H);
        r.gamma_iso = (s == SkewIsoStatus::Iso);
        r.det_label_inconsistency |= (s == SkewIsoStatus::DegreeZeroNontrivialLabel);
    }
    if (r.d == -n * (g - 1)) {
        auto s = beta_iso_status(H);
        r.beta_iso = (s == SkewIsoStatus::Iso);
        r.det_label_inconsistency |= (s == SkewIsoStatus::DegreeZeroNontrivialLabel);
    }
    return r;
}

} // namespace sostar
