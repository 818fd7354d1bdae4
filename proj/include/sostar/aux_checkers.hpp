#pragma once

#include "sostar/higgs.hpp"
#include "sostar/stability.hpp"

#include <optional>
#include <vector>

namespace sostar {

// Split objects for the companion groups.  All subbundle quantifiers run over
// coordinate subbundles, matching the split-model convention of the main
// checker.

struct EndoHiggsObject { // GL(n,C) / SL(n,C): (E, Phi) with Phi: E -> E (x) K
    CurveContext ctx;
    SplitBundle E;
    EndoSupport Phi;
};

struct OrthHiggsObject { // SO(n,C): (E, Q, Phi); pairing[i] = Q-partner of i
    CurveContext ctx;
    SplitBundle E;
    std::vector<std::size_t> pairing;
    EndoSupport Phi;
};

struct PairHiggsObject { // U(p,q): (Vt, Wt, beta: Wt->Vt(x)K, gamma: Vt->Wt(x)K)
    CurveContext ctx;
    SplitBundle Vt;
    SplitBundle Wt;
    std::set<std::pair<std::size_t, std::size_t>> beta;  // (v, w): component W_w -> V_v
    std::set<std::pair<std::size_t, std::size_t>> gamma; // (v, w): component V_v -> W_w
};

struct SymplHiggsObject { // U*(n): (W, Omega skew pattern, psi: W -> W (x) K^2)
    CurveContext ctx;
    SplitBundle W;
    Support Omega;
    EndoSupport psi;
};

namespace detail {

inline bool endo_invariant(const EndoSupport& phi, std::uint32_t S) {
    for (const auto& [src, dst] : phi)
        if (((S >> src) & 1u) && !((S >> dst) & 1u)) return false;
    return true;
}

inline long mask_degree(const CurveContext& ctx, const SplitBundle& B, std::uint32_t S) {
    long d = 0;
    for (std::size_t i = 0; i < B.rank(); ++i)
        if ((S >> i) & 1u) d += B.summands[i].degree(ctx);
    return d;
}

inline std::size_t popcount32(std::uint32_t x) {
    std::size_t c = 0;
    while (x) { x &= x - 1; ++c; }
    return c;
}

} // namespace detail

// Slope test over Phi-invariant coordinate subbundles (Higgs bundles for the
// general and special linear groups share it).  Polystability asks for an
// invariant complement at every slope tie.
inline Verdict gl_check(const EndoHiggsObject& O) {
    std::size_t n = O.E.rank();
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;
    long degE = O.E.degree(O.ctx);
    Verdict v;
    v.status = Status::Stable;
    for (std::uint32_t S = 1; S < full; ++S) {
        if (!detail::endo_invariant(O.Phi, S)) continue;
        long dS = detail::mask_degree(O.ctx, O.E, S);
        std::size_t r = detail::popcount32(S);
        // mu(E_S) <= mu(E)  <=>  dS * n <= degE * r
        long lhs = dS * static_cast<long>(n), rhs = degE * static_cast<long>(r);
        if (lhs > rhs) {
            v.status = Status::Unstable;
            v.witness = TwoStepWitness{{detail::mask_to_set(S, n), detail::mask_to_set(S, n)},
                                       rhs - lhs};
            return v;
        }
        if (lhs == rhs && v.status == Status::Stable) {
            v.status = Status::StrictlySemistable;
            v.witness = TwoStepWitness{{detail::mask_to_set(S, n), detail::mask_to_set(S, n)}, 0};
        }
    }
    return v;
}

inline bool gl_polystable(const EndoHiggsObject& O) {
    std::size_t n = O.E.rank();
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;
    long degE = O.E.degree(O.ctx);
    for (std::uint32_t S = 1; S < full; ++S) {
        if (!detail::endo_invariant(O.Phi, S)) continue;
        long dS = detail::mask_degree(O.ctx, O.E, S);
        if (dS * static_cast<long>(n) > degE * static_cast<long>(detail::popcount32(S)))
            return false;
        if (dS * static_cast<long>(n) == degE * static_cast<long>(detail::popcount32(S)) &&
            !detail::endo_invariant(O.Phi, full & ~S))
            return false;
    }
    return true;
}

// Isotropic Phi-invariant coordinate subbundles must have nonpositive degree.
inline Verdict so_check(const OrthHiggsObject& O) {
    std::size_t n = O.E.rank();
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;
    auto isotropic = [&](std::uint32_t S) {
        for (std::size_t i = 0; i < n; ++i)
            if (((S >> i) & 1u) && ((S >> O.pairing[i]) & 1u)) return false;
        return true;
    };
    Verdict v;
    v.status = Status::Stable;
    for (std::uint32_t S = 1; S < full; ++S) {
        if (!isotropic(S) || !detail::endo_invariant(O.Phi, S)) continue;
        long dS = detail::mask_degree(O.ctx, O.E, S);
        if (dS > 0) {
            v.status = Status::Unstable;
            v.witness = TwoStepWitness{{detail::mask_to_set(S, n), detail::mask_to_set(S, n)}, -dS};
            return v;
        }
        if (dS == 0 && v.status == Status::Stable) {
            v.status = Status::StrictlySemistable;
            v.witness = TwoStepWitness{{detail::mask_to_set(S, n), detail::mask_to_set(S, n)}, 0};
        }
    }
    return v;
}

// mu(V' + W') <= mu(V + W) over invariant coordinate pairs.
inline Verdict upq_check(const PairHiggsObject& O) {
    std::size_t p = O.Vt.rank(), q = O.Wt.rank();
    std::uint32_t fullV = (p ? (1u << p) : 1u) - 1u;
    std::uint32_t fullW = (q ? (1u << q) : 1u) - 1u;
    long degT = O.Vt.degree(O.ctx) + O.Wt.degree(O.ctx);
    long rkT = static_cast<long>(p + q);
    Verdict v;
    v.status = Status::Stable;
    for (std::uint32_t SV = 0; SV <= fullV; ++SV)
        for (std::uint32_t SW = 0; SW <= fullW; ++SW) {
            if (SV == 0 && SW == 0) continue;
            if (SV == fullV && SW == fullW) continue;
            bool inv = true;
            for (const auto& [vi, wi] : O.beta)
                if (((SW >> wi) & 1u) && !((SV >> vi) & 1u)) { inv = false; break; }
            if (inv)
                for (const auto& [vi, wi] : O.gamma)
                    if (((SV >> vi) & 1u) && !((SW >> wi) & 1u)) { inv = false; break; }
            if (!inv) continue;
            long dS = detail::mask_degree(O.ctx, O.Vt, SV) + detail::mask_degree(O.ctx, O.Wt, SW);
            long rS = static_cast<long>(detail::popcount32(SV) + detail::popcount32(SW));
            long lhs = dS * rkT, rhs = degT * rS;
            if (lhs > rhs) {
                v.status = Status::Unstable;
                v.witness = TwoStepWitness{{detail::mask_to_set(SV, p), detail::mask_to_set(SW, q)},
                                           rhs - lhs};
                return v;
            }
            if (lhs == rhs && v.status == Status::Stable) {
                v.status = Status::StrictlySemistable;
                v.witness =
                    TwoStepWitness{{detail::mask_to_set(SV, p), detail::mask_to_set(SW, q)}, 0};
            }
        }
    return v;
}

// Isotropic psi-invariant coordinate subbundles must have nonpositive
// degree; polystability additionally requires an invariant coisotropic
// complement at every degree-zero tie.
inline Verdict ustar_check(const SymplHiggsObject& O) {
    std::size_t n = O.W.rank();
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;
    auto isotropic = [&](std::uint32_t S) {
        for (const auto& [a, b] : O.Omega)
            if (((S >> a) & 1u) && ((S >> b) & 1u)) return false;
        return true;
    };
    Verdict v;
    v.status = Status::Stable;
    for (std::uint32_t S = 1; S < full; ++S) {
        if (!isotropic(S) || !detail::endo_invariant(O.psi, S)) continue;
        long dS = detail::mask_degree(O.ctx, O.W, S);
        if (dS > 0) {
            v.status = Status::Unstable;
            v.witness = TwoStepWitness{{detail::mask_to_set(S, n), detail::mask_to_set(S, n)}, -dS};
            return v;
        }
        if (dS == 0 && v.status == Status::Stable) {
            v.status = Status::StrictlySemistable;
            v.witness = TwoStepWitness{{detail::mask_to_set(S, n), detail::mask_to_set(S, n)}, 0};
        }
    }
    return v;
}

inline bool ustar_polystable(const SymplHiggsObject& O) {
    if (ustar_check(O).status == Status::Unstable) return false;
    std::size_t n = O.W.rank();
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;
    auto isotropic = [&](std::uint32_t S) {
        for (const auto& [a, b] : O.Omega)
            if (((S >> a) & 1u) && ((S >> b) & 1u)) return false;
        return true;
    };
    auto coisotropic = [&](std::uint32_t S) {
        // S^perp = vertices with no Omega edge into S; coisotropic when
        // S^perp is contained in S.
        for (std::size_t vtx = 0; vtx < n; ++vtx) {
            if ((S >> vtx) & 1u) continue;
            bool hits = false;
            for (const auto& [a, b] : O.Omega) {
                std::size_t other = (a == vtx) ? b : (b == vtx ? a : n);
                if (other < n && ((S >> other) & 1u)) { hits = true; break; }
            }
            if (!hits) return false; // vtx in S^perp but outside S
        }
        return true;
    };
    for (std::uint32_t S = 1; S < full; ++S) {
        if (!isotropic(S) || !detail::endo_invariant(O.psi, S)) continue;
        if (detail::mask_degree(O.ctx, O.W, S) != 0) continue;
        std::uint32_t C = full & ~S;
        if (!coisotropic(C) || !detail::endo_invariant(O.psi, C)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Dispatcher mirroring the appendix kinds.
// ---------------------------------------------------------------------------

enum class AuxKind { GL, SL, SOC, Upq, UStar };

struct AuxObject {
    AuxKind kind;
    std::optional<EndoHiggsObject> endo;   // GL / SL
    std::optional<OrthHiggsObject> orth;   // SOC
    std::optional<PairHiggsObject> pair;   // Upq
    std::optional<SymplHiggsObject> sympl; // UStar
};

inline Verdict aux_check(const AuxObject& O) {
    switch (O.kind) {
        case AuxKind::GL:
        case AuxKind::SL:
            if (!O.endo) throw std::invalid_argument("aux_check: missing endo data");
            return gl_check(*O.endo);
        case AuxKind::SOC:
            if (!O.orth) throw std::invalid_argument("aux_check: missing orthogonal data");
            return so_check(*O.orth);
        case AuxKind::Upq:
            if (!O.pair) throw std::invalid_argument("aux_check: missing pair data");
            return upq_check(*O.pair);
        case AuxKind::UStar:
            if (!O.sympl) throw std::invalid_argument("aux_check: missing symplectic data");
            return ustar_check(*O.sympl);
    }
    throw std::invalid_argument("aux_check: unsupported kind");
}

// View the orthogonal object attached to a split Higgs object through the
// SO(2n,C) checker.
inline OrthHiggsObject orthogonal_view(const SOStarHiggsObject& H) {
    AssociatedComplexHiggs A = associated_so(H);
    OrthHiggsObject O;
    O.ctx = H.ctx;
    O.E = A.E;
    O.Phi = A.Phi_support;
    O.pairing.resize(2 * A.n);
    for (std::size_t i = 0; i < A.n; ++i) {
        O.pairing[i] = A.n + i;
        O.pairing[A.n + i] = i;
    }
    return O;
}

inline EndoHiggsObject linear_view(const SOStarHiggsObject& H) {
    AssociatedComplexHiggs A = associated_sl(H);
    return EndoHiggsObject{H.ctx, A.E, A.Phi_support};
}

} // namespace sostar
