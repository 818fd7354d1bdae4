#pragma once

#include "sostar/aux_checkers.hpp"
#include "sostar/cayley.hpp"
#include "sostar/lie.hpp"
#include "sostar/stability.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace sostar {

// ---------------------------------------------------------------------------
// Rank 1.
// ---------------------------------------------------------------------------

// Rank-one objects carry no Higgs field; only the degree decides.  Here
// semistability promotes to stability: no filtration with a proper nonzero
// subbundle exists in rank one.
inline Verdict so2_check(const CurveContext& ctx, const LineSymbol& L) {
    long d = L.degree(ctx);
    Verdict v;
    if (d == 0) {
        v.status = Status::Stable;
        return v;
    }
    v.status = Status::Unstable;
    if (d > 0)
        v.witness = TwoStepWitness{{{0}, {0}}, -d}; // 0 c L c L c L
    else
        v.witness = TwoStepWitness{{{}, {}}, d};    // 0 c 0 c 0 c L
    return v;
}

// ---------------------------------------------------------------------------
// Rank 2.
// ---------------------------------------------------------------------------

// Shortcut verdict: the sign of d selects the half of the Higgs field which
// must not vanish, and the rest is bundle (semi)stability of V.  Split rank-2
// bundles are never stable, so the verdict is Unstable or StrictlySemistable.
inline Verdict so4_stability(const SOStarHiggsObject& H) {
    if (H.rank() != 2) throw std::invalid_argument("so4_stability: rank must be 2");
    long d = toledo(H);
    long d0 = H.V.summands[0].degree(H.ctx);
    long d1 = H.V.summands[1].degree(H.ctx);
    long mx = std::max(d0, d1);
    Verdict v;
    v.repeated_labels_warning = has_repeated_labels(H);
    if (d > 0 && H.gamma_support.empty()) {
        v.status = Status::Unstable;
        v.witness = TwoStepWitness{{{0, 1}, {0, 1}}, -d};
        return v;
    }
    if (d < 0 && H.beta_support.empty()) {
        v.status = Status::Unstable;
        v.witness = TwoStepWitness{{{}, {}}, d};
        return v;
    }
    if (2 * mx > d) {
        std::size_t i = (d0 >= d1) ? 0 : 1;
        v.status = Status::Unstable;
        v.witness = TwoStepWitness{{{i}, {i}}, d - 2 * mx};
        return v;
    }
    v.status = Status::StrictlySemistable;
    v.witness = TwoStepWitness{{{0}, {0}}, 0};
    return v;
}

// Square root of a symbol, when one exists in the context: all exponents
// even, with an odd power of K absorbed through K^{1/2}.
inline std::optional<LineSymbol> half_symbol(const CurveContext& ctx, const LineSymbol& L) {
    LineSymbol half;
    for (const auto& [name, e] : L.exps) {
        if (name == kCanonical) continue;
        if (e % 2 != 0) return std::nullopt; // includes a stray K^{1/2} factor
        half.exps[name] = e / 2;
    }
    long ek = L.exponent(kCanonical);
    if (ek % 2 == 0) {
        if (ek != 0) half.exps[kCanonical] = ek / 2;
    } else {
        if (!ctx.has_k_half) return std::nullopt;
        // K^{2q+1} has square root K^q (x) K^{1/2}
        long q = (ek - 1) / 2;
        if (q != 0) half.exps[kCanonical] = q;
        half.exps[kHalfCanonical] = 1;
    }
    half.canonicalize();
    return half;
}

struct SL2RTriple {
    LineSymbol L;
    bool beta_t = false;  // section flag in L^2 (x) K
    bool gamma_t = false; // section flag in L^{-2} (x) K
};

struct So4Split {
    SplitBundle U; // trivial determinant
    SL2RTriple triple;
};

inline So4Split so4_split(const SOStarHiggsObject& H) {
    if (H.rank() != 2) throw std::invalid_argument("so4_split: rank must be 2");
    if (toledo(H) % 2 != 0)
        throw std::invalid_argument("so4_split: odd degree, the structure group does not lift");
    auto L = half_symbol(H.ctx, H.V.det());
    if (!L)
        throw std::invalid_argument("so4_split: no square-root symbol of det(V) in this context");
    So4Split s;
    s.U = H.V.tensored(dual(*L));
    s.triple.L = *L;
    s.triple.beta_t = !H.beta_support.empty();
    s.triple.gamma_t = !H.gamma_support.empty();
    return s;
}

inline SOStarHiggsObject so4_compose(const CurveContext& ctx, const So4Split& s) {
    SOStarHiggsObject H;
    H.ctx = ctx;
    H.V = s.U.tensored(s.triple.L);
    if (s.triple.beta_t) H.beta_support.insert({0, 1});
    if (s.triple.gamma_t) H.gamma_support.insert({0, 1});
    return H;
}

// ---------------------------------------------------------------------------
// Rank 3: the interior-product correspondence.
// ---------------------------------------------------------------------------

struct U13Object {
    LineSymbol L; // det W for objects coming from rank 3
    SplitBundle W;
    std::array<bool, 3> beta_t{};  // components of W -> L (x) K
    std::array<bool, 3> gamma_t{}; // components of L -> W (x) K
    std::optional<ExactMatrix> beta_vec;  // 1 x 3 row, when coefficients exist
    std::optional<ExactMatrix> gamma_vec; // 3 x 1 column
};

namespace detail {

inline GaussianRational coeff_or_zero(const std::map<SupportEntry, GaussianRational>& c,
                                      std::size_t i, std::size_t j) {
    auto it = c.find({i, j});
    return it == c.end() ? GaussianRational(0) : it->second;
}

} // namespace detail

// (V, beta, gamma) -> (det V, V, beta~, gamma~): component j of the vectors
// is carried by the entry on the complementary index pair, with the middle
// sign flipped:  gamma~ = (g23, -g13, g12)^t and beta~ = (b23, -b13, b12).
inline U13Object so6_to_u13(const SOStarHiggsObject& H) {
    if (H.rank() != 3) throw std::invalid_argument("so6_to_u13: rank must be 3");
    U13Object u;
    u.L = H.V.det();
    u.W = H.V;
    auto comp_pair = [](std::size_t j) -> SupportEntry {
        if (j == 0) return {1, 2};
        if (j == 1) return {0, 2};
        return {0, 1};
    };
    for (std::size_t j = 0; j < 3; ++j) {
        u.beta_t[j] = H.beta_support.count(comp_pair(j)) > 0;
        u.gamma_t[j] = H.gamma_support.count(comp_pair(j)) > 0;
    }
    {
        // A missing coefficient on a support entry counts as zero.
        ExactMatrix bv(1, 3), gv(3, 1);
        GaussianRational b12 = detail::coeff_or_zero(H.beta_coeff, 0, 1);
        GaussianRational b13 = detail::coeff_or_zero(H.beta_coeff, 0, 2);
        GaussianRational b23 = detail::coeff_or_zero(H.beta_coeff, 1, 2);
        GaussianRational g12 = detail::coeff_or_zero(H.gamma_coeff, 0, 1);
        GaussianRational g13 = detail::coeff_or_zero(H.gamma_coeff, 0, 2);
        GaussianRational g23 = detail::coeff_or_zero(H.gamma_coeff, 1, 2);
        bv.at(0, 0) = b23; bv.at(0, 1) = -b13; bv.at(0, 2) = b12;
        gv.at(0, 0) = g23; gv.at(1, 0) = -g13; gv.at(2, 0) = g12;
        u.beta_vec = bv;
        u.gamma_vec = gv;
    }
    return u;
}

inline PairHiggsObject u13_pair_view(const CurveContext& ctx, const U13Object& u) {
    PairHiggsObject P;
    P.ctx = ctx;
    P.Vt.summands.push_back(u.L);
    P.Wt = u.W;
    for (std::size_t j = 0; j < 3; ++j) {
        if (u.beta_t[j]) P.beta.insert({0, j});
        if (u.gamma_t[j]) P.gamma.insert({0, j});
    }
    return P;
}

inline Verdict u13_check(const SOStarHiggsObject& H) {
    return upq_check(u13_pair_view(H.ctx, so6_to_u13(H)));
}

namespace detail {

inline ExactMatrix skew3(const GaussianRational& e12, const GaussianRational& e13,
                         const GaussianRational& e23) {
    ExactMatrix m(3, 3);
    m.at(0, 1) = e12;  m.at(1, 0) = -e12;
    m.at(0, 2) = e13;  m.at(2, 0) = -e13;
    m.at(1, 2) = e23;  m.at(2, 1) = -e23;
    return m;
}

inline bool is_conformal_identity(const ExactMatrix& M, GaussianRational& scale) {
    if (M.rows() != M.cols()) return false;
    scale = M.at(0, 0);
    if (scale.im != 0 || scale.re <= 0) return false;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (i == j && M.at(i, j) != scale) return false;
            if (i != j && !M.at(i, j).is_zero()) return false;
        }
    return true;
}

} // namespace detail

// Exact verification of the four bilinear identities relating the skew
// matrices to their interior-product vectors, in a unitary frame (a positive
// rational conformal factor on the identity metric is allowed; it cancels on
// both sides).
inline bool u13_identities_check(const ExactMatrix& beta, const ExactMatrix& gamma,
                                 const ExactMatrix& metric) {
    if (beta.rows() != 3 || beta.cols() != 3 || gamma.rows() != 3 || gamma.cols() != 3)
        throw std::invalid_argument("u13_identities_check: expected 3 x 3 matrices");
    if (!(beta + beta.transpose()).is_zero() || !(gamma + gamma.transpose()).is_zero())
        throw std::invalid_argument("u13_identities_check: inputs must be skew");
    GaussianRational scale;
    if (!detail::is_conformal_identity(metric, scale))
        throw std::invalid_argument(
            "u13_identities_check: the displayed identities live in a unitary frame; "
            "metric must be a positive multiple of the identity");

    ExactMatrix gv(3, 1), bv(1, 3);
    gv.at(0, 0) = gamma.at(1, 2);
    gv.at(1, 0) = -gamma.at(0, 2);
    gv.at(2, 0) = gamma.at(0, 1);
    bv.at(0, 0) = beta.at(1, 2);
    bv.at(0, 1) = -beta.at(0, 2);
    bv.at(0, 2) = beta.at(0, 1);

    ExactMatrix I3 = ExactMatrix::identity(3);
    ExactMatrix gvc = gv.conjugate_transpose(); // 1 x 3
    ExactMatrix bvc = bv.conjugate_transpose(); // 3 x 1

    // gamma* gamma = gamma~ gamma~* + (gamma~* gamma~) I
    GaussianRational gscalar = (gvc * gv).at(0, 0);
    if (gamma.conjugate_transpose() * gamma + gv * gvc != gscalar * I3) return false;
    // beta beta* = beta~* beta~ + (beta~ beta~*) I
    GaussianRational bscalar = (bv * bvc).at(0, 0);
    if (beta * beta.conjugate_transpose() + bvc * bv != bscalar * I3) return false;
    // trace relations
    if ((gv * gvc).trace() != gscalar) return false;
    if ((bvc * bv).trace() != bscalar) return false;
    return true;
}

// Adjoints of the interior-product vectors are unchanged when both metrics
// are rescaled by the same positive factor.
inline bool conformal_invariance_check(const ExactMatrix& beta_vec, const ExactMatrix& gamma_vec,
                                       const Rational& exp_u) {
    if (exp_u <= 0) throw std::invalid_argument("conformal factor must be positive");
    if (beta_vec.rows() != 1 || beta_vec.cols() != 3 || gamma_vec.rows() != 3 ||
        gamma_vec.cols() != 1)
        throw std::invalid_argument("conformal_invariance_check: expected a 1x3 row and 3x1 column");
    // A fixed non-identity rational metric exercises the sandwich form.
    ExactMatrix H(3, 3);
    H.at(0, 0) = GaussianRational(2);
    H.at(1, 1) = GaussianRational(Rational(3, 2));
    H.at(2, 2) = GaussianRational(1);
    H.at(0, 1) = GaussianRational(Rational(1, 2));
    H.at(1, 0) = GaussianRational(Rational(1, 2));
    ExactMatrix h(1, 1);
    h.at(0, 0) = GaussianRational(Rational(5, 4));
    GaussianRational c{exp_u, Rational(0)};

    ExactMatrix adj_g = metric_adjoint(gamma_vec, h, H);          // (det V -> V)* : V -> det V
    ExactMatrix adj_g_scaled = metric_adjoint(gamma_vec, c * h, c * H);
    if (adj_g != adj_g_scaled) return false;
    ExactMatrix adj_b = metric_adjoint(beta_vec, H, h);           // (V -> det V)*
    ExactMatrix adj_b_scaled = metric_adjoint(beta_vec, c * H, c * h);
    return adj_b == adj_b_scaled;
}

// ---------------------------------------------------------------------------
// Lifting criteria between the three rank-3 groups.
// ---------------------------------------------------------------------------

enum class LiftPair { PU13_to_SOstar6, PU13_to_SU13, SOstar6_to_SU13 };

inline bool lift_criteria(LiftPair pair, const Rational& tau) {
    auto is_integer = [&](const Rational& r) { return rat_den(r) == 1; };
    auto is_even_integer = [&](const Rational& r) {
        return rat_den(r) == 1 && rat_num(r) % 2 == 0;
    };
    switch (pair) {
        case LiftPair::PU13_to_SOstar6: return is_integer(tau);
        case LiftPair::PU13_to_SU13: return is_even_integer(tau);
        case LiftPair::SOstar6_to_SU13: return is_even_integer(tau);
    }
    throw std::invalid_argument("lift_criteria: unknown pair");
}

// ---------------------------------------------------------------------------
// The maximal rank-3 factorization: kernel line, rank-2 core split into a
// trivial-determinant bundle and a triple in the Teichmueller shape.
// ---------------------------------------------------------------------------

struct So6MaximalFactor {
    LineSymbol jacobian_line;
    SL2RTriple triple;
    SplitBundle U;
    long dim_report = 0;          // 7g - 6
    long sqrt_choices_log2 = 0;   // 2g: points of order two
};

inline So6MaximalFactor so6_maximal_factor(const SOStarHiggsObject& H) {
    if (H.rank() != 3) throw std::invalid_argument("so6_maximal_factor: rank must be 3");
    long g = H.ctx.genus;
    if (toledo(H) != 2 * g - 2)
        throw std::invalid_argument("so6_maximal_factor: Toledo invariant is not maximal");
    RigidityDecomposition R = rigidity_decompose(H);
    So4Split s = so4_split(R.core);
    So6MaximalFactor f;
    f.jacobian_line = R.kernel_line;
    f.triple = s.triple;
    f.U = s.U;
    f.dim_report = 7 * g - 6;
    f.sqrt_choices_log2 = 2 * g;
    return f;
}

} // namespace sostar
