#pragma once

#include "sostar/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sostar {

// Matrix data attached to a fixed rank n: the defining form J_n, the
// conjugation T into the (n,n)-signature picture, and the signature matrix
// I_{n,n}.  All three are exact.
struct GroupContext {
    std::size_t n;
    ExactMatrix J;   // ((0, I), (-I, 0))
    ExactMatrix T;   // ((I, iI), (I, -iI))
    ExactMatrix Inn; // diag(I, -I)

    explicit GroupContext(std::size_t rank) : n(rank) {
        ExactMatrix id = ExactMatrix::identity(n);
        ExactMatrix z = ExactMatrix::zero(n, n);
        J = ExactMatrix::from_blocks(z, id, -id, z);
        ExactMatrix iI = GaussianRational::i() * id;
        T = ExactMatrix::from_blocks(id, iI, id, -iI);
        Inn = ExactMatrix::from_blocks(id, z, z, -id);
    }
};

inline void require_dim(const GroupContext& ctx, const ExactMatrix& m, const char* what) {
    if (m.rows() != 2 * ctx.n || m.cols() != 2 * ctx.n)
        throw std::invalid_argument(std::string(what) + ": expected a 2n x 2n matrix");
}

// Group membership: g^t J conj(g) = J, g^t g = I and det g = 1.
inline bool is_group_element(const GroupContext& ctx, const ExactMatrix& g) {
    require_dim(ctx, g, "is_group_element");
    ExactMatrix gt = g.transpose();
    if (gt * ctx.J * g.conjugate() != ctx.J) return false;
    if (gt * g != ExactMatrix::identity(2 * ctx.n)) return false;
    return determinant(g) == GaussianRational(1);
}

// Linearized relations: X^t + X = 0 and X^t J + J conj(X) = 0.
inline bool is_algebra_element(const GroupContext& ctx, const ExactMatrix& X) {
    require_dim(ctx, X, "is_algebra_element");
    ExactMatrix Xt = X.transpose();
    if (!(Xt + X).is_zero()) return false;
    return (Xt * ctx.J + ctx.J * X.conjugate()).is_zero();
}

// theta(X) = J X J^{-1}; J^{-1} = -J.
inline ExactMatrix cartan_involution(const GroupContext& ctx, const ExactMatrix& X) {
    require_dim(ctx, X, "cartan_involution");
    return ctx.J * X * (-ctx.J);
}

struct CartanSplit {
    ExactMatrix h_part; // fixed by theta
    ExactMatrix m_part; // negated by theta
};

inline CartanSplit cartan_split(const GroupContext& ctx, const ExactMatrix& X) {
    if (!is_algebra_element(ctx, X))
        throw std::invalid_argument("cartan_split: input is not in the algebra");
    ExactMatrix tX = cartan_involution(ctx, X);
    GaussianRational half(Rational(1, 2));
    return {half * (X + tX), half * (X - tX)};
}

inline ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b) {
    return a * b - b * a;
}

// A + iB  ->  ((A, B), (-B, A)).  A and B must be real n x n with A + iB
// unitary; both are verified exactly.
inline ExactMatrix embed_unitary(const GroupContext& ctx, const ExactMatrix& A,
                                 const ExactMatrix& B) {
    if (A.rows() != ctx.n || A.cols() != ctx.n || B.rows() != ctx.n || B.cols() != ctx.n)
        throw std::invalid_argument("embed_unitary: expected n x n blocks");
    ExactMatrix U(ctx.n, ctx.n);
    for (std::size_t i = 0; i < ctx.n; ++i)
        for (std::size_t j = 0; j < ctx.n; ++j) {
            if (A.at(i, j).im != 0 || B.at(i, j).im != 0)
                throw std::invalid_argument("embed_unitary: A and B must be real");
            U.at(i, j) = GaussianRational(A.at(i, j).re, B.at(i, j).re);
        }
    if (U.conjugate_transpose() * U != ExactMatrix::identity(ctx.n))
        throw std::invalid_argument("embed_unitary: A + iB is not unitary");
    return ExactMatrix::from_blocks(A, B, -B, A);
}

// Z  ->  (1/2) ((Z + Z^{-t},    -i(Z - Z^{-t})),
//               (i(Z - Z^{-t}),  Z + Z^{-t}))
// The off-diagonal sign is pinned by the requirement that a unitary Z = A+iB
// restricts to the ((A, B), (-B, A)) embedding.
inline ExactMatrix embed_gl(const GroupContext& ctx, const ExactMatrix& Z) {
    if (Z.rows() != ctx.n || Z.cols() != ctx.n)
        throw std::invalid_argument("embed_gl: expected an n x n matrix");
    ExactMatrix Zti = invert(Z).transpose();
    GaussianRational half(Rational(1, 2));
    ExactMatrix P = half * (Z + Zti);
    ExactMatrix Q = half * (GaussianRational(0, -1) * (Z - Zti));
    return ExactMatrix::from_blocks(P, Q, -Q, P);
}

inline ExactMatrix cayley_conjugate(const GroupContext& ctx, const ExactMatrix& M) {
    require_dim(ctx, M, "cayley_conjugate");
    return ctx.T * M * invert(ctx.T);
}

// Isotropy action of g in GL(n,C) on (beta, gamma):
// beta -> g beta g^t, gamma -> g^{-t} gamma g^{-1}.
inline std::pair<ExactMatrix, ExactMatrix> isotropy_act(const ExactMatrix& g,
                                                        const ExactMatrix& beta,
                                                        const ExactMatrix& gamma) {
    if (!g.is_square() || beta.rows() != g.rows() || beta.cols() != g.rows() ||
        gamma.rows() != g.rows() || gamma.cols() != g.rows())
        throw std::invalid_argument("isotropy_act: shape mismatch");
    if (!(beta + beta.transpose()).is_zero() || !(gamma + gamma.transpose()).is_zero())
        throw std::invalid_argument("isotropy_act: beta and gamma must be skew");
    ExactMatrix ginv = invert(g); // throws on singular g
    ExactMatrix ginvt = ginv.transpose();
    return {g * beta * g.transpose(), ginvt * gamma * ginv};
}

// Pointwise Higgs-field data in a local frame: skew n x n coefficient
// matrices and the Gram matrix of the fiber metric.
struct HiggsFieldMatrices {
    ExactMatrix beta;
    ExactMatrix gamma;
    ExactMatrix metric; // hermitian positive-definite

    HiggsFieldMatrices(ExactMatrix b, ExactMatrix g, ExactMatrix h)
        : beta(std::move(b)), gamma(std::move(g)), metric(std::move(h)) {
        std::size_t n = metric.rows();
        if (beta.rows() != n || beta.cols() != n || gamma.rows() != n || gamma.cols() != n)
            throw std::invalid_argument("HiggsFieldMatrices: shape mismatch");
        if (!(beta + beta.transpose()).is_zero() || !(gamma + gamma.transpose()).is_zero())
            throw std::invalid_argument("HiggsFieldMatrices: beta and gamma must be skew");
        if (!is_positive_definite(metric))
            throw std::invalid_argument("metric not hermitian positive-definite");
    }
};

// Adjoint of M : A -> B with Gram matrices h_src on A and h_dst on B:
// M* = h_src^{-1} M^dagger h_dst.  The identity metric is the special case
// h = I, not a separate code path.
inline ExactMatrix metric_adjoint(const ExactMatrix& M, const ExactMatrix& h_src,
                                  const ExactMatrix& h_dst) {
    return invert(h_src) * M.conjugate_transpose() * h_dst;
}

// Gram matrix of the metric induced on the dual frame.
inline ExactMatrix dual_metric(const ExactMatrix& h) {
    return invert(h.transpose());
}

inline ExactMatrix beta_adjoint(const HiggsFieldMatrices& f) {
    // beta maps the dual into the bundle.
    return metric_adjoint(f.beta, dual_metric(f.metric), f.metric);
}

inline ExactMatrix gamma_adjoint(const HiggsFieldMatrices& f) {
    return metric_adjoint(f.gamma, f.metric, dual_metric(f.metric));
}

// The h-valued form [phi, tau_h(phi)] with phi = ((0, beta), (gamma, 0)),
// computed as an honest commutator, so it is block-diagonal and traceless by
// construction.  In the dz ^ dzbar trivialization the blocks read
// (-beta beta* + gamma* gamma, beta* beta - gamma gamma*).
inline ExactMatrix hitchin_bracket(const HiggsFieldMatrices& f) {
    std::size_t n = f.metric.rows();
    ExactMatrix z = ExactMatrix::zero(n, n);
    ExactMatrix phi = ExactMatrix::from_blocks(z, f.beta, f.gamma, z);
    ExactMatrix big = ExactMatrix::from_blocks(f.metric, z, z, dual_metric(f.metric));
    ExactMatrix tau_phi = -(invert(big) * phi.conjugate_transpose() * big);
    return bracket(phi, tau_phi);
}

// Residual of the pointwise curvature equation on V: with F the curvature
// coefficient in the same trivialization, returns
// F + beta beta* - gamma* gamma, which vanishes exactly when the equation
// holds at the fiber.
inline ExactMatrix hitchin_residual(const HiggsFieldMatrices& f, const ExactMatrix& F) {
    std::size_t n = f.metric.rows();
    if (F.rows() != n || F.cols() != n)
        throw std::invalid_argument("hitchin_residual: curvature block must be n x n");
    return F + f.beta * beta_adjoint(f) - gamma_adjoint(f) * f.gamma;
}

} // namespace sostar
