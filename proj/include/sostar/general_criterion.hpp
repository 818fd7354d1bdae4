#pragma once

#include "sostar/stability.hpp"

#include <optional>
#include <vector>

namespace sostar {

// ---------------------------------------------------------------------------
// Exact linear feasibility over the rationals: phase-1 simplex with Bland's
// rule on the system {coeff . x <= bound, x free}.  Free variables are split
// into nonnegative pairs; a feasible point is recovered from the basis.
// ---------------------------------------------------------------------------

struct LinearConstraint {
    std::vector<Rational> coeff; // coeff . x <= bound
    Rational bound;
};

inline std::optional<std::vector<Rational>> solve_feasible(
    const std::vector<LinearConstraint>& cons, std::size_t nvars) {
    const std::size_t m = cons.size();
    if (m == 0) return std::vector<Rational>(nvars, Rational(0));

    // columns: x+ (nvars) | x- (nvars) | slack (m) | artificial (<= m)
    std::size_t slack0 = 2 * nvars;
    std::size_t art0 = slack0 + m;
    std::vector<std::size_t> art_col(m, 0);
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (cons[i].bound < 0) art_col[i] = art0 + n_art++;
    std::size_t ncols = art0 + n_art;

    // tableau rows: [coeffs | rhs], rhs >= 0 after sign normalization
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(ncols + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = cons[i].bound < 0;
        Rational sgn(flip ? -1 : 1);
        for (std::size_t j = 0; j < nvars; ++j) {
            T[i][j] = sgn * cons[i].coeff[j];
            T[i][nvars + j] = -T[i][j];
        }
        T[i][slack0 + i] = sgn; // flipped rows get a surplus column
        T[i][ncols] = sgn * cons[i].bound;
        if (flip) {
            T[i][art_col[i]] = Rational(1);
            basis[i] = art_col[i];
        } else {
            basis[i] = slack0 + i;
        }
    }

    // phase-1 objective: minimize the sum of artificials.  z[j] holds the
    // reduced cost of column j; value is the current objective.
    std::vector<Rational> z(ncols, Rational(0));
    Rational value(0);
    for (std::size_t j = art0; j < ncols; ++j) z[j] = Rational(1); // costs
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < art0) continue;
        for (std::size_t j = 0; j < ncols; ++j) z[j] -= T[i][j];
        value -= T[i][ncols];
    }

    while (true) {
        // Bland's rule: the lowest-index column with a negative reduced cost
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j)
            if (z[j] < 0) { enter = j; break; }
        if (enter == ncols) break;
        // ratio test, lowest basis index breaking ties
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][ncols] / T[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) break; // unbounded phase-1 cannot happen; stop safely
        // pivot
        Rational piv = T[leave][enter];
        for (std::size_t j = 0; j <= ncols; ++j) T[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j) T[i][j] -= f * T[leave][j];
        }
        Rational zf = z[enter];
        if (zf != 0) {
            for (std::size_t j = 0; j < ncols; ++j) z[j] -= zf * T[leave][j];
            value -= zf * T[leave][ncols];
        }
        basis[leave] = enter;
    }
    if (value != 0) return std::nullopt; // artificials stuck: infeasible

    std::vector<Rational> x(nvars, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < nvars) x[basis[i]] += T[i][ncols];
        else if (basis[i] < 2 * nvars) x[basis[i] - nvars] -= T[i][ncols];
    }
    return x;
}

// ---------------------------------------------------------------------------
// The weighted-filtration criterion on coordinate chains.
// ---------------------------------------------------------------------------

namespace detail {

// Enumerate strictly increasing chains of nonempty coordinate subsets ending
// at the full set, with at most max_len subsets.
inline void enumerate_chains(std::size_t n, std::size_t max_len,
                             const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    std::uint32_t full = (n ? (1u << n) : 1u) - 1u;
    std::vector<std::uint32_t> chain;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t last) {
        if (chain.size() + 1 <= max_len) {
            chain.push_back(full);
            fn(chain);
            chain.pop_back();
        }
        if (chain.size() + 2 > max_len) return;
        // next strict superset of `last`, proper subset of full
        for (std::uint32_t s = last + 1; s < full; ++s) {
            if ((s & last) != last) continue;
            chain.push_back(s);
            rec(s);
            chain.pop_back();
        }
    };
    // chains starting with any nonempty proper subset, or just (full)
    fn(std::vector<std::uint32_t>{full});
    for (std::uint32_t s = 1; s < full; ++s) {
        chain.assign(1, s);
        rec(s);
        chain.clear();
    }
}

struct ChainData {
    std::vector<IndexSet> sets;
    std::vector<std::size_t> level; // per summand: least chain index containing it
    std::vector<long> degrees;      // degree of each chain subset
};

inline ChainData chain_data(const SOStarHiggsObject& H, const std::vector<std::uint32_t>& chain) {
    ChainData cd;
    std::size_t n = H.rank();
    cd.level.assign(n, 0);
    for (std::size_t k = 0; k < chain.size(); ++k) {
        cd.sets.push_back(mask_to_set(chain[k], n));
        cd.degrees.push_back(subset_degree(H, cd.sets.back()));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < chain.size(); ++k)
            if ((chain[k] >> a) & 1u) { cd.level[a] = k; break; }
    return cd;
}

// Invariance constraints: beta entry (a,b) needs lambda_{l(a)} + lambda_{l(b)} <= 0,
// gamma entry needs >= 0.  Monotonicity: lambda_{k+1} - lambda_k >= 1 (any
// strictly increasing weight vector can be rescaled into this normal form,
// and both the constraints and the defect are homogeneous).
inline std::vector<LinearConstraint> invariance_constraints(const SOStarHiggsObject& H,
                                                            const ChainData& cd) {
    std::size_t k = cd.sets.size();
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        LinearConstraint c;
        c.coeff.assign(k, Rational(0));
        c.coeff[i] = 1;
        c.coeff[i + 1] = -1;
        c.bound = -1;
        cons.push_back(std::move(c));
    }
    for (const auto& [a, b] : H.beta_support) {
        LinearConstraint c;
        c.coeff.assign(k, Rational(0));
        c.coeff[cd.level[a]] += 1;
        c.coeff[cd.level[b]] += 1;
        c.bound = 0;
        cons.push_back(std::move(c));
    }
    for (const auto& [a, b] : H.gamma_support) {
        LinearConstraint c;
        c.coeff.assign(k, Rational(0));
        c.coeff[cd.level[a]] -= 1;
        c.coeff[cd.level[b]] -= 1;
        c.bound = 0;
        cons.push_back(std::move(c));
    }
    return cons;
}

// d(V,lambda) = lambda_k deg V_k + sum_{j<k} (lambda_j - lambda_{j+1}) deg V_j
// has lambda_j coefficient deg V_j - deg V_{j-1}.
inline std::vector<Rational> defect_coeffs(const ChainData& cd) {
    std::size_t k = cd.sets.size();
    std::vector<Rational> c(k);
    for (std::size_t j = 0; j < k; ++j)
        c[j] = Rational(cd.degrees[j] - (j ? cd.degrees[j - 1] : 0));
    return c;
}

inline Rational defect_value(const ChainData& cd, const std::vector<Rational>& lambda) {
    auto c = defect_coeffs(cd);
    Rational d(0);
    for (std::size_t j = 0; j < c.size(); ++j) d += c[j] * lambda[j];
    return d;
}

} // namespace detail

// Decision procedure for the full weighted-filtration criterion restricted
// to coordinate chains of length at most max_len.  Scale invariance reduces
// the search over real weights to exact rational feasibility problems.
inline Verdict check_general_criterion(const SOStarHiggsObject& H, std::size_t max_len) {
    std::size_t n = H.rank();
    if (n > 10)
        throw std::invalid_argument("check_general_criterion: chain enumeration supports rank <= 10");
    if (max_len == 0) max_len = n;

    std::optional<WeightedWitness> unstable_wit;
    std::optional<WeightedWitness> zero_wit;

    detail::enumerate_chains(n, max_len, [&](const std::vector<std::uint32_t>& chain) {
        if (unstable_wit) return;
        detail::ChainData cd = detail::chain_data(H, chain);
        std::size_t k = cd.sets.size();
        auto base = detail::invariance_constraints(H, cd);
        auto dcoef = detail::defect_coeffs(cd);

        // Violation of semistability: some admissible lambda with d <= -1.
        {
            auto cons = base;
            LinearConstraint obj;
            obj.coeff = dcoef;
            obj.bound = -1;
            cons.push_back(obj);
            if (auto pt = solve_feasible(cons, k)) {
                unstable_wit = WeightedWitness{cd.sets, *pt, detail::defect_value(cd, *pt)};
                return;
            }
        }
        if (zero_wit) return;
        // Violation of strictness: a nontrivial admissible lambda with d <= 0.
        // Chains of length 1 are only nontrivial for lambda != 0; both signs
        // are covered by lambda = +-1.
        if (k == 1) {
            for (int sgn : {+1, -1}) {
                if (sgn > 0 && !H.beta_support.empty()) continue;
                if (sgn < 0 && !H.gamma_support.empty()) continue;
                Rational l0(sgn);
                Rational d = Rational(cd.degrees[0]) * l0;
                if (d <= 0) {
                    zero_wit = WeightedWitness{cd.sets, {l0}, d};
                    break;
                }
            }
        } else {
            auto cons = base;
            LinearConstraint obj;
            obj.coeff = dcoef;
            obj.bound = 0;
            cons.push_back(obj);
            if (auto pt = solve_feasible(cons, k))
                zero_wit = WeightedWitness{cd.sets, *pt, detail::defect_value(cd, *pt)};
        }
    });

    Verdict v;
    v.repeated_labels_warning = has_repeated_labels(H);
    if (unstable_wit) {
        v.status = Status::Unstable;
        v.weighted_witness = unstable_wit;
        return v;
    }
    if (zero_wit) {
        v.status = Status::StrictlySemistable;
        v.weighted_witness = zero_wit;
        return v;
    }
    v.status = Status::Stable;
    if (v.repeated_labels_warning) {
        v.status = Status::StrictlySemistable;
        v.note = "repeated summand labels: verdict capped at StrictlySemistable";
    }
    return v;
}

} // namespace sostar
