#include "sostar/corpus.hpp"
#include "sostar/general_criterion.hpp"
#include "sostar/lowrank.hpp"
#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sostar;
using namespace sostar::testing;

TEST_CASE("so2_check") {
    CurveContext ctx(2, {{"L", 1}, {"M", -1}, {"Z", 0}}, false);
    CHECK(so2_check(ctx, LineSymbol::generator("Z")).status == Status::Stable);

    Verdict pos = so2_check(ctx, LineSymbol::generator("L"));
    CHECK(pos.status == Status::Unstable);
    REQUIRE(pos.witness);
    CHECK(pos.witness->filtration.S1 == IndexSet{0});
    CHECK(pos.witness->defect == -1);

    Verdict neg = so2_check(ctx, LineSymbol::generator("M"));
    CHECK(neg.status == Status::Unstable);
    REQUIRE(neg.witness);
    CHECK(neg.witness->filtration.S1.empty());
    CHECK(neg.witness->defect == -1);
}

TEST_CASE("so4_stability matches the general engine on rank-2 corpora") {
    CorpusParams params;
    params.n_max = 2;
    params.count = 200;
    auto corpus = corpus_generate(4242, params);
    std::size_t rank2 = 0;
    for (const auto& H : corpus) {
        if (H.rank() != 2) continue;
        ++rank2;
        INFO("degrees " << H.V.summands[0].degree(H.ctx) << ","
                        << H.V.summands[1].degree(H.ctx));
        CHECK(so4_stability(H).status == check_semistable(H).status);
    }
    CHECK(rank2 > 50);

    // shortcut rule: d > 0 with gamma = 0 is unstable
    SOStarHiggsObject H;
    H.ctx = CurveContext(2, {{"L", 1}}, true);
    LineSymbol L = LineSymbol::generator("L");
    H.V.summands = {L, tensor(LineSymbol::canonical(), dual(L))};
    CHECK(so4_stability(H).status == Status::Unstable);
    H.gamma_support = {{0, 1}};
    CHECK(so4_stability(H).status == Status::StrictlySemistable);
}

TEST_CASE("so4_split and reconstruction") {
    // maximal d = 2g-2 with gamma host O: Teichmueller shape
    SOStarHiggsObject H;
    H.ctx = CurveContext(2, {{"L", 1}}, true);
    LineSymbol L = LineSymbol::generator("L");
    H.V.summands = {L, tensor(LineSymbol::canonical(), dual(L))};
    H.gamma_support = {{0, 1}};
    H.beta_support = {{0, 1}};

    So4Split s = so4_split(H);
    CHECK(s.U.det().is_trivial());
    CHECK(s.triple.gamma_t);
    CHECK(s.triple.beta_t);
    // L^2 = det V = K: the chosen root is K^{1/2}
    CHECK(s.triple.L == LineSymbol::canonical_half());
    CHECK(tensor(s.triple.L, s.triple.L) == H.V.det());

    SOStarHiggsObject back = so4_compose(H.ctx, s);
    CHECK(back.V == H.V);
    CHECK(back.beta_support == H.beta_support);
    CHECK(back.gamma_support == H.gamma_support);

    // odd degree: no lift
    SOStarHiggsObject odd;
    odd.ctx = CurveContext(2, {{"A", 1}, {"B", 0}}, true);
    odd.V.summands = {LineSymbol::generator("A"), LineSymbol::generator("B")};
    CHECK_THROWS_WITH(so4_split(odd), Catch::Matchers::ContainsSubstring("does not lift"));

    // even degree but no square-root symbol
    SOStarHiggsObject nosqrt;
    nosqrt.ctx = CurveContext(2, {{"A", 1}, {"B", 1}}, true);
    nosqrt.V.summands = {LineSymbol::generator("A"), LineSymbol::generator("B")};
    CHECK_THROWS_WITH(so4_split(nosqrt), Catch::Matchers::ContainsSubstring("square-root"));
}

TEST_CASE("so4_split roundtrips on even-degree corpus instances") {
    CorpusParams params;
    params.n_max = 2;
    params.count = 150;
    auto corpus = corpus_generate(777888, params);
    std::size_t split_count = 0;
    for (const auto& H : corpus) {
        if (H.rank() != 2 || toledo(H) % 2 != 0) continue;
        if (!half_symbol(H.ctx, H.V.det())) continue;
        ++split_count;
        So4Split s = so4_split(H);
        CHECK(s.U.det().is_trivial());
        SOStarHiggsObject back = so4_compose(H.ctx, s);
        CHECK(back.V == H.V);
        CHECK(back.beta_support == H.beta_support);
        CHECK(back.gamma_support == H.gamma_support);
    }
    CHECK(split_count > 10);
}

TEST_CASE("so6_to_u13: structural transport and component formulas") {
    SOStarHiggsObject H;
    H.ctx = CurveContext(2, {{"a", 1}, {"b", 1}, {"c", 0}}, false);
    H.V.summands = {LineSymbol::generator("a"), LineSymbol::generator("b"),
                    LineSymbol::generator("c")};
    H.gamma_support = {{0, 1}};
    H.gamma_coeff[{0, 1}] = GaussianRational(5);
    H.beta_support = {{1, 2}};
    H.beta_coeff[{1, 2}] = GaussianRational(7);

    U13Object u = so6_to_u13(H);
    CHECK(u.L == H.V.det());
    CHECK(u.W == H.V);
    // gamma~ = (g23, -g13, g12)^t
    CHECK(u.gamma_t == std::array<bool, 3>{false, false, true});
    REQUIRE(u.gamma_vec);
    CHECK(u.gamma_vec->at(2, 0) == GaussianRational(5));
    CHECK(u.gamma_vec->at(0, 0) == GaussianRational(0));
    // beta~ = (b23, -b13, b12)
    CHECK(u.beta_t == std::array<bool, 3>{true, false, false});
    REQUIRE(u.beta_vec);
    CHECK(u.beta_vec->at(0, 0) == GaussianRational(7));

    // zero field maps to zero vectors
    SOStarHiggsObject Z = H;
    Z.gamma_support.clear();
    Z.gamma_coeff.clear();
    Z.beta_support.clear();
    Z.beta_coeff.clear();
    U13Object uz = so6_to_u13(Z);
    CHECK(uz.gamma_t == std::array<bool, 3>{false, false, false});
    CHECK(uz.gamma_vec->is_zero());
}

TEST_CASE("a stable rank-3 instance agrees across all three deciders") {
    // genus 4, balanced degrees, complete gamma pattern: every single-line
    // filtration has strictly positive defect and nothing else is invariant.
    SOStarHiggsObject H;
    H.ctx = CurveContext(4, {{"a", 1}, {"b", 1}, {"c", 1}}, false);
    H.V.summands = {LineSymbol::generator("a"), LineSymbol::generator("b"),
                    LineSymbol::generator("c")};
    H.gamma_support = {{0, 1}, {0, 2}, {1, 2}};
    REQUIRE(validate(H).empty());
    CHECK(check_semistable(H).status == Status::Stable);
    CHECK(check_general_criterion(H, 3).status == Status::Stable);
    CHECK(u13_check(H).status == Status::Stable);
    CHECK(so_check(orthogonal_view(H)).status == Status::Stable);
    // stable implies polystable with a single piece
    PolystableResult ps = check_polystable(H);
    CHECK(ps.outcome == PolystableResult::Outcome::Stable);
    auto types = classify_summands(H);
    REQUIRE(types.size() == 1);
    CHECK(types[0].kind == SummandKind::StableSOStar);
}

TEST_CASE("rank-3 verdicts agree with the interior-product image") {
    CorpusParams params;
    params.n_max = 3;
    params.count = 200;
    auto corpus = corpus_generate(1618, params);
    std::size_t rank3 = 0;
    for (const auto& H : corpus) {
        if (H.rank() != 3) continue;
        ++rank3;
        INFO("degree " << H.degree());
        CHECK(u13_check(H).status == check_semistable(H).status);
    }
    CHECK(rank3 > 40);
}

TEST_CASE("u13 identities: hand values and random exact inputs") {
    ExactMatrix I3 = ExactMatrix::identity(3);
    ExactMatrix z3 = ExactMatrix::zero(3, 3);
    CHECK(u13_identities_check(z3, z3, I3));

    // gamma entries (1, i, 2): the quoted instance
    ExactMatrix g = detail::skew3(GaussianRational(1), GaussianRational(0, 1),
                                  GaussianRational(2));
    CHECK(u13_identities_check(z3, g, I3));

    // two more pinned instances
    ExactMatrix g2 = detail::skew3(GaussianRational(Rational(1, 2)), GaussianRational(-3),
                                   GaussianRational(2, 5));
    ExactMatrix b2 = detail::skew3(GaussianRational(0, 2), GaussianRational(1, 1),
                                   GaussianRational(-1));
    CHECK(u13_identities_check(b2, g2, I3));
    ExactMatrix b3 = detail::skew3(GaussianRational(Rational(2, 3)), GaussianRational(0),
                                   GaussianRational(0, -1));
    CHECK(u13_identities_check(b3, z3, I3));

    // randomized exact sweep
    SplitMix64 rng(271828);
    for (int t = 0; t < 100; ++t) {
        ExactMatrix beta = random_skew(rng, 3);
        ExactMatrix gamma = random_skew(rng, 3);
        CHECK(u13_identities_check(beta, gamma, I3));
    }

    // conformal rescalings of the identity are accepted
    CHECK(u13_identities_check(b2, g2, GaussianRational(Rational(7, 3)) * I3));
    // other metrics are rejected: the displayed formulas live in a unitary frame
    ExactMatrix H = I3;
    H.at(0, 0) = GaussianRational(2);
    CHECK_THROWS_AS(u13_identities_check(b2, g2, H), std::invalid_argument);
    CHECK_THROWS_AS(u13_identities_check(I3, z3, I3), std::invalid_argument); // not skew
}

TEST_CASE("conformal invariance of the sandwich adjoints") {
    SplitMix64 rng(99991);
    for (int t = 0; t < 20; ++t) {
        ExactMatrix beta_vec = random_matrix(rng, 1, 3);
        ExactMatrix gamma_vec = random_matrix(rng, 3, 1);
        CHECK(conformal_invariance_check(beta_vec, gamma_vec, Rational(1)));
        CHECK(conformal_invariance_check(beta_vec, gamma_vec, Rational(7, 5)));
        CHECK(conformal_invariance_check(beta_vec, gamma_vec, Rational(22, 3)));
    }
    CHECK_THROWS_AS(conformal_invariance_check(ExactMatrix(1, 3), ExactMatrix(3, 1),
                                               Rational(-1)),
                    std::invalid_argument);
}

TEST_CASE("lift criteria truth table") {
    for (long num = -4; num <= 4; ++num) {
        Rational tau(num, 2); // -2, -3/2, ..., 2
        bool integer = (num % 2 == 0);
        bool even_integer = (num % 4 == 0);
        CHECK(lift_criteria(LiftPair::PU13_to_SOstar6, tau) == integer);
        CHECK(lift_criteria(LiftPair::PU13_to_SU13, tau) == even_integer);
        CHECK(lift_criteria(LiftPair::SOstar6_to_SU13, tau) == even_integer);
    }
    // monotone consistency: a lift through the smaller cover implies the
    // coarser integrality
    for (long d = -4; d <= 4; ++d) {
        Rational tau(d);
        if (lift_criteria(LiftPair::SOstar6_to_SU13, tau))
            CHECK(lift_criteria(LiftPair::PU13_to_SU13, tau));
    }
}

TEST_CASE("so6_maximal_factor composes the rigidity and even split") {
    SOStarHiggsObject H;
    H.ctx = CurveContext(2, {{"L", 1}, {"M", 0}}, true);
    LineSymbol L = LineSymbol::generator("L");
    H.V.summands = {L, tensor(LineSymbol::canonical(), dual(L)), LineSymbol::generator("M")};
    H.gamma_support = {{0, 1}};
    H.beta_support = {{0, 1}};

    So6MaximalFactor f = so6_maximal_factor(H);
    CHECK(f.jacobian_line == LineSymbol::generator("M"));
    CHECK(f.jacobian_line.degree(H.ctx) == 0);
    CHECK(f.U.det().is_trivial());
    CHECK(f.triple.L == LineSymbol::canonical_half());
    CHECK(f.triple.gamma_t);
    CHECK(f.triple.beta_t);
    CHECK(f.dim_report == 7 * 2 - 6);
    CHECK(f.sqrt_choices_log2 == 4);
    // bookkeeping against the alternative description: the twisted core
    // bundle has determinant K, the section hosts are O and K^2
    CHECK(f.U.tensored(LineSymbol::canonical_half()).det() == LineSymbol::canonical());
    LineSymbol beta_host = tensor(pow(f.triple.L, 2), LineSymbol::canonical());
    CHECK(beta_host == LineSymbol::canonical(2));
    LineSymbol gamma_host = tensor(pow(dual(f.triple.L), 2), LineSymbol::canonical());
    CHECK(gamma_host.is_trivial());

    SOStarHiggsObject notmax = H;
    notmax.V.summands[2] = LineSymbol::generator("L");
    CHECK_THROWS_AS(so6_maximal_factor(notmax), std::invalid_argument);
}
