#include "sostar/corpus.hpp"
#include "sostar/deformation.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sostar;

TEST_CASE("expected_dimension") {
    CHECK(expected_dimension(2, 2) == 6);
    CHECK(expected_dimension(3, 2) == 15);
    CHECK(expected_dimension(1, 2) == 1);
    CHECK(expected_dimension(1, 5) == 4);
    CHECK(expected_dimension(4, 3) == 56);
    CHECK_THROWS_AS(expected_dimension(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(expected_dimension(2, 1), std::invalid_argument);
}

TEST_CASE("rigid_dimension") {
    CHECK(rigid_dimension(1, 2) == 8);  // 7g-6 at g=2
    CHECK(rigid_dimension(1, 3) == 15); // 7g-6 at g=3
    CHECK(rigid_dimension(1, 4) == 22);
    CHECK(rigid_dimension(2, 2) == 30);
    for (long m = 1; m <= 3; ++m)
        for (long g = 2; g <= 4; ++g)
            CHECK(rigid_dimension(m, g) < expected_dimension(2 * m + 1, g));
}

TEST_CASE("complex_summary shapes") {
    SOStarHiggsObject H;
    H.ctx = CurveContext(2, {{"a", 1}, {"b", 0}}, false);
    H.V.summands = {LineSymbol::generator("a"), LineSymbol::generator("b")};

    DeformationComplexSummary S0 = complex_summary(H);
    CHECK(S0.left.rank() == 4);
    CHECK(S0.right.rank() == 2);
    CHECK(S0.map_pattern.empty());

    H.beta_support = {{0, 1}};
    DeformationComplexSummary S = complex_summary(H);
    CHECK_FALSE(S.map_pattern.empty());
    // every image index lands on the V side (first n(n-1)/2 summands)
    for (const auto& [src, dst] : S.map_pattern) {
        CHECK(src < 4);
        CHECK(dst < 1);
    }
}

TEST_CASE("complex_euler equals the closed dimension formula for all degrees") {
    CorpusParams params;
    params.n_max = 4;
    params.count = 60;
    auto corpus = corpus_generate(31337, params);
    for (const auto& H : corpus) {
        long n = static_cast<long>(H.rank());
        CHECK(complex_euler(H) == expected_dimension(n, H.ctx.genus));
    }

    // explicit instances with nonzero degree shift
    SOStarHiggsObject H;
    H.ctx = CurveContext(2, {{"a", 5}, {"b", -7}}, false);
    H.V.summands = {LineSymbol::generator("a"), LineSymbol::generator("b")};
    CHECK(complex_euler(H) == 6);
    H.ctx = CurveContext(3, {{"a", 5}, {"b", -7}}, false);
    CHECK(complex_euler(H) == expected_dimension(2, 3));
}

TEST_CASE("map pattern follows the support") {
    // n = 3, beta (1,2): psi components into the pair with the substituted
    // index; gamma (2,3): dual-side images.
    SOStarHiggsObject H;
    H.ctx = CurveContext(2, {{"a", 1}, {"b", 1}, {"c", 1}}, false);
    H.V.summands = {LineSymbol::generator("a"), LineSymbol::generator("b"),
                    LineSymbol::generator("c")};
    H.beta_support = {{0, 1}};
    H.gamma_support = {{1, 2}};
    DeformationComplexSummary S = complex_summary(H);
    std::size_t n = 3;
    std::size_t v_pairs = 3;
    // psi: a -> c composed with beta {a,b} lands in the V pair {c, b}
    CHECK(S.map_pattern.count({0 * n + 2, 2}) == 1);
    // psi: a -> b followed by gamma {b,c} lands in the dual pair {a, c}
    CHECK(S.map_pattern.count({0 * n + 1, v_pairs + 1}) == 1);
    // psi: b -> b with the same gamma edge lands in the dual pair {b, c}
    CHECK(S.map_pattern.count({1 * n + 1, v_pairs + 2}) == 1);
    // skew-degenerate images are dropped: psi: c -> b with gamma {b,c}
    CHECK(S.map_pattern.count({2 * n + 1, v_pairs + 2}) == 0);
}
