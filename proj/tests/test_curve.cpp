#include "sostar/curve.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sostar;

namespace {
CurveContext g2() { return CurveContext(2, {{"a", 1}, {"b", 2}, {"c", -1}}, true); }
} // namespace

TEST_CASE("tensor: unit, square root, additivity") {
    CurveContext ctx = g2();
    LineSymbol L = LineSymbol::generator("a");
    CHECK(tensor(L, LineSymbol::trivial()) == L);
    CHECK(tensor(LineSymbol::canonical_half(), LineSymbol::canonical_half()) ==
          LineSymbol::canonical());

    LineSymbol M = LineSymbol::generator("b");
    CHECK(tensor(L, M).degree(ctx) == 3);

    // commutative, associative, dual inverts degree
    LineSymbol N = LineSymbol::generator("c");
    CHECK(tensor(L, M) == tensor(M, L));
    CHECK(tensor(tensor(L, M), N) == tensor(L, tensor(M, N)));
    CHECK(dual(dual(L)) == L);
    CHECK(dual(L).degree(ctx) == -L.degree(ctx));
    CHECK(tensor(L, dual(L)).is_trivial());
}

TEST_CASE("half-canonical exponents fold into K") {
    CurveContext ctx = g2();
    LineSymbol k32 = tensor(LineSymbol::canonical(), LineSymbol::canonical_half());
    CHECK(k32.degree(ctx) == 3 * (ctx.genus - 1));
    LineSymbol inv_half = dual(LineSymbol::canonical_half());
    CHECK(inv_half.degree(ctx) == -(ctx.genus - 1));
    CHECK(tensor(inv_half, LineSymbol::canonical_half()).is_trivial());
}

TEST_CASE("exterior_square: summand count, order, degree") {
    SplitBundle V2({LineSymbol::generator("a"), LineSymbol::generator("b")});
    SplitBundle e2 = exterior_square(V2);
    REQUIRE(e2.rank() == 1);
    CHECK(e2.summands[0] == tensor(LineSymbol::generator("a"), LineSymbol::generator("b")));

    SplitBundle V3({LineSymbol::generator("a"), LineSymbol::generator("b"),
                    LineSymbol::generator("c")});
    SplitBundle e3 = exterior_square(V3);
    REQUIRE(e3.rank() == 3);
    CHECK(e3.summands[0] == tensor(LineSymbol::generator("a"), LineSymbol::generator("b")));
    CHECK(e3.summands[1] == tensor(LineSymbol::generator("a"), LineSymbol::generator("c")));
    CHECK(e3.summands[2] == tensor(LineSymbol::generator("b"), LineSymbol::generator("c")));

    CurveContext ctx = g2();
    CHECK(e3.degree(ctx) == (3 - 1) * V3.degree(ctx));
    CHECK_THROWS_AS(exterior_square(SplitBundle({LineSymbol::generator("a")})),
                    std::invalid_argument);
}

TEST_CASE("h0_generic: special labels and the generic rule") {
    CurveContext ctx = g2();
    long g = ctx.genus;
    CHECK(h0_generic(ctx, LineSymbol::trivial()) == 1);
    CHECK(h0_generic(ctx, LineSymbol::canonical()) == g);
    CHECK(h0_generic(ctx, LineSymbol::generator("a")) == 0); // deg 1, generic: 1-2+1 = 0
    CHECK(h0_generic(ctx, LineSymbol::canonical(2)) == 3 * (g - 1));
    CHECK(h0_generic(ctx, LineSymbol::canonical(3)) == 5 * (g - 1));
    CHECK(h0_generic(ctx, LineSymbol::canonical_half()) == 0);
    CHECK(h0_generic(ctx, LineSymbol::generator("c")) == 0); // deg -1
    CHECK(h0_generic(ctx, LineSymbol::generator("b", 2)) == 3); // deg 4: 4-2+1
    // degree-0 nontrivial labels have no sections
    CHECK(h0_generic(ctx, tensor(LineSymbol::generator("a"), LineSymbol::generator("c"))) == 0);
}

TEST_CASE("section_exists") {
    CurveContext ctx = g2();
    LineSymbol L = LineSymbol::generator("a");
    CHECK(section_exists(ctx, L, L, true)); // host K, h0 = g > 0

    CurveContext ctx5(2, {{"x", 5}, {"y", 0}}, false);
    CHECK_FALSE(section_exists(ctx5, LineSymbol::generator("x"), LineSymbol::generator("y"),
                               true)); // degree -5 + 0 + 2 < 0

    CHECK(section_exists(ctx, LineSymbol::canonical_half(),
                         tensor(LineSymbol::canonical_half(), LineSymbol::canonical()),
                         false)); // dual(K1/2) (x) K1/2 (x) K = K
}

TEST_CASE("riemann_roch_chi") {
    CurveContext ctx = g2();
    CHECK(riemann_roch_chi(ctx, SplitBundle({LineSymbol::trivial()})) == -1);
    CHECK(riemann_roch_chi(ctx, SplitBundle({LineSymbol::canonical()})) == 1);

    CurveContext ctx3(3, {{"z", 0}}, false);
    SplitBundle V({LineSymbol::generator("z"), LineSymbol::generator("z"),
                   LineSymbol::generator("z"), LineSymbol::generator("z")});
    CHECK(riemann_roch_chi(ctx3, V) == -8);
}

TEST_CASE("exact duality consistency of the h0 rule") {
    // h0(L) - h0(K (x) L*) = deg L + 1 - g wherever both sides are generic,
    // and for the special symbols O and K.
    CurveContext ctx = g2();
    long g = ctx.genus;
    auto rr = [&](const LineSymbol& L) {
        long lhs = h0_generic(ctx, L) -
                   h0_generic(ctx, tensor(LineSymbol::canonical(), dual(L)));
        return lhs == L.degree(ctx) + 1 - g;
    };
    CHECK(rr(LineSymbol::trivial()));
    CHECK(rr(LineSymbol::canonical()));
    for (long e = -3; e <= 3; ++e) {
        LineSymbol L = LineSymbol::generator("b", e); // deg 2e; generic label
        LineSymbol dual_host = tensor(LineSymbol::canonical(), dual(L));
        bool both_generic = h0_generic(ctx, L) == std::max(0L, L.degree(ctx) - g + 1) &&
                            h0_generic(ctx, dual_host) ==
                                std::max(0L, dual_host.degree(ctx) - g + 1);
        if (both_generic) CHECK(rr(L));
    }
}
