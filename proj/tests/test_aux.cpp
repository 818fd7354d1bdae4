#include "sostar/aux_checkers.hpp"
#include "sostar/corpus.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sostar;

TEST_CASE("gl_check: slope tests over invariant coordinate subbundles") {
    CurveContext ctx(2, {{"a", 1}, {"b", 0}}, false);
    EndoHiggsObject O;
    O.ctx = ctx;
    O.E.summands = {LineSymbol::generator("a"), LineSymbol::generator("b")};

    // no field: the (deg 1, deg 0) split bundle is destabilized by its first line
    CHECK(gl_check(O).status == Status::Unstable);

    // field mapping the heavy line out: the only invariant subset is the
    // light line, whose slope is strictly smaller
    O.Phi = {{0, 1}};
    CHECK(gl_check(O).status == Status::Stable);

    // equal degree zero lines with no field: strictly semistable, complement
    // invariant, hence polystable
    EndoHiggsObject Z;
    Z.ctx = CurveContext(2, {{"x", 0}, {"y", 0}}, false);
    Z.E.summands = {LineSymbol::generator("x"), LineSymbol::generator("y")};
    CHECK(gl_check(Z).status == Status::StrictlySemistable);
    CHECK(gl_polystable(Z));

    // nilpotent chain on equal degrees: {1} invariant with equal slope but
    // the complement {0} is not invariant: not polystable
    Z.Phi = {{0, 1}};
    CHECK(gl_check(Z).status == Status::StrictlySemistable);
    CHECK_FALSE(gl_polystable(Z));
}

TEST_CASE("upq_check with an empty second side is the plain slope test") {
    PairHiggsObject O;
    O.ctx = CurveContext(2, {{"a", 1}, {"b", 0}}, false);
    O.Vt.summands = {LineSymbol::generator("a"), LineSymbol::generator("b")};
    Verdict v = upq_check(O);
    CHECK(v.status == Status::Unstable); // the degree-1 line destabilizes

    PairHiggsObject B;
    B.ctx = CurveContext(2, {{"x", 0}, {"y", 0}}, false);
    B.Vt.summands = {LineSymbol::generator("x"), LineSymbol::generator("y")};
    CHECK(upq_check(B).status == Status::StrictlySemistable);
}

TEST_CASE("so_check on associated orthogonal objects") {
    // A stable rank-3 object with nonzero degree stays stable through the
    // orthogonal checker.
    SOStarHiggsObject H;
    H.ctx = CurveContext(2, {{"a", 1}, {"b", 0}, {"c", 0}}, false);
    H.V.summands = {LineSymbol::generator("a"), LineSymbol::generator("b"),
                    LineSymbol::generator("c")};
    H.beta_support = {{0, 1}, {0, 2}, {1, 2}};
    H.gamma_support = {{1, 2}};
    REQUIRE(validate(H).empty());
    if (check_semistable(H).status == Status::Stable) {
        CHECK(so_check(orthogonal_view(H)).status == Status::Stable);
    }

    // an isotropic invariant positive-degree line: unstable
    OrthHiggsObject O;
    O.ctx = CurveContext(2, {{"a", 1}}, false);
    O.E.summands = {LineSymbol::generator("a"), dual(LineSymbol::generator("a"))};
    O.pairing = {1, 0};
    Verdict v = so_check(O);
    CHECK(v.status == Status::Unstable);
    REQUIRE(v.witness);
    CHECK(v.witness->filtration.S1 == IndexSet{0});

    // SOC verdict can only differ from the plain slope test through the
    // isotropy restriction: the hyperbolic pair of degree-zero lines is
    // strictly semistable
    OrthHiggsObject Z;
    Z.ctx = CurveContext(2, {{"z", 0}}, false);
    Z.E.summands = {LineSymbol::generator("z"), dual(LineSymbol::generator("z"))};
    Z.pairing = {1, 0};
    CHECK(so_check(Z).status == Status::StrictlySemistable);
}

TEST_CASE("aux_check dispatcher") {
    AuxObject O;
    O.kind = AuxKind::GL;
    CHECK_THROWS_AS(aux_check(O), std::invalid_argument);

    // a single line is stable for the linear groups: no proper subbundles
    O.endo = EndoHiggsObject{CurveContext(2, {{"x", 0}}, false),
                             SplitBundle({LineSymbol::generator("x")}),
                             {}};
    CHECK(aux_check(O).status == Status::Stable);

    O.kind = AuxKind::SL;
    CHECK(aux_check(O).status == Status::Stable);

    O.kind = AuxKind::UStar;
    CHECK_THROWS_AS(aux_check(O), std::invalid_argument);
}

TEST_CASE("cross-pair summands of polystable objects are stable pairs") {
    CorpusParams params;
    params.n_max = 4;
    params.count = 200;
    auto corpus = corpus_generate(90210, params);
    std::size_t pairs_seen = 0;
    for (const auto& H : corpus) {
        if (check_semistable(H).status == Status::Unstable) continue;
        if (check_polystable(H).outcome == PolystableResult::Outcome::NotPolystable) continue;
        for (const auto& t : classify_summands(H)) {
            if (t.kind != SummandKind::UpqType) continue;
            ++pairs_seen;
            SOStarHiggsObject piece = sub_object(H, t.indices);
            std::vector<std::size_t> A, C;
            REQUIRE(detail::cross_bipartition(piece, A, C));
            PairHiggsObject P;
            P.ctx = piece.ctx;
            std::map<std::size_t, std::size_t> apos, cpos;
            for (std::size_t k = 0; k < A.size(); ++k) {
                apos[A[k]] = k;
                P.Vt.summands.push_back(piece.V.summands[A[k]]);
            }
            for (std::size_t k = 0; k < C.size(); ++k) {
                cpos[C[k]] = k;
                P.Wt.summands.push_back(dual(piece.V.summands[C[k]]));
            }
            auto side = [&](std::size_t v) { return apos.count(v) > 0; };
            for (const auto& [x, y] : piece.beta_support) {
                std::size_t a = side(x) ? x : y, c = side(x) ? y : x;
                P.beta.insert({apos[a], cpos[c]});
            }
            for (const auto& [x, y] : piece.gamma_support) {
                std::size_t a = side(x) ? x : y, c = side(x) ? y : x;
                P.gamma.insert({apos[a], cpos[c]});
            }
            CHECK(upq_check(P).status == Status::Stable);
        }
    }
    CHECK(pairs_seen > 10);
}

TEST_CASE("the associated orthogonal object reproduces the verdict exactly") {
    // Isotropic coordinate subbundles of V + V* correspond to two-step
    // filtrations (A = S1 and the duals of the complement of S2), with
    // degree equal to minus the defect; the pattern mirror symmetry makes
    // the perpendicular invariance automatic.  This is a third independent
    // route to the verdict.
    CorpusParams params;
    params.n_max = 4;
    params.count = 150;
    auto corpus = corpus_generate(777123, params);
    for (const auto& H : corpus) {
        INFO("rank " << H.rank() << " degree " << H.degree());
        CHECK(so_check(orthogonal_view(H)).status == check_semistable(H).status);
    }
}
