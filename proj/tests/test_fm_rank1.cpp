#include "doctest.h"

#include "abel3/fm_rank1.hpp"

using namespace abel3;

TEST_CASE("cubic unit solutions") {
    auto s11 = cubic_unit_solutions({1, 1}, 5);
    bool has12 = false;
    for (const auto& s : s11) has12 |= (s == CubicUnitSolution{1, 2});
    CHECK(has12);

    auto any = cubic_unit_solutions({4, -7}, 1);
    bool has01 = false;
    for (const auto& s : any) has01 |= (s == CubicUnitSolution{0, 1});
    CHECK(has01);

    auto s01 = cubic_unit_solutions({0, 1}, 1);
    bool hasm10 = false;
    for (const auto& s : s01) hasm10 |= (s == CubicUnitSolution{-1, 0});
    CHECK(hasm10);

    // lexicographic order
    for (size_t i = 1; i < s11.size(); ++i)
        CHECK((s11[i - 1].c < s11[i].c ||
               (s11[i - 1].c == s11[i].c && s11[i - 1].d < s11[i].d)));
}

TEST_CASE("fourier-mukai images") {
    CHECK(fm_image({1, 1}, {1, 2}) == CurveClass{7, 37});
    CHECK(fm_image({5, -3}, {0, 1}) == CurveClass{5, -3});
    CHECK(fm_image({0, 1}, {-1, 0}) == CurveClass{0, -1});
    CHECK_THROWS(fm_image({1, 1}, {1, 1}));
}

TEST_CASE("reconstructed matrices") {
    SL2Matrix g = reconstruct_g({1, 1}, {1, 2});
    CHECK(g == SL2Matrix{3, 5, 1, 2});

    CHECK(reconstruct_g({9, 4}, {0, 1}) == SL2Matrix{});
    CHECK(reconstruct_g({0, 1}, {-1, 0}) == SL2Matrix{0, 1, -1, 0});
}

TEST_CASE("quest scan") {
    auto r01 = check_quest({0, 1}, 10);
    CHECK(!r01.counterexample);
    CHECK(r01.lemma_verified);
    bool boundary_found = false;
    for (const auto& h : r01.hits)
        if (h.boundary && h.solution == CubicUnitSolution{-1, 0}) {
            boundary_found = true;
            CHECK(h.image == CurveClass{0, -1});
        }
    CHECK(boundary_found);

    CHECK(!check_quest({1, 1}, 10).counterexample);

    auto r05 = check_quest({0, 5}, 10);
    CHECK(!r05.counterexample);
    auto sols = cubic_unit_solutions({0, 5}, 10);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == CubicUnitSolution{0, 1});

    // positive discriminant: no decomposition, vacuous scan
    auto r21 = check_quest({2, 1}, 5);
    CHECK(!r21.counterexample);
    CHECK(r21.hits.empty());
}

TEST_CASE("wall-crossing consistency verdicts") {
    auto v = wallcross_consistency({0, 1}, {-1, 0});
    CHECK(v.wall);
    CHECK(v.lhs == 1);
    CHECK(v.rhs == 1);
    CHECK(v.ok);

    auto id = wallcross_consistency({0, 1}, {0, 1});
    CHECK(!id.wall);
    CHECK(id.lhs == 0);
    CHECK(id.ok);

    // no decomposition at positive discriminant: both counts agree directly
    CHECK(conj_dt(1, 1) == conj_dt(7, 37));
}
