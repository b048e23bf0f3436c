#include <random>

#include "doctest.h"

#include "abel3/lattice_ring.hpp"

using namespace abel3;

namespace {

IntMatrix cols(int m, std::vector<std::vector<long>> columns) {
    IntMatrix a(m, std::vector<Int>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j)
        for (int i = 0; i < m; ++i) a[i][j] = columns[j][i];
    return a;
}

}  // namespace

TEST_CASE("hermite canonicalization makes equality decidable") {
    SaturatedLattice a(2, cols(2, {{1, 1}}));
    SaturatedLattice b(2, cols(2, {{-1, -1}}));
    CHECK(a == b);
    SaturatedLattice c(3, cols(3, {{1, 0, 0}, {0, 1, 0}}));
    SaturatedLattice d(3, cols(3, {{1, 1, 0}, {3, 2, 0}}));
    CHECK(c == d);
}

TEST_CASE("saturation is enforced") {
    CHECK_THROWS(SaturatedLattice(2, cols(2, {{2, 0}})));
    CHECK_THROWS(SaturatedLattice(3, cols(3, {{1, 1, 0}, {1, -1, 0}})));
    auto s = SaturatedLattice::saturation(2, cols(2, {{2, 0}}));
    CHECK(s == SaturatedLattice(2, cols(2, {{1, 0}})));
    auto s2 = SaturatedLattice::saturation(3, cols(3, {{1, 1, 0}, {1, -1, 0}}));
    CHECK(s2.rank() == 2);
    CHECK(s2 == SaturatedLattice(3, cols(3, {{1, 0, 0}, {0, 1, 0}})));
}

TEST_CASE("smith invariants") {
    using namespace intlin;
    auto inv = smith_invariants(cols(2, {{1, 1}, {1, -1}}));
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 2);
}

TEST_CASE("epsilon products") {
    int m = 2;
    auto full = SaturatedLattice::full(m);
    auto l = SaturatedLattice(m, cols(m, {{1, 0}}));
    CHECK(eps_product(full, l) == RingElement::eps(l));

    auto l1 = SaturatedLattice(m, cols(m, {{1, 1}}));
    auto l2 = SaturatedLattice(m, cols(m, {{1, -1}}));
    auto p = eps_product(l1, l2);
    CHECK(p == RingElement::eps(SaturatedLattice::zero(m), 2));

    CHECK(eps_product(l, l) == RingElement::zero(m));
    CHECK_THROWS(eps_product(l, SaturatedLattice::full(3)));
}

TEST_CASE("ring multiply distributes and associates") {
    int m = 3;
    auto l1 = SaturatedLattice(m, cols(m, {{1, 0, 0}}));
    auto l2 = SaturatedLattice(m, cols(m, {{0, 1, 0}}));
    auto l3 = SaturatedLattice(m, cols(m, {{1, 1, 1}}));
    auto e1 = RingElement::eps(l1);
    auto e2 = RingElement::eps(l2);
    auto e3 = RingElement::eps(l3);

    // two rank-1 lattices in Z^3 are never transverse, so both orders give 0
    auto lhs = ring_multiply(ring_multiply(e1, e2), e3);
    auto rhs = ring_multiply(e1, ring_multiply(e2, e3));
    CHECK(lhs == rhs);
    CHECK(lhs == RingElement::zero(m));

    // a genuinely transverse associativity witness: three planes in Z^3
    auto p1 = SaturatedLattice(m, cols(m, {{1, 0, 0}, {0, 1, 0}}));
    auto p2 = SaturatedLattice(m, cols(m, {{1, 0, 0}, {0, 0, 1}}));
    auto p3 = SaturatedLattice(m, cols(m, {{0, 1, 0}, {0, 1, 1}}));
    auto f1 = RingElement::eps(p1);
    auto f2 = RingElement::eps(p2);
    auto f3 = RingElement::eps(p3);
    auto w1 = ring_multiply(ring_multiply(f1, f2), f3);
    auto w2 = ring_multiply(f1, ring_multiply(f2, f3));
    CHECK(w1 == w2);
    REQUIRE(w1.terms.size() == 1);
    CHECK(w1.terms.begin()->first == SaturatedLattice::zero(m));

    RingElement sum = RingElement::zero(m);
    sum.add_term(l1, 1);
    sum.add_term(l2, 1);
    RingElement dist = ring_multiply(sum, e3);
    RingElement sep = ring_multiply(e1, e3);
    for (const auto& [lat, c] : ring_multiply(e2, e3).terms)
        sep.add_term(lat, c);
    CHECK(dist == sep);

    auto unit = RingElement::eps(SaturatedLattice::full(m));
    CHECK(ring_multiply(sum, unit) == sum);
}

TEST_CASE("product outputs stay saturated") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> amb(2, 5);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int t = 0; t < 100; ++t) {
        int m = amb(rng);
        std::uniform_int_distribution<int> rk(0, m);
        auto rnd = [&] {
            int k = rk(rng);
            IntMatrix gen(m, std::vector<Int>(k));
            for (auto& row : gen)
                for (auto& x : row) x = entry(rng);
            return SaturatedLattice::saturation(m, gen);
        };
        auto p = eps_product(rnd(), rnd());
        for (const auto& [lat, c] : p.terms) {
            CHECK(c != 0);
            // re-canonicalizing the basis must succeed and reproduce it
            CHECK(SaturatedLattice(m, lat.basis()) == lat);
        }
    }
}
