#include <random>

#include "doctest.h"

#include "abel3/gamma.hpp"

using namespace abel3;

namespace {

SL2Matrix random_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> len(1, 6);
    SL2Matrix g;
    int l = len(rng);
    for (int i = 0; i < l; ++i) {
        g = g * SL2Matrix{1, exp(rng), 0, 1} * SL2Matrix::S();
    }
    return g;
}

GammaVector random_vec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-50, 50);
    return {c(rng), c(rng), c(rng), c(rng)};
}

}  // namespace

TEST_CASE("euler pairing values") {
    CHECK(euler_pairing({1, 0, 0, 0}, {0, 0, 0, 1}) == 1);
    CHECK(euler_pairing({2, 3, 5, 7}, {2, 3, 5, 7}) == 0);
    // equals r1 r2 (p1 q2 - p2 q1)^3 = (1 - (-1))^3 for these two
    // semihomogeneous classes
    CHECK(euler_pairing({1, -1, 1, -1}, {1, 1, 1, 1}) == 8);
}

TEST_CASE("euler pairing antisymmetry") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        GammaVector v = random_vec(rng), w = random_vec(rng);
        CHECK(euler_pairing(v, w) == -euler_pairing(w, v));
    }
}

TEST_CASE("discriminant values") {
    CHECK(discriminant({1, 0, 0, -1}) == -1);
    Int p = 2, q = 3, r = 5;
    CHECK(discriminant({r * p * p * p, r * p * p * q, r * p * q * q,
                        r * q * q * q}) == 0);
    CHECK(discriminant({1, 0, -1, -1}) == 3);
}

TEST_CASE("sl2 action on basis vectors") {
    CHECK(sl2_act(SL2Matrix::T(), {1, 0, 0, 0}) == GammaVector{1, 1, 1, 1});
    CHECK(sl2_act(SL2Matrix::S(), {1, 0, 0, 0}) == GammaVector{0, 0, 0, -1});
    CHECK(sl2_act(SL2Matrix{}, {4, -1, 0, 9}) == GammaVector{4, -1, 0, 9});
    CHECK_THROWS_AS(SL2Matrix(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("matrix representation of T and S") {
    Rep4 t = sl2_matrix_rep(SL2Matrix::T());
    Rep4 s = sl2_matrix_rep(SL2Matrix::S());
    Rep4 tw = {{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}};
    Rep4 sw = {{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};
    CHECK(t == tw);
    CHECK(s == sw);
    Rep4 s4 = rep_multiply(rep_multiply(s, s), rep_multiply(s, s));
    Rep4 id = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    CHECK(s4 == id);
}

TEST_CASE("sl2 invariance of pairing and discriminant") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
        SL2Matrix g = random_word(rng);
        GammaVector v = random_vec(rng), w = random_vec(rng);
        CHECK(euler_pairing(sl2_act(g, v), sl2_act(g, w)) ==
              euler_pairing(v, w));
        CHECK(discriminant(sl2_act(g, v)) == discriminant(v));
    }
}

TEST_CASE("representation is a homomorphism") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        SL2Matrix g = random_word(rng), h = random_word(rng);
        CHECK(sl2_matrix_rep(g * h) ==
              rep_multiply(sl2_matrix_rep(g), sl2_matrix_rep(h)));
    }
}

TEST_CASE("mobius pullback basics") {
    TauPoint tau{2, 3};
    CHECK(mobius_pullback(SL2Matrix{}, tau) == tau);
    TauPoint t2 = mobius_pullback(SL2Matrix::T(), TauPoint{Rat(5), Rat(7)});
    CHECK(t2.beta == 4);
    CHECK(t2.alpha == 7);
    TauPoint i{0, 1};
    CHECK(mobius_pullback(SL2Matrix::S(), i) == i);
}

TEST_CASE("mobius pullback contravariance") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 6);
    for (int t = 0; t < 100; ++t) {
        SL2Matrix g = random_word(rng), h = random_word(rng);
        TauPoint tau{make_rat(num(rng), den(rng)),
                     make_rat(std::abs(num(rng)) + 1, den(rng))};
        CHECK(mobius_pullback(g * h, tau) ==
              mobius_pullback(h, mobius_pullback(g, tau)));
    }
}
