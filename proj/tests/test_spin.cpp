#include <random>

#include "doctest.h"

#include "abel3/spin.hpp"

using namespace abel3;
using namespace abel3::spin;

namespace {

SpinVector basis(uint8_t mask) {
    SpinVector w;
    w.a[subset_index(mask)] = 1;
    return w;
}

SpinVector two_form(int i, int j, const Rat& c) {
    SpinVector w;
    w.a[subset_index(uint8_t((1 << (i - 1)) | (1 << (j - 1))))] = c;
    return w;
}

}  // namespace

TEST_CASE("basis ordering") {
    CHECK(subset_mask(0) == 0);
    CHECK(subset_index(0b111111) == 31);
    CHECK(subset_name(0) == "1");
    CHECK(subset_name(0b000011) == "x1x2");
    for (int i = 0; i < kDim; ++i) CHECK(subset_index(subset_mask(i)) == i);
}

TEST_CASE("generator actions") {
    SpinVector one = basis(0);
    SpinVector x12 = apply_generator({GenKind::Create, 1, 2}, one);
    CHECK(x12 == basis(0b000011));

    SpinVector ann = apply_generator({GenKind::Annihilate, 1, 2}, x12);
    CHECK(ann == one * Rat(-1));

    // mixed term on a state not containing x_j
    CHECK(apply_generator({GenKind::Mixed, 1, 3}, basis(0b010010)).is_zero());
    CHECK_THROWS(LieGenerator(GenKind::Create, 2, 2));
    CHECK(all_generators().size() == 45);
}

TEST_CASE("commutator of paired raising and lowering is diagonal") {
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            LieGenerator up{GenKind::Create, i, j};
            LieGenerator dn{GenKind::Annihilate, i, j};
            for (int b = 0; b < kDim; ++b) {
                SpinVector e = basis(subset_mask(b));
                SpinVector comm = apply_generator(up, apply_generator(dn, e)) -
                                  apply_generator(dn, apply_generator(up, e));
                for (int k = 0; k < kDim; ++k)
                    if (k != b) CHECK(comm.a[k] == 0);
            }
        }
}

TEST_CASE("invariant bilinear form") {
    const SpinMatrix& m = invariant_bilinear();
    CHECK(m[0][31] == 1);
    CHECK(bilinear(basis(0), basis(0b111111)) == 1);
    CHECK(bilinear(basis(0b000011), basis(0b000011)) == 0);

    // infinitesimal invariance, coefficient-wise over all basis pairs
    for (const auto& g : all_generators()) {
        for (int u = 0; u < kDim; ++u) {
            SpinVector gu = apply_generator(g, basis(subset_mask(u)));
            for (int v = 0; v < kDim; ++v) {
                SpinVector gv = apply_generator(g, basis(subset_mask(v)));
                Rat s = bilinear(gu, basis(subset_mask(v))) +
                        bilinear(basis(subset_mask(u)), gv);
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("bilinear form matches the euler pairing") {
    CHECK(bilinear(embed_ppav({1, 0, 0, 0}), embed_ppav({0, 0, 0, 1})) == 1);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int t = 0; t < 100; ++t) {
        GammaVector u{c(rng), c(rng), c(rng), c(rng)};
        GammaVector w{c(rng), c(rng), c(rng), c(rng)};
        CHECK(bilinear(embed_ppav(u), embed_ppav(w)) == euler_pairing(u, w));
    }
}

TEST_CASE("quartic normalization and exponential vanishing") {
    CHECK(delta_spin(embed_e3(1, 0, 0, 0, 0, 0, 0, 1)) == -1);
    SpinVector omega = two_form(1, 2, 1) + two_form(3, 4, 2);
    CHECK(delta_spin(SpinVector::exp_nilpotent(omega)) == 0);
    CHECK(delta_spin(SpinVector{}) == 0);
}

TEST_CASE("quartic homogeneity") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 20; ++t) {
        SpinVector w;
        for (int k = 0; k < kDim; ++k) w.a[k] = c(rng);
        CHECK(delta_spin(w * Rat(2)) == 16 * delta_spin(w));
    }
}

TEST_CASE("sum of two exponentials") {
    SpinVector e1 = SpinVector::exp_nilpotent(two_form(1, 2, 1));
    SpinVector e2 =
        SpinVector::exp_nilpotent(two_form(3, 4, 1) + two_form(5, 6, 1));
    Rat b = bilinear(e1, e2);
    CHECK(delta_spin(e1 + e2) == -b * b);
}

TEST_CASE("infinitesimal invariance of the quartic at sample points") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> c(-3, 3);
    for (const auto& g : all_generators()) {
        for (int t = 0; t < 5; ++t) {
            SpinVector w;
            for (int k = 0; k < kDim; ++k) w.a[k] = c(rng);
            SpinVector gw = apply_generator(g, w);
            // first-order term of Delta(w + eps g.w): evaluate at 5 scalar
            // multiples and difference out; degree-4 exactness makes the
            // directional derivative a cubic polynomial identity
            Rat d0 = delta_spin(w);
            Rat vals[4];
            for (int s = 1; s <= 4; ++s)
                vals[s - 1] = delta_spin(w + gw * Rat(s));
            // finite-difference extraction of the linear coefficient
            Rat lin = Rat(4) * vals[0] - Rat(3) * vals[1] +
                      make_rat(4, 3) * vals[2] - make_rat(1, 4) * vals[3] -
                      make_rat(25, 12) * d0;
            CHECK(lin == 0);
        }
    }
}

TEST_CASE("e3 embedding matches the closed polynomial") {
    CHECK(delta_spin(embed_e3(1, 1, 0, 0, 0, 0, 0, 1)) == -1);
    std::mt19937_64 rng(34);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 100; ++t) {
        Rat a[8];
        for (auto& x : a) x = c(rng);
        CHECK(delta_spin(embed_e3(a[0], a[1], a[2], a[3], a[4], a[5], a[6],
                                  a[7])) ==
              e3_remark_polynomial(a[0], a[1], a[2], a[3], a[4], a[5], a[6],
                                   a[7]));
    }
}

TEST_CASE("diagonal embedding matches the rank-one discriminant") {
    CHECK(delta_spin(embed_ppav({1, 0, -1, -1})) == 3);
    CHECK(embed_ppav({0, 0, 0, 0}).is_zero());
    std::mt19937_64 rng(35);
    std::uniform_int_distribution<int> c(-7, 7);
    for (int t = 0; t < 100; ++t) {
        GammaVector v{c(rng), c(rng), c(rng), c(rng)};
        CHECK(delta_spin(embed_ppav(v)) == discriminant(v));
    }
}
