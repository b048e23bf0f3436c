#include <random>

#include "doctest.h"

#include "abel3/qseries.hpp"

using namespace abel3;

TEST_CASE("theta series coefficients") {
    QSeries t3 = QSeries::theta3(80);
    CHECK(t3.coefficient(0) == 1);
    CHECK(t3.coefficient(4) == 2);   // q^1
    CHECK(t3.coefficient(16) == 2);  // q^4
    CHECK(t3.coefficient(8) == 0);

    QSeries t2 = QSeries::theta2(80);
    CHECK(t2.coefficient(0) == 0);
    CHECK(t2.coefficient(1) == 2);  // 2 q^{1/4}

    QSeries prod = t2 * t2 * t2 * t2 * t3;
    CHECK(prod.coefficient(4) == 16);  // 16 q
    CHECK(prod.coefficient(0) == 0);
}

TEST_CASE("a-coefficient display values") {
    auto a = a_coefficients(64);
    CHECK(a.at(-1) == -1);
    CHECK(a.at(0) == 2);
    CHECK(a.at(1) == 0);
    CHECK(a.at(2) == 0);
    CHECK(a.at(3) == -8);
    CHECK(a.at(4) == 12);
    CHECK(a.at(7) == -39);
    CHECK(a.at(8) == 56);
    CHECK(a.at(-5) == 0);
    CHECK_THROWS_AS(a.at(a.max_n + 1), std::out_of_range);
}

TEST_CASE("a-coefficient support pattern") {
    auto a = a_coefficients(400);
    for (long n = 0; n <= a.max_n; ++n)
        if (n % 4 != 0 && n % 4 != 3) CHECK(a.at(n) == 0);
}

TEST_CASE("series inversion round-trips") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> key(1, 39);
    for (int t = 0; t < 20; ++t) {
        QSeries u(40);
        u.set(0, 1);
        for (int j = 0; j < 8; ++j) u.set(key(rng), num(rng));
        QSeries prod = u * u.inverse_unit();
        CHECK(prod == QSeries::one(prod.trunc()));
    }
}

TEST_CASE("divisor sums n(beta,k)") {
    CHECK(n_beta_k(1, 1) == 1);
    CHECK(n_beta_k(0, 6) == 1 + 4 + 9 + 36);
    CHECK(n_beta_k(2, 2) == 5);
    CHECK(n_beta_k(2, 3) == 0);  // beta^2/k not integral
    CHECK(n_beta_k(4, 2) == 1 + 4);
}

TEST_CASE("conjectural counts") {
    CHECK(conj_dt(1, 1) == 8);
    CHECK(conj_dt(0, 2) == make_rat(-5, 2));
    CHECK(conj_dt(0, -3) == 0);
    CHECK(conj_dt(-2, 5) == 0);
    CHECK(conj_dt(0, 1) == 1);
    CHECK_THROWS(conj_dt(0, 0));
}

TEST_CASE("beta zero closed form small cases") {
    for (long n = 1; n <= 12; ++n) {
        Int sig = 0;
        for (long k = 1; k <= n; ++k)
            if (n % k == 0) sig += Int(k) * k;
        CHECK(conj_dt(0, n) == make_rat((n % 2 ? sig : -sig), Int(n)));
    }
}
