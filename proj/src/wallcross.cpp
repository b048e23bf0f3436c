#include "abel3/wallcross.hpp"

namespace abel3 {

namespace {

// Sum of 1/k^2 over positive divisors k of n > 0.
Rat divisor_square_sum(const Int& n) {
    Rat sum(0);
    for (Int k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        sum += make_rat(1, k * k);
        const Int other = n / k;
        if (other != k) sum += make_rat(1, other * other);
    }
    return sum;
}

}  // namespace

Rat dt_semihom(const SemihomClass& c) {
    return divisor_square_sum(abs(c.r));
}

WallCrossCase classify(const SL2Matrix& g, const Decomposition& d) {
    if (g.c == 0) return WallCrossCase::no_wall();
    const Rat crossing = make_rat(-g.d, g.c);
    const Slope lo = d.gamma1.slope();
    const Slope hi = d.gamma2.slope();
    const Slope x = Slope::finite(crossing);
    if (lo <= x && x < hi) return WallCrossCase::at(crossing);
    return WallCrossCase::no_wall();
}

Rat wall_crossing_term(const Decomposition& d) {
    const Int alpha = d.gamma1.p * d.gamma2.q - d.gamma2.p * d.gamma1.q;
    if (alpha == 0)
        throw std::invalid_argument("wall_crossing_term: equal slopes");
    Int alpha9;
    mpz_pow_ui(alpha9.get_mpz_t(), alpha.get_mpz_t(), 9);
    const Int prod = d.gamma1.r * d.gamma2.r;
    // (-1)^{r1 r2 alpha}: parity only.
    const int sign = mpz_odd_p(Int(prod * alpha).get_mpz_t()) ? -1 : 1;
    return sign * Rat(prod * alpha9) * dt_semihom(d.gamma1) * dt_semihom(d.gamma2);
}

}  // namespace abel3
