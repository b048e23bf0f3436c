#include "abel3/gamma.hpp"

namespace abel3 {

Int euler_pairing(const GammaVector& v, const GammaVector& w) {
    return v.v0 * w.v3 - 3 * v.v1 * w.v2 + 3 * v.v2 * w.v1 - v.v3 * w.v0;
}

Int discriminant(const GammaVector& v) {
    return -4 * (v.v0 * v.v2 * v.v2 * v.v2 + v.v1 * v.v1 * v.v1 * v.v3) -
           v.v0 * v.v0 * v.v3 * v.v3 + 3 * v.v1 * v.v1 * v.v2 * v.v2 +
           6 * v.v0 * v.v1 * v.v2 * v.v3;
}

GammaVector sl2_act(const SL2Matrix& g, const GammaVector& v) {
    // Coefficients of v0 x^3 + 3 v1 x^2 y + 3 v2 x y^2 + v3 y^3.
    const Int c3 = v.v0, c2 = 3 * v.v1, c1 = 3 * v.v2, c0 = v.v3;

    // Substitute x -> d x + b y, y -> c x + a y and collect powers of x.
    // (dx+by)^i (cx+ay)^(3-i) expanded via binomials.
    std::array<Int, 4> out = {Int(0), Int(0), Int(0), Int(0)};
    const std::array<Int, 4> coeff = {c3, c2, c1, c0};  // x^3, x^2 y, x y^2, y^3
    for (int i = 3; i >= 0; --i) {
        // term coeff[3-i] * (dx+by)^i (cx+ay)^(3-i)
        const int j = 3 - i;
        for (int s = 0; s <= i; ++s) {
            Int ds, bs;
            mpz_pow_ui(ds.get_mpz_t(), g.d.get_mpz_t(), s);
            mpz_pow_ui(bs.get_mpz_t(), g.b.get_mpz_t(), i - s);
            Int bin_i;
            mpz_bin_uiui(bin_i.get_mpz_t(), i, s);
            for (int t = 0; t <= j; ++t) {
                Int cs, as;
                mpz_pow_ui(cs.get_mpz_t(), g.c.get_mpz_t(), t);
                mpz_pow_ui(as.get_mpz_t(), g.a.get_mpz_t(), j - t);
                Int bin_j;
                mpz_bin_uiui(bin_j.get_mpz_t(), j, t);
                const int xdeg = s + t;
                out[3 - xdeg] += coeff[j] * bin_i * bin_j * ds * bs * cs * as;
            }
        }
    }
    // out = coefficients of x^3, x^2 y, x y^2, y^3; read back dividing by 3.
    GammaVector w;
    w.v0 = out[0];
    if (out[1] % 3 != 0 || out[2] % 3 != 0)
        throw std::logic_error("sl2_act: non-exact division by 3");
    w.v1 = out[1] / 3;
    w.v2 = out[2] / 3;
    w.v3 = out[3];
    return w;
}

Rep4 sl2_matrix_rep(const SL2Matrix& g) {
    Rep4 m;
    for (int j = 0; j < 4; ++j) {
        GammaVector e;
        (j == 0 ? e.v0 : j == 1 ? e.v1 : j == 2 ? e.v2 : e.v3) = 1;
        const GammaVector img = sl2_act(g, e);
        for (int i = 0; i < 4; ++i) m[i][j] = img[i];
    }
    return m;
}

Rep4 rep_multiply(const Rep4& m, const Rep4& n) {
    Rep4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            r[i][j] = 0;
            for (int k = 0; k < 4; ++k) r[i][j] += m[i][k] * n[k][j];
        }
    return r;
}

TauPoint mobius_pullback(const SL2Matrix& g, const TauPoint& tau) {
    // (d*tau - b) / (-c*tau + a) with tau = beta + i*alpha.
    const Rat nr = g.d * tau.beta - g.b;
    const Rat ni = g.d * tau.alpha;
    const Rat dr = -g.c * tau.beta + g.a;
    const Rat di = -g.c * tau.alpha;
    const Rat den = dr * dr + di * di;
    if (den == 0) throw std::domain_error("mobius_pullback: zero denominator");
    return TauPoint((nr * dr + ni * di) / den, (ni * dr - nr * di) / den);
}

}  // namespace abel3
