#include "abel3/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace abel3 {

QSeries QSeries::operator*(const QSeries& o) const {
    // Truncation of the product is limited by the lowest exponents of the
    // factors: unknown tail terms of one factor pollute keys starting at
    // (own valuation) + (other trunc).
    const long lo_a = coeff_.empty() ? trunc_ : coeff_.begin()->first;
    const long lo_b = o.coeff_.empty() ? o.trunc_ : o.coeff_.begin()->first;
    const long t = std::min(trunc_ + lo_b, o.trunc_ + lo_a);
    QSeries out(std::min({t, trunc_ + lo_b, o.trunc_ + lo_a}));
    std::map<long, Rat> acc;
    for (const auto& [ka, ca] : coeff_) {
        for (const auto& [kb, cb] : o.coeff_) {
            const long k = ka + kb;
            if (k >= out.trunc_) break;
            acc[k] += ca * cb;
        }
    }
    for (auto& [k, c] : acc) out.set(k, std::move(c));
    return out;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries out(std::min(trunc_, o.trunc_));
    for (const auto& [k, c] : coeff_) out.set(k, c);
    for (const auto& [k, c] : o.coeff_)
        if (k < out.trunc_) out.set(k, out.coefficient(k) + c);
    return out;
}

QSeries QSeries::shifted(long s) const {
    QSeries out(trunc_ + s);
    for (const auto& [k, c] : coeff_) {
        if (k + s < 0) throw std::domain_error("QSeries: negative exponent");
        out.set(k + s, c);
    }
    return out;
}

QSeries QSeries::inverse_unit() const {
    auto it = coeff_.find(0);
    if (it == coeff_.end())
        throw std::domain_error("inverse_unit: constant term vanishes");
    const Rat lead = 1 / it->second;

    std::vector<Rat> g(static_cast<size_t>(trunc_));
    g[0] = lead;
    // Sparse nonzero keys of *this above 0, ascending.
    std::vector<std::pair<long, Rat>> tail(std::next(coeff_.begin()),
                                           coeff_.end());
    for (long k = 1; k < trunc_; ++k) {
        Rat s(0);
        for (const auto& [j, c] : tail) {
            if (j > k) break;
            if (g[k - j] != 0) s += c * g[k - j];
        }
        if (s != 0) g[k] = -lead * s;
    }
    QSeries out(trunc_);
    for (long k = 0; k < trunc_; ++k)
        if (g[k] != 0) out.set(k, g[k]);
    return out;
}

QSeries QSeries::theta2(long trunc) {
    if (trunc < 4) throw std::invalid_argument("theta2: trunc must be >= 4");
    QSeries s(trunc);
    // (n+1/2)^2 in quarter-units is (2n+1)^2; n and -n-1 coincide.
    for (long n = 0; (2 * n + 1) * (2 * n + 1) < trunc; ++n)
        s.set((2 * n + 1) * (2 * n + 1), 2);
    return s;
}

QSeries QSeries::theta3(long trunc) {
    if (trunc < 4) throw std::invalid_argument("theta3: trunc must be >= 4");
    QSeries s(trunc);
    s.set(0, 1);
    for (long n = 1; 4 * n * n < trunc; ++n) s.set(4 * n * n, 2);
    return s;
}

ACoefficients a_coefficients(long trunc) {
    if (trunc < 12) throw std::invalid_argument("a_coefficients: trunc too small");
    const long m = trunc + 8;
    const QSeries t2 = QSeries::theta2(m);
    const QSeries t3 = QSeries::theta3(m);
    const QSeries t2sq = t2 * t2;
    const QSeries f = t2sq * t2sq * t3;  // valuation q^1 (key 4), lead 16
    if (f.coefficient(4) != 16)
        throw std::logic_error("a_coefficients: unexpected leading term");
    const QSeries unit = f.shifted(-4);
    const QSeries inv = unit.inverse_unit();

    ACoefficients a;
    a.max_n = trunc / 4 - 2;
    // -16 q^{-1} inv: a(n) = -16 * inv coefficient at key 4(n+1).
    for (const auto& [k, c] : inv.terms()) {
        if (k % 4 != 0)
            throw std::logic_error("a_coefficients: non-integer exponent");
        const long n = k / 4 - 1;
        if (n <= a.max_n) a.values[n] = -16 * c;
    }
    return a;
}

namespace {

Int sigma2(const Int& g) {
    Int sum = 0;
    for (Int d = 1; d * d <= g; ++d) {
        if (g % d != 0) continue;
        sum += d * d;
        const Int e = g / d;
        if (e != d) sum += e * e;
    }
    return sum;
}

// gcd treating 0 as divisible by everything.
Int gcd_all(std::initializer_list<Int> xs) {
    Int g = 0;
    for (const Int& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

const ACoefficients& a_cache(long need_n) {
    static ACoefficients cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.values.empty() || cache.max_n < need_n) {
        const long n = std::max<long>(need_n, 200);
        cache = a_coefficients(4 * (n + 2));
    }
    return cache;
}

}  // namespace

Int n_beta_k(const Int& beta, const Int& k) {
    if (k < 1) throw std::invalid_argument("n_beta_k: k must be positive");
    const Int b2 = beta * beta;
    const Int b3 = b2 * beta;
    if (b2 % k != 0 || b3 % (k * k) != 0) return 0;
    const Int g = gcd_all({k, beta, b2 / k, b3 / (k * k)});
    return sigma2(g);
}

Rat conj_dt(const Int& beta, const Int& n) {
    if (beta == 0 && n == 0)
        throw std::invalid_argument("conj_dt: (0,0) not allowed");
    if (beta < 0 || (beta == 0 && n < 0)) return 0;

    const Int disc = 4 * beta * beta * beta - n * n;
    if (disc > 1000000)
        throw std::domain_error("conj_dt: discriminant beyond supported range");
    const long need = std::max<long>(disc.get_si(), -1);
    const ACoefficients& a = a_cache(need);

    // Divisors k of n; every k >= 1 divides n = 0 but n(beta,k) = 0 forces
    // k | beta^2, so the sum is finite either way.
    std::vector<Int> ks;
    if (n != 0) {
        const Int an = abs(n);
        for (Int k = 1; k * k <= an; ++k) {
            if (an % k != 0) continue;
            ks.push_back(k);
            if (k * k != an) ks.push_back(an / k);
        }
    } else {
        for (Int k = 1; k <= beta * beta; ++k) ks.push_back(k);
    }

    Rat sum(0);
    for (const Int& k : ks) {
        const Int nb = n_beta_k(beta, k);
        if (nb == 0) continue;
        const Int k2 = k * k;
        if (disc % k2 != 0)
            throw std::logic_error("conj_dt: non-integral a-series argument");
        const Int arg = disc / k2;
        if (arg < -1) continue;
        sum += make_rat(nb, k) * a.at(arg.get_si());
    }
    const int sign = mpz_odd_p(n.get_mpz_t()) ? -1 : 1;
    return sign * sum;
}

}  // namespace abel3
