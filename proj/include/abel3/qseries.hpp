#ifndef ABEL3_QSERIES_HPP
#define ABEL3_QSERIES_HPP

#include <map>

#include "abel3/rational.hpp"

namespace abel3 {

// Sparse formal q-series on the quarter-integer exponent grid: a stored key k
// represents the exponent k/4. Coefficients are correct for all keys < trunc().
class QSeries {
public:
    explicit QSeries(long trunc) : trunc_(trunc) {
        if (trunc < 1) throw std::invalid_argument("QSeries: trunc must be >= 1");
    }

    long trunc() const { return trunc_; }
    const std::map<long, Rat>& terms() const { return coeff_; }

    Rat coefficient(long key) const {
        if (key >= trunc_)
            throw std::out_of_range("QSeries: key beyond truncation");
        auto it = coeff_.find(key);
        return it == coeff_.end() ? Rat(0) : it->second;
    }

    void set(long key, Rat c) {
        if (key >= trunc_) return;
        if (c == 0)
            coeff_.erase(key);
        else
            coeff_[key] = std::move(c);
    }

    QSeries operator*(const QSeries& o) const;
    QSeries operator+(const QSeries& o) const;

    // Inverse of a series with nonzero constant term (key 0).
    QSeries inverse_unit() const;

    // Series with all keys shifted by s quarter-units (s may be negative as
    // long as no key drops below zero).
    QSeries shifted(long s) const;

    bool operator==(const QSeries& o) const {
        return trunc_ == o.trunc_ && coeff_ == o.coeff_;
    }

    // theta_2 = sum_{n in Z} q^{(n+1/2)^2},  theta_3 = sum_{n in Z} q^{n^2}.
    static QSeries theta2(long trunc);
    static QSeries theta3(long trunc);
    static QSeries one(long trunc) {
        QSeries s(trunc);
        s.set(0, 1);
        return s;
    }

private:
    std::map<long, Rat> coeff_;
    long trunc_;
};

// Coefficients a(n) of -16 / (theta2^4 theta3) = -q^{-1} + 2 - 8q^3 + ...;
// a(n) = 0 for n < -1 by convention, defined up to max_n.
struct ACoefficients {
    std::map<long, Rat> values;
    long max_n;

    Rat at(long n) const {
        if (n < -1) return Rat(0);
        if (n > max_n)
            throw std::out_of_range("ACoefficients: beyond truncation");
        auto it = values.find(n);
        return it == values.end() ? Rat(0) : it->second;
    }
};

// Expansion of -16/(theta2^4 theta3) with truncation N quarter-units;
// delivers a(n) for -1 <= n <= N/4 - 2.
ACoefficients a_coefficients(long trunc);

// Sum of delta^2 over positive delta dividing k, beta, beta^2/k, beta^3/k^2
// (everything divides 0); zero unless beta^2/k and beta^3/k^2 are integers.
Int n_beta_k(const Int& beta, const Int& k);

// Conjectural curve-counting value C_{beta,n}; vanishes for beta < 0 and for
// beta = 0, n < 0.
Rat conj_dt(const Int& beta, const Int& n);

}  // namespace abel3

#endif
