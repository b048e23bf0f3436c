#ifndef ABEL3_GAMMA_HPP
#define ABEL3_GAMMA_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "abel3/rational.hpp"

namespace abel3 {

// Chern character vector (v0, v1[H], v2[H^2/2], v3[H^3/6]) of a principally
// polarized abelian threefold of Picard rank one.
struct GammaVector {
    Int v0, v1, v2, v3;

    GammaVector() : v0(0), v1(0), v2(0), v3(0) {}
    GammaVector(Int a, Int b, Int c, Int d)
        : v0(std::move(a)), v1(std::move(b)), v2(std::move(c)), v3(std::move(d)) {}

    const Int& operator[](int i) const {
        switch (i) {
            case 0: return v0;
            case 1: return v1;
            case 2: return v2;
            default: return v3;
        }
    }

    bool operator==(const GammaVector&) const = default;
    bool is_zero() const { return v0 == 0 && v1 == 0 && v2 == 0 && v3 == 0; }

    GammaVector operator+(const GammaVector& w) const {
        return {v0 + w.v0, v1 + w.v1, v2 + w.v2, v3 + w.v3};
    }
    GammaVector operator-(const GammaVector& w) const {
        return {v0 - w.v0, v1 - w.v1, v2 - w.v2, v3 - w.v3};
    }
    GammaVector operator-() const { return {-v0, -v1, -v2, -v3}; }

    std::string str() const {
        return "(" + to_string(v0) + "," + to_string(v1) + "," + to_string(v2) +
               "," + to_string(v3) + ")";
    }
};

struct SL2Matrix {
    Int a, b, c, d;

    SL2Matrix() : a(1), b(0), c(0), d(1) {}
    SL2Matrix(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1)
            throw std::invalid_argument("SL2Matrix: determinant must be 1");
    }

    bool operator==(const SL2Matrix&) const = default;

    SL2Matrix operator*(const SL2Matrix& h) const {
        return {a * h.a + b * h.c, a * h.b + b * h.d,
                c * h.a + d * h.c, c * h.b + d * h.d};
    }
    SL2Matrix inverse() const { return {d, -b, -c, a}; }

    static SL2Matrix T() { return {1, 1, 0, 1}; }
    static SL2Matrix S() { return {0, -1, 1, 0}; }
};

// Point tau = beta + i*alpha on the upper half plane, exact coordinates.
struct TauPoint {
    Rat beta, alpha;

    TauPoint(Rat b, Rat a) : beta(std::move(b)), alpha(std::move(a)) {
        if (alpha <= 0) throw std::invalid_argument("TauPoint: alpha must be > 0");
    }
    bool operator==(const TauPoint&) const = default;
};

Int euler_pairing(const GammaVector& v, const GammaVector& w);
Int discriminant(const GammaVector& v);

// Action through the identification of v with the binary cubic
// v0 x^3 + 3 v1 x^2 y + 3 v2 x y^2 + v3 y^3 and (x,y) -> (dx+by, cx+ay).
GammaVector sl2_act(const SL2Matrix& g, const GammaVector& v);

using Rep4 = std::array<std::array<Int, 4>, 4>;
Rep4 sl2_matrix_rep(const SL2Matrix& g);
Rep4 rep_multiply(const Rep4& m, const Rep4& n);

// Slice coordinate of the g^{-1}-pullback: (d*tau - b) / (-c*tau + a).
TauPoint mobius_pullback(const SL2Matrix& g, const TauPoint& tau);

}  // namespace abel3

#endif
