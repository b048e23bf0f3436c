#ifndef ABEL3_WALL_GEOMETRY_HPP
#define ABEL3_WALL_GEOMETRY_HPP

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "abel3/semihomog.hpp"

namespace abel3 {

// Central charge Z_tau(v) = -chi(e^{tau H}, v), exact when tau is exact.
struct CentralCharge {
    Rat re, im;

    std::complex<double> to_complex() const {
        return {re.get_d(), im.get_d()};
    }
};

CentralCharge central_charge(const TauPoint& tau, const GammaVector& v);
std::complex<double> central_charge_d(double beta, double alpha,
                                      const GammaVector& v);

// Wall locus on the (alpha, beta) slice. Circle parameters are stored with
// center_alpha squared since center_alpha = sign * |theta1-theta2| sqrt(3)/6
// is irrational; the line slope is beta = line_sign * (sqrt(3)/3) alpha + theta1.
struct CircleWall {
    Rat center_beta;
    Rat center_alpha_sq;  // (theta1 - theta2)^2 / 12
    Rat radius_sq;        // (theta1 - theta2)^2 / 3
    int center_alpha_sign;  // sign of the circle center's alpha coordinate
    bool u_ratio_positive;
    Rat theta1, theta2;
};

struct LineWall {
    int line_sign;  // beta = line_sign * (sqrt(3)/3) alpha + theta1
    Rat theta1;
    bool u_ratio_positive;
};

using Wall = std::variant<CircleWall, LineWall>;

// The single wall locus of a decomposable class; empty when no decomposition
// exists.
std::vector<Wall> walls_for(const GammaVector& v);

// True iff Z(gamma2) lies on the positive real ray through Z(gamma1), within
// tol on the phase alignment.
bool on_wall(double beta, double alpha, const GammaVector& v, double tol);

// beta bound below which the vertical Gieseker path misses the wall:
// constant 7 theta1/6 - theta2/6 for two finite slopes; theta1 - alpha/sqrt(3)
// in the point-class case (alpha-dependent).
struct BetaBound {
    bool alpha_dependent;
    Rat constant;  // full value, or theta1 when alpha-dependent
    double value(double alpha) const {
        return alpha_dependent ? constant.get_d() - alpha / 1.7320508075688772
                               : constant.get_d();
    }
};

BetaBound gieseker_beta_bound(const Decomposition& d);

struct Viewport {
    double beta_min, beta_max, alpha_max;
};

std::string walls_json(const GammaVector& v);
std::string walls_svg(const GammaVector& v, const Viewport& vp);

// Sample point on the wall at the given angle/parameter (for tests and
// plotting); angle parameterizes the circle, t >= 0 the line.
std::pair<double, double> wall_point(const Wall& w, double t);

}  // namespace abel3

#endif
