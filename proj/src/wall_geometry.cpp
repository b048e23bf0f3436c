#include "abel3/wall_geometry.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace abel3 {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
}

CentralCharge central_charge(const TauPoint& tau, const GammaVector& v) {
    const Rat& b = tau.beta;
    const Rat& a = tau.alpha;
    Rat t2re = b * b - a * a;
    Rat t2im = 2 * b * a;
    Rat t3re = t2re * b - t2im * a;
    Rat t3im = t2re * a + t2im * b;
    CentralCharge z;
    z.re = -Rat(v.v3) + 3 * Rat(v.v2) * b - 3 * Rat(v.v1) * t2re +
           Rat(v.v0) * t3re;
    z.im = 3 * Rat(v.v2) * a - 3 * Rat(v.v1) * t2im + Rat(v.v0) * t3im;
    return z;
}

std::complex<double> central_charge_d(double beta, double alpha,
                                      const GammaVector& v) {
    std::complex<double> tau(beta, alpha);
    std::complex<double> t2 = tau * tau;
    return -v.v3.get_d() + 3.0 * v.v2.get_d() * tau - 3.0 * v.v1.get_d() * t2 +
           v.v0.get_d() * t2 * tau;
}

std::vector<Wall> walls_for(const GammaVector& v) {
    auto dec = decompose(v);
    if (!dec) return {};
    bool ratio_pos = dec->gamma1.r * dec->gamma2.r > 0;
    Rat th1 = dec->gamma1.slope().value();
    if (dec->gamma2.slope().is_infinite()) {
        // Z(gamma_2) is the real constant -r2, so the phase condition pins
        // arg(tau - theta1) to pi/3 or 2pi/3 depending on sign(u1/u2).
        LineWall w;
        w.line_sign = ratio_pos ? 1 : -1;
        w.theta1 = th1;
        w.u_ratio_positive = ratio_pos;
        return {Wall(w)};
    }
    Rat th2 = dec->gamma2.slope().value();
    Rat len = th2 - th1;  // > 0
    CircleWall w;
    w.center_beta = (th1 + th2) / 2;
    w.center_alpha_sq = len * len / 12;
    w.radius_sq = len * len / 3;
    // Inscribed-angle locus for arg((tau-theta1)/(tau-theta2)) = -2pi/3
    // (u1/u2 > 0, obtuse: center below the axis) or -pi/3 (u1/u2 < 0,
    // acute: center above).
    w.center_alpha_sign = ratio_pos ? -1 : 1;
    w.u_ratio_positive = ratio_pos;
    w.theta1 = th1;
    w.theta2 = th2;
    return {Wall(w)};
}

bool on_wall(double beta, double alpha, const GammaVector& v, double tol) {
    auto dec = decompose(v);
    if (!dec) throw std::domain_error("on_wall: class is not decomposable");
    std::complex<double> z1 =
        central_charge_d(beta, alpha, dec->gamma1.as_gamma());
    std::complex<double> z2 =
        central_charge_d(beta, alpha, dec->gamma2.as_gamma());
    std::complex<double> w = z1 * std::conj(z2);
    double m = std::abs(w);
    if (m == 0.0) return false;
    return std::abs(w.imag()) <= tol * m && w.real() > 0.0;
}

BetaBound gieseker_beta_bound(const Decomposition& d) {
    Rat th1 = d.gamma1.slope().value();
    if (d.gamma2.slope().is_infinite()) return {true, th1};
    Rat th2 = d.gamma2.slope().value();
    return {false, 7 * th1 / 6 - th2 / 6};
}

std::pair<double, double> wall_point(const Wall& w, double t) {
    if (const auto* c = std::get_if<CircleWall>(&w)) {
        double ca = c->center_alpha_sign *
                    std::sqrt(c->center_alpha_sq.get_d());
        double r = std::sqrt(c->radius_sq.get_d());
        return {c->center_beta.get_d() + r * std::cos(t),
                ca + r * std::sin(t)};
    }
    const auto& l = std::get<LineWall>(w);
    return {l.theta1.get_d() + l.line_sign * t / kSqrt3, t};
}

namespace {

nlohmann::json walls_to_json(const GammaVector& v) {
    nlohmann::json out;
    out["v"] = {to_string(v.v0), to_string(v.v1), to_string(v.v2),
                to_string(v.v3)};
    out["walls"] = nlohmann::json::array();
    for (const Wall& w : walls_for(v)) {
        nlohmann::json jw;
        if (const auto* c = std::get_if<CircleWall>(&w)) {
            jw["kind"] = "circle";
            jw["center_beta"] = to_string(c->center_beta);
            jw["center_alpha_sq"] = to_string(c->center_alpha_sq);
            jw["center_alpha_sign"] = c->center_alpha_sign;
            jw["radius_sq"] = to_string(c->radius_sq);
            jw["theta1"] = to_string(c->theta1);
            jw["theta2"] = to_string(c->theta2);
            jw["u_ratio_positive"] = c->u_ratio_positive;
        } else {
            const auto& l = std::get<LineWall>(w);
            jw["kind"] = "line";
            jw["sign"] = l.line_sign;
            jw["theta1"] = to_string(l.theta1);
            jw["u_ratio_positive"] = l.u_ratio_positive;
        }
        out["walls"].push_back(jw);
    }
    return out;
}

}  // namespace

std::string walls_json(const GammaVector& v) {
    return walls_to_json(v).dump(2) + "\n";
}

std::string walls_svg(const GammaVector& v, const Viewport& vp) {
    if (!(vp.beta_min < vp.beta_max) || !(vp.alpha_max > 0))
        throw std::invalid_argument("walls_svg: degenerate viewport");
    const double s = 100.0;  // user units per slice unit
    double width = (vp.beta_max - vp.beta_min) * s;
    double height = vp.alpha_max * s;
    auto px = [&](double beta) { return (beta - vp.beta_min) * s; };
    auto py = [&](double alpha) { return (vp.alpha_max - alpha) * s; };

    std::ostringstream svg;
    svg.precision(8);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "viewBox=\"0 0 " << width << " " << height << "\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    svg << "  <clipPath id=\"vp\"><rect x=\"0\" y=\"0\" width=\"" << width
        << "\" height=\"" << height << "\"/></clipPath>\n";
    svg << "  <g clip-path=\"url(#vp)\" fill=\"none\" stroke=\"black\" "
        << "stroke-width=\"1.5\">\n";
    svg << "    <line x1=\"0\" y1=\"" << py(0.0) << "\" x2=\"" << width
        << "\" y2=\"" << py(0.0) << "\" stroke-width=\"0.5\"/>\n";
    for (const Wall& w : walls_for(v)) {
        bool solid = std::visit([](const auto& x) { return x.u_ratio_positive; }, w);
        const char* dash = solid ? "" : " stroke-dasharray=\"4 3\"";
        if (const auto* c = std::get_if<CircleWall>(&w)) {
            double ca = c->center_alpha_sign *
                        std::sqrt(c->center_alpha_sq.get_d());
            double r = std::sqrt(c->radius_sq.get_d());
            svg << "    <circle cx=\"" << px(c->center_beta.get_d())
                << "\" cy=\"" << py(ca) << "\" r=\"" << r * s << "\"" << dash
                << "/>\n";
        } else {
            const auto& l = std::get<LineWall>(w);
            double b0 = l.theta1.get_d();
            double b1 = b0 + l.line_sign * vp.alpha_max / kSqrt3;
            svg << "    <line x1=\"" << px(b0) << "\" y1=\"" << py(0.0)
                << "\" x2=\"" << px(b1) << "\" y2=\"" << py(vp.alpha_max)
                << "\"" << dash << "/>\n";
        }
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace abel3
