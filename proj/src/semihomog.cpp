#include "abel3/semihomog.hpp"

namespace abel3 {

SemihomClass::SemihomClass(Int p_, Int q_, Int r_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)) {
    if (r == 0) throw std::invalid_argument("SemihomClass: r must be nonzero");
    if (p < 0 || (p == 0 && q < 0)) {
        // (p,q,r) and (-p,-q,-r) represent the same class.
        p = -p;
        q = -q;
        r = -r;
    }
    if (p == 0 && q != 1)
        throw std::invalid_argument("SemihomClass: p=0 requires q=1");
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (p != 0 && g != 1)
        throw std::invalid_argument("SemihomClass: gcd(p,q) must be 1");
}

Decomposition::Decomposition(SemihomClass g1, SemihomClass g2)
    : gamma1(std::move(g1)), gamma2(std::move(g2)) {
    if (!(gamma1.slope() < gamma2.slope()))
        throw std::invalid_argument("Decomposition: slopes must increase");
}

std::optional<SemihomClass> in_C(const GammaVector& v) {
    if (v.is_zero()) throw std::invalid_argument("in_C: zero vector");
    if (v.v0 == 0) {
        // p = 0 forces v = (0,0,0,r).
        if (v.v1 != 0 || v.v2 != 0) return std::nullopt;
        return SemihomClass(0, 1, v.v3);
    }
    // theta = v1/v0 = q/p in lowest terms, p > 0.
    Rat theta = make_rat(v.v1, v.v0);
    const Int p = theta.get_den();
    const Int q = theta.get_num();
    const Int p3 = p * p * p;
    if (v.v0 % p3 != 0) return std::nullopt;
    const Int r = v.v0 / p3;
    SemihomClass c(p, q, r);
    if (c.as_gamma() != v) return std::nullopt;
    return c;
}

namespace {

// u * (1, theta, theta^2, theta^3) as an integer vector, if integral.
std::optional<GammaVector> ray_vector(const Rat& u, const Rat& theta) {
    GammaVector w;
    Rat t(1);
    for (int j = 0; j < 4; ++j) {
        const Rat comp = u * t;
        if (comp.get_den() != 1) return std::nullopt;
        (j == 0 ? w.v0 : j == 1 ? w.v1 : j == 2 ? w.v2 : w.v3) = comp.get_num();
        t *= theta;
    }
    return w;
}

}  // namespace

std::optional<Decomposition> decompose(const GammaVector& v) {
    if (v.is_zero()) throw std::invalid_argument("decompose: zero vector");
    const Int disc2 = v.v1 * v.v1 - v.v0 * v.v2;

    if (disc2 == 0) {
        // Point-class split gamma2 proportional to (0,0,0,1).
        if (v.v0 == 0) return std::nullopt;
        const Rat theta = make_rat(v.v1, v.v0);
        if (Rat(v.v2) != v.v0 * theta * theta) return std::nullopt;
        const Rat tail = v.v0 * theta * theta * theta;
        if (tail.get_den() != 1) return std::nullopt;
        const Int w3 = tail.get_num();
        if (v.v3 == w3) return std::nullopt;  // v itself semihomogeneous
        const GammaVector g1v{v.v0, v.v1, v.v2, w3};
        auto g1 = in_C(g1v);
        if (!g1) return std::nullopt;
        SemihomClass g2(0, 1, v.v3 - w3);
        Decomposition d(*g1, std::move(g2));
        if (d.gamma1.as_gamma() + d.gamma2.as_gamma() != v)
            throw std::logic_error("decompose: point split does not re-add");
        return d;
    }

    // Two finite slopes: theta_1 < theta_2 roots of t^2 - s t + m.
    const Rat s = make_rat(v.v1 * v.v2 - v.v0 * v.v3, disc2);
    const Rat m = make_rat(v.v2 * v.v2 - v.v1 * v.v3, disc2);
    const Rat quad_disc = s * s - 4 * m;
    if (quad_disc <= 0) return std::nullopt;
    auto root = exact_sqrt(quad_disc);
    if (!root) return std::nullopt;
    const Rat theta1 = (s - *root) / 2;
    const Rat theta2 = (s + *root) / 2;

    const Rat u1 = (v.v1 - v.v0 * theta2) / (theta1 - theta2);
    const Rat u2 = (v.v0 * theta1 - v.v1) / (theta1 - theta2);
    if (u1 == 0 || u2 == 0) return std::nullopt;

    auto w1 = ray_vector(u1, theta1);
    auto w2 = ray_vector(u2, theta2);
    if (!w1 || !w2) return std::nullopt;
    auto g1 = in_C(*w1);
    auto g2 = in_C(*w2);
    if (!g1 || !g2) return std::nullopt;
    if (*w1 + *w2 != v) return std::nullopt;
    return Decomposition(*g1, *g2);
}

bool is_wallcrossing_free(const GammaVector& v) {
    return !decompose(v).has_value();
}

}  // namespace abel3
