#include "abel3/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "abel3/fm_rank1.hpp"
#include "abel3/lattice_ring.hpp"
#include "abel3/qseries.hpp"
#include "abel3/spin.hpp"
#include "abel3/wall_geometry.hpp"

namespace abel3 {

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
    std::ostringstream msg;
    int count = 0;

    void note(const std::string& s) {
        if (count < 5) msg << (count ? "; " : "") << s;
        ++count;
    }
    std::string str() const {
        std::string s = msg.str();
        if (count > 5) s += "; ... (" + std::to_string(count) + " failures)";
        return s;
    }
};

VerifyCheck timed(const std::string& name, double budget,
                  const std::function<void(Failure&)>& body) {
    Failure f;
    auto t0 = Clock::now();
    try {
        body(f);
    } catch (const std::exception& e) {
        f.note(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    VerifyCheck c;
    c.name = name;
    c.seconds = dt;
    c.pass = f.count == 0 && (budget <= 0 || dt < budget);
    if (f.count)
        c.detail = f.str();
    else if (budget > 0 && dt >= budget)
        c.detail = "over time budget";
    else
        c.detail = "ok";
    return c;
}

void check_a_display(Failure& f) {
    auto ac = a_coefficients(800);  // exponents through q^200
    const std::pair<long, long> expected[] = {{-1, -1}, {0, 2},  {3, -8},
                                              {4, 12},  {7, -39}, {8, 56}};
    for (auto [n, want] : expected) {
        Rat got = ac.at(n);
        if (got != want)
            f.note("a(" + std::to_string(n) + ") = " + to_string(got) +
                   ", want " + std::to_string(want));
    }
    // support check: nonzero coefficients only at n = -1 or n ≡ 0,3 (mod 4)
    for (long n = -1; n <= ac.max_n; ++n) {
        if (ac.at(n) != 0 && n >= 0 && n % 4 != 0 && n % 4 != 3)
            f.note("unexpected support at n=" + std::to_string(n));
    }
}

void check_rank_one_anchor(Failure& f) {
    Rat c11 = conj_dt(1, 1);
    if (c11 != 8) f.note("C(1,1) = " + to_string(c11) + ", want 8");
    CurveClass cc{1, 1};
    CubicUnitSolution s{1, 2};
    CurveClass im = fm_image(cc, s);
    if (!(im.beta == 7 && im.n == 37))
        f.note("image of (1,1) under (1,2) is (" + to_string(im.beta) + "," +
               to_string(im.n) + "), want (7,37)");
    SL2Matrix g = reconstruct_g(cc, s);  // throws if the action check fails
    if (!(g.a == 3 && g.b == 5 && g.c == 1 && g.d == 2))
        f.note("unexpected g for (1,1),(1,2)");
    Rat c737 = conj_dt(7, 37);
    if (c737 != 8) f.note("C(7,37) = " + to_string(c737) + ", want 8");
}

void check_beta0_closed_form(Failure& f) {
    for (long n = 1; n <= 50; ++n) {
        Rat got = conj_dt(0, n);
        Int sig = 0;
        for (long k = 1; k <= n; ++k)
            if (n % k == 0) sig += Int(k) * k;
        Rat want = make_rat((n % 2 == 1 ? sig : -sig), Int(n));
        if (got != want)
            f.note("C(0," + std::to_string(n) + ") = " + to_string(got) +
                   ", want " + to_string(want));
    }
}

bool in_formula_domain(const CurveClass& cc) {
    return cc.beta > 0 || (cc.beta == 0 && cc.n > 0);
}

void orbit_sweep(Failure& forbit, Failure& fwall) {
    for (long beta = 1; beta <= 6; ++beta) {
        for (long n = -40; n <= 40; ++n) {
            CurveClass cc{beta, n};
            GammaVector v = cc.as_gamma();
            Int disc = discriminant(v);
            auto sols = cubic_unit_solutions(cc, 20);
            bool decomposable = decompose(v).has_value();
            for (const auto& s : sols) {
                CurveClass im = fm_image(cc, s);
                Int disc2 = discriminant(im.as_gamma());
                if (disc2 != disc)
                    forbit.note("disc not preserved at (" +
                                std::to_string(beta) + "," +
                                std::to_string(n) + ") sol (" +
                                to_string(s.c) + "," + to_string(s.d) + ")");
                reconstruct_g(cc, s);  // throws on any action mismatch
                if (in_formula_domain(cc) && in_formula_domain(im)) {
                    if (conj_dt(cc.beta, cc.n) != conj_dt(im.beta, im.n))
                        forbit.note("C not orbit-invariant at (" +
                                    std::to_string(beta) + "," +
                                    std::to_string(n) + ") -> (" +
                                    to_string(im.beta) + "," +
                                    to_string(im.n) + ")");
                }
                if (decomposable && disc < 0) {
                    auto verdict = wallcross_consistency(cc, s);
                    if (!verdict.ok)
                        fwall.note("consistency failed at (" +
                                   std::to_string(beta) + "," +
                                   std::to_string(n) + ") sol (" +
                                   to_string(s.c) + "," + to_string(s.d) +
                                   "): lhs " + to_string(verdict.lhs) +
                                   " rhs " + to_string(verdict.rhs));
                }
            }
        }
    }
}

spin::SpinVector random_omega(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    spin::SpinVector w;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            uint8_t mask = uint8_t((1 << (i - 1)) | (1 << (j - 1)));
            w.a[spin::subset_index(mask)] = coef(rng);
        }
    return w;
}

void check_spin(Failure& f) {
    using namespace spin;
    // constructing both forms verifies the nullspaces are one-dimensional
    (void)invariant_bilinear();
    const QuarticInvariant& q = solve_quartic();
    (void)q;
    Rat norm = delta_spin(embed_e3(1, 0, 0, 0, 0, 0, 0, 1));
    if (norm != -1) f.note("Delta(1 + x1..x6) = " + to_string(norm));

    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> scal(-5, 5);
    for (int t = 0; t < 100; ++t) {
        SpinVector w1 = random_omega(rng);
        SpinVector w2 = random_omega(rng);
        Rat r1 = scal(rng), r2 = scal(rng);
        SpinVector e1 = SpinVector::exp_nilpotent(w1) * r1;
        SpinVector e2 = SpinVector::exp_nilpotent(w2) * r2;
        if (delta_spin(e1) != 0) f.note("Delta(e^omega) != 0 at trial " +
                                        std::to_string(t));
        Rat b = bilinear(e1, e2);
        if (delta_spin(e1 + e2) != -b * b)
            f.note("sum-of-exponentials identity failed at trial " +
                   std::to_string(t));
    }

    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    auto rnd_rat = [&] { return make_rat(num(rng), den(rng)); };
    for (int t = 0; t < 200; ++t) {
        Rat r = rnd_rat(), b1 = rnd_rat(), b2 = rnd_rat(), b3 = rnd_rat();
        Rat d1 = rnd_rat(), d2 = rnd_rat(), d3 = rnd_rat(), n = rnd_rat();
        Rat lhs = delta_spin(embed_e3(r, b1, b2, b3, d1, d2, d3, n));
        Rat rhs = e3_remark_polynomial(r, b1, b2, b3, d1, d2, d3, n);
        if (lhs != rhs) f.note("E1xE2xE3 mismatch at trial " +
                               std::to_string(t));
        GammaVector v{num(rng), num(rng), num(rng), num(rng)};
        if (delta_spin(embed_ppav(v)) != discriminant(v))
            f.note("rank-one discriminant mismatch at trial " +
                   std::to_string(t));
    }
}

void check_sl2_rep(Failure& f) {
    Rep4 t = sl2_matrix_rep(SL2Matrix::T());
    Rep4 s = sl2_matrix_rep(SL2Matrix::S());
    const long tw[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0},
                           {1, 3, 3, 1}};
    const long sw[4][4] = {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0},
                           {-1, 0, 0, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (t[i][j] != tw[i][j]) f.note("rep(T) entry mismatch");
            if (s[i][j] != sw[i][j]) f.note("rep(S) entry mismatch");
        }

    std::mt19937_64 rng(624);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<int> comp(-50, 50);
    auto rnd_g = [&] {
        SL2Matrix g;
        int l = len(rng);
        for (int i = 0; i < l; ++i) {
            int e = exp(rng);
            SL2Matrix t_pow{1, e, 0, 1};
            g = g * t_pow * SL2Matrix::S();
        }
        return g;
    };
    auto rnd_v = [&] {
        return GammaVector{comp(rng), comp(rng), comp(rng), comp(rng)};
    };
    for (int t_i = 0; t_i < 1000; ++t_i) {
        SL2Matrix g = rnd_g(), h = rnd_g();
        GammaVector v = rnd_v(), w = rnd_v();
        if (sl2_act(g, sl2_act(h, v)) != sl2_act(g * h, v))
            f.note("homomorphism failed at trial " + std::to_string(t_i));
        if (rep_multiply(sl2_matrix_rep(g), sl2_matrix_rep(h)) !=
            sl2_matrix_rep(g * h))
            f.note("matrix homomorphism failed at trial " +
                   std::to_string(t_i));
        if (euler_pairing(sl2_act(g, v), sl2_act(g, w)) != euler_pairing(v, w))
            f.note("pairing not invariant at trial " + std::to_string(t_i));
        if (discriminant(sl2_act(g, v)) != discriminant(v))
            f.note("discriminant not invariant at trial " +
                   std::to_string(t_i));
    }
}

// Independent decomposition search for a single vector, by exhaustive trial:
// any two-finite-slope decomposition forces the slopes to be rational roots
// of D t^2 - E t + F with D = v1^2 - v0 v2, E = v1 v2 - v0 v3,
// F = v2^2 - v1 v3, so the reduced numerators divide F and the denominators
// divide D; D = 0 forces a point-class summand.  All candidates are checked
// by exact re-addition.
struct OracleHit {
    int64_t p1, q1, r1, p2, q2, r2;
};

std::vector<int64_t> divisors_abs(int64_t x) {
    std::vector<int64_t> out;
    x = std::abs(x);
    for (int64_t i = 1; i * i <= x; ++i)
        if (x % i == 0) {
            out.push_back(i);
            if (i != x / i) out.push_back(x / i);
        }
    return out;
}

std::optional<OracleHit> oracle_decompose(int64_t v0, int64_t v1, int64_t v2,
                                          int64_t v3) {
    int64_t D = v1 * v1 - v0 * v2;
    int64_t E = v1 * v2 - v0 * v3;
    int64_t F = v2 * v2 - v1 * v3;
    if (D == 0) {
        if (v0 == 0) return std::nullopt;
        for (int64_t p = 1; p * p * p <= std::abs(v0); ++p) {
            if (v0 % (p * p * p) != 0) continue;
            int64_t r = v0 / (p * p * p);
            if (v1 % (r * p * p) != 0) continue;
            int64_t q = v1 / (r * p * p);
            if (std::gcd(p, q) != 1) continue;
            if (r * p * q * q != v2) continue;
            int64_t t = v3 - r * q * q * q;
            if (t == 0) continue;
            return OracleHit{p, q, r, 0, 1, t};
        }
        return std::nullopt;
    }
    // collect rational roots q/p of D t^2 - E t + F
    std::vector<std::pair<int64_t, int64_t>> roots;  // (q, p), p > 0
    auto try_root = [&](int64_t q, int64_t p) {
        if (std::gcd(p, q) != 1) return;
        if (D * q * q - E * p * q + F * p * p != 0) return;
        for (auto& r : roots)
            if (r.first == q && r.second == p) return;
        roots.emplace_back(q, p);
    };
    if (F == 0) {
        try_root(0, 1);
        if (E != 0) {
            int64_t g = std::gcd(std::abs(E), std::abs(D));
            int64_t p = D / g, q = E / g;
            if (p < 0) p = -p, q = -q;
            try_root(q, p);  // the factored root E/D in lowest terms
        }
    } else {
        for (int64_t p : divisors_abs(D))
            for (int64_t q : divisors_abs(F)) {
                try_root(q, p);
                try_root(-q, p);
            }
    }
    if (roots.size() != 2) return std::nullopt;
    auto lt = [](const std::pair<int64_t, int64_t>& a,
                 const std::pair<int64_t, int64_t>& b) {
        return a.first * b.second < b.first * a.second;
    };
    if (lt(roots[1], roots[0])) std::swap(roots[0], roots[1]);
    Rat ta = make_rat(roots[0].first, roots[0].second);
    Rat tb = make_rat(roots[1].first, roots[1].second);
    Rat u1 = (Rat(v1) - Rat(v0) * tb) / (ta - tb);
    Rat u2 = Rat(v0) - u1;
    if (u1 == 0 || u2 == 0) return std::nullopt;
    Rat comp[2][4];
    Rat us[2] = {u1, u2};
    Rat ts[2] = {ta, tb};
    for (int s = 0; s < 2; ++s)
        for (int k = 0; k < 4; ++k) {
            comp[s][k] = us[s];
            for (int e = 0; e < k; ++e) comp[s][k] *= ts[s];
            if (comp[s][k].get_den() != 1) return std::nullopt;
        }
    int64_t vv[4] = {v0, v1, v2, v3};
    for (int k = 0; k < 4; ++k)
        if (comp[0][k] + comp[1][k] != vv[k]) return std::nullopt;
    auto r_of = [&](int s, int64_t p) {
        Rat r = comp[s][0] / (Rat(p) * p * p);
        return r.get_num().get_si();
    };
    return OracleHit{roots[0].second, roots[0].first, r_of(0, roots[0].second),
                     roots[1].second, roots[1].first,
                     r_of(1, roots[1].second)};
}

void check_decompose_oracle(Failure& f) {
    constexpr int64_t kBox = 20;
    constexpr int64_t kClassBound = 2000;
    struct Cls {
        int64_t v[4];
        int64_t p, q, r;
        double slope;  // +inf encoded large
    };
    std::vector<Cls> classes;
    auto push = [&](int64_t p, int64_t q, int64_t r) {
        Cls c;
        c.p = p;
        c.q = q;
        c.r = r;
        c.v[0] = r * p * p * p;
        c.v[1] = r * p * p * q;
        c.v[2] = r * p * q * q;
        c.v[3] = r * q * q * q;
        for (int i = 0; i < 4; ++i)
            if (std::abs(c.v[i]) > kClassBound) return;
        c.slope = p == 0 ? 1e18 : double(q) / double(p);
        classes.push_back(c);
    };
    for (int64_t p = 0; p <= 12; ++p)
        for (int64_t q = -12; q <= 12; ++q) {
            if (p == 0 && q != 1) continue;
            if (std::gcd(p, q) != 1) continue;
            int64_t m = std::max(p, std::abs(q));
            int64_t rmax = kClassBound / (m * m * m);
            for (int64_t r = -rmax; r <= rmax; ++r)
                if (r != 0) push(p, q, r);
        }

    // exact slope order for the pair scan (q1/p1 < q2/p2, p >= 0)
    auto slope_less = [](const Cls& a, const Cls& b) {
        if (a.p == 0) return false;
        if (b.p == 0) return true;
        return a.q * b.p < b.q * a.p;
    };
    std::map<std::array<int64_t, 4>, std::pair<size_t, size_t>> sums;
    bool dup = false;
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = 0; j < classes.size(); ++j) {
            if (!slope_less(classes[i], classes[j])) continue;
            std::array<int64_t, 4> v;
            bool in = true;
            for (int k = 0; k < 4; ++k) {
                v[k] = classes[i].v[k] + classes[j].v[k];
                if (std::abs(v[k]) > kBox) {
                    in = false;
                    break;
                }
            }
            if (!in) continue;
            auto [it, fresh] = sums.emplace(v, std::make_pair(i, j));
            if (!fresh && (classes[it->second.first].v[0] != classes[i].v[0] ||
                           classes[it->second.first].v[1] != classes[i].v[1] ||
                           classes[it->second.first].v[2] != classes[i].v[2] ||
                           classes[it->second.first].v[3] != classes[i].v[3]))
                dup = true;
        }
    if (dup) f.note("pair scan found a non-unique decomposition");

    for (int64_t a = -kBox; a <= kBox; ++a)
        for (int64_t b = -kBox; b <= kBox; ++b)
            for (int64_t c = -kBox; c <= kBox; ++c)
                for (int64_t d = -kBox; d <= kBox; ++d) {
                    if (a == 0 && b == 0 && c == 0 && d == 0) continue;
                    GammaVector v{a, b, c, d};
                    auto dec = decompose(v);
                    auto hit = oracle_decompose(a, b, c, d);
                    if (dec.has_value() != hit.has_value()) {
                        f.note("presence mismatch at " + v.str());
                        continue;
                    }
                    if (dec &&
                        (dec->gamma1.p != hit->p1 || dec->gamma1.q != hit->q1 ||
                         dec->gamma1.r != hit->r1 || dec->gamma2.p != hit->p2 ||
                         dec->gamma2.q != hit->q2 || dec->gamma2.r != hit->r2))
                        f.note("value mismatch at " + v.str());
                    auto it = sums.find({a, b, c, d});
                    if (it != sums.end()) {
                        // every explicitly constructed pair must be recovered
                        const Cls& g1 = classes[it->second.first];
                        const Cls& g2 = classes[it->second.second];
                        if (!dec || dec->gamma1.p != g1.p ||
                            dec->gamma1.q != g1.q || dec->gamma1.r != g1.r ||
                            dec->gamma2.p != g2.p || dec->gamma2.q != g2.q ||
                            dec->gamma2.r != g2.r)
                            f.note("pair-scan mismatch at " + v.str());
                    }
                }
}

SaturatedLattice random_lattice(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> rk(0, m);
    std::uniform_int_distribution<int> entry(-4, 4);
    int k = rk(rng);
    IntMatrix gen(m, std::vector<Int>(k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) gen[i][j] = entry(rng);
    return SaturatedLattice::saturation(m, gen);
}

void check_ring_axioms(Failure& f) {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> amb(2, 6);
    for (int t = 0; t < 500; ++t) {
        int m = amb(rng);
        auto l1 = random_lattice(rng, m);
        auto l2 = random_lattice(rng, m);
        auto l3 = random_lattice(rng, m);
        auto e1 = RingElement::eps(l1);
        auto e2 = RingElement::eps(l2);
        auto e3 = RingElement::eps(l3);
        if (ring_multiply(e1, e2) != ring_multiply(e2, e1))
            f.note("commutativity failed at trial " + std::to_string(t));
        if (ring_multiply(ring_multiply(e1, e2), e3) !=
            ring_multiply(e1, ring_multiply(e2, e3)))
            f.note("associativity failed at trial " + std::to_string(t));
        auto unit = RingElement::eps(SaturatedLattice::full(m));
        if (ring_multiply(unit, e1) != e1)
            f.note("unit failed at trial " + std::to_string(t));
    }
}

void check_wall_geometry(Failure& f) {
    struct Pair {
        int64_t p1, q1, r1, p2, q2, r2;
    };
    std::vector<Pair> pairs = {
        {1, 0, 1, 1, 1, 1},    {1, 0, 1, 1, 1, -1},  {1, 0, -1, 1, 1, 1},
        {1, 0, 2, 1, 1, 3},    {1, -1, 1, 2, 1, 5},  {2, 1, 1, 1, 1, 1},
        {3, 1, 1, 1, 2, 1},    {1, -2, 3, 1, 3, -2}, {1, 2, -2, 1, 3, 1},
        {2, -1, 1, 3, 2, -4},  {1, 0, 1, 0, 1, 1},   {1, 0, 1, 0, 1, -2},
        {1, 1, -3, 0, 1, 5},   {2, 1, 2, 0, 1, 1},   {3, -2, 1, 0, 1, -1},
        {1, 0, 5, 1, 2, 2},    {1, 1, 1, 1, 2, -1},  {2, 3, -1, 1, 2, 1},
        {1, -3, 2, 0, 1, 7},   {4, 1, 1, 1, 1, -2},
    };
    for (size_t ci = 0; ci < pairs.size(); ++ci) {
        const auto& pr = pairs[ci];
        SemihomClass g1{pr.p1, pr.q1, pr.r1};
        SemihomClass g2{pr.p2, pr.q2, pr.r2};
        GammaVector v = g1.as_gamma() + g2.as_gamma();
        auto dec = decompose(v);
        if (!dec) {
            f.note("class " + std::to_string(ci) + " not decomposable");
            continue;
        }
        auto ws = walls_for(v);
        if (ws.size() != 1) {
            f.note("class " + std::to_string(ci) + ": wall count " +
                   std::to_string(ws.size()));
            continue;
        }
        bool ratio_pos = dec->gamma1.r * dec->gamma2.r > 0;
        Rat th1 = dec->gamma1.slope().value();
        if (const auto* c = std::get_if<CircleWall>(&ws[0])) {
            Rat th2 = dec->gamma2.slope().value();
            Rat len = th2 - th1;
            if (c->center_beta != (th1 + th2) / 2 ||
                c->center_alpha_sq != len * len / 12 ||
                c->radius_sq != len * len / 3 ||
                c->center_alpha_sign != (ratio_pos ? -1 : 1))
                f.note("class " + std::to_string(ci) +
                       ": circle parameters mismatch");
        } else {
            const auto& l = std::get<LineWall>(ws[0]);
            if (l.theta1 != th1 || l.line_sign != (ratio_pos ? 1 : -1))
                f.note("class " + std::to_string(ci) +
                       ": line parameters mismatch");
        }
        bool circle = std::holds_alternative<CircleWall>(ws[0]);
        for (int k = 0; k < 64; ++k) {
            double t;
            if (circle) {
                // keep sin(t) >= 0.6 so both the sample and its radial
                // offset stay in the upper half plane for either center sign
                double lo = 0.6535, hi = 2.488;
                t = lo + (hi - lo) * (k + 0.5) / 64.0;
            } else {
                t = 0.05 * (k + 1);
            }
            auto [beta, alpha] = wall_point(ws[0], t);
            if (!on_wall(beta, alpha, v, 1e-9))
                f.note("class " + std::to_string(ci) + ": on-wall sample " +
                       std::to_string(k) + " rejected");
            double ob = beta, oa = alpha;
            if (circle) {
                const auto& c = std::get<CircleWall>(ws[0]);
                double r = std::sqrt(c.radius_sq.get_d());
                double ca = c.center_alpha_sign *
                            std::sqrt(c.center_alpha_sq.get_d());
                ob = c.center_beta.get_d() + (r + 0.1) * std::cos(t);
                oa = ca + (r + 0.1) * std::sin(t);
            } else {
                ob = beta + 0.1;
            }
            if (on_wall(ob, oa, v, 1e-9))
                f.note("class " + std::to_string(ci) + ": off-wall sample " +
                       std::to_string(k) + " accepted");
        }
    }
}

}  // namespace

VerifyReport run_verification() {
    VerifyReport rep;
    rep.checks.push_back(timed("a-coefficients", 1.0, check_a_display));
    rep.checks.push_back(timed("rank-one-anchor", 0, check_rank_one_anchor));
    rep.checks.push_back(
        timed("beta0-closed-form", 5.0, check_beta0_closed_form));
    {
        Failure forbit, fwall;
        auto t0 = Clock::now();
        try {
            orbit_sweep(forbit, fwall);
        } catch (const std::exception& e) {
            forbit.note(std::string("exception: ") + e.what());
        }
        double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        rep.checks.push_back({"orbit-invariance", forbit.count == 0 && dt < 120,
                              forbit.count ? forbit.str() : "ok", dt});
        rep.checks.push_back({"wallcross-consistency", fwall.count == 0,
                              fwall.count ? fwall.str() : "ok", dt});
    }
    rep.checks.push_back(timed("spin-solver", 60.0, check_spin));
    rep.checks.push_back(timed("sl2-representation", 0, check_sl2_rep));
    rep.checks.push_back(
        timed("decompose-oracle", 120.0, check_decompose_oracle));
    rep.checks.push_back(timed("ring-axioms", 0, check_ring_axioms));
    rep.checks.push_back(timed("wall-geometry", 0, check_wall_geometry));
    return rep;
}

}  // namespace abel3
