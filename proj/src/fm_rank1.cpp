#include "abel3/fm_rank1.hpp"

namespace abel3 {

bool solves_cubic_unit(const CurveClass& cc, const CubicUnitSolution& s) {
    return s.d * s.d * s.d - 3 * cc.beta * s.c * s.c * s.d -
               cc.n * s.c * s.c * s.c ==
           1;
}

std::vector<CubicUnitSolution> cubic_unit_solutions(const CurveClass& cc,
                                                    const Int& bound) {
    if (bound < 1) throw std::invalid_argument("cubic_unit_solutions: bound < 1");
    std::vector<CubicUnitSolution> out;
    for (Int c = -bound; c <= bound; ++c)
        for (Int d = -bound; d <= bound; ++d) {
            CubicUnitSolution s{c, d};
            if (solves_cubic_unit(cc, s)) out.push_back(std::move(s));
        }
    return out;
}

CurveClass fm_image(const CurveClass& cc, const CubicUnitSolution& s) {
    if (!solves_cubic_unit(cc, s))
        throw std::invalid_argument("fm_image: not a cubic-unit solution");
    const Int &b = cc.beta, &n = cc.n, &c = s.c, &d = s.d;
    CurveClass img;
    img.beta = d * d * b + n * c * d + b * b * c * c;
    img.n = 6 * b * b * d * d * c + 6 * c * c * d * b * n + n +
            2 * c * c * c * n * n - 2 * c * c * c * b * b * b;
    return img;
}

SL2Matrix reconstruct_g(const CurveClass& cc, const CubicUnitSolution& s) {
    if (!solves_cubic_unit(cc, s))
        throw std::invalid_argument("reconstruct_g: not a cubic-unit solution");
    const Int a = s.d * s.d - cc.beta * s.c * s.c;
    const Int b = cc.n * s.c * s.c + 2 * cc.beta * s.c * s.d;
    SL2Matrix g(a, b, s.c, s.d);  // constructor checks det = 1
    const CurveClass img = fm_image(cc, s);
    if (sl2_act(g, cc.as_gamma()) != img.as_gamma())
        throw std::logic_error("reconstruct_g: action mismatch");
    return g;
}

QuestReport check_quest(const CurveClass& cc, const Int& bound) {
    QuestReport rep{cc, bound, {}, false, true};
    auto dec = decompose(cc.as_gamma());
    if (!dec) return rep;  // no slope interval: vacuously no violation
    if (cc.beta == 0 && cc.n <= 0)
        throw std::invalid_argument("check_quest: need beta != 0 or n > 0");

    const Slope lo = dec->gamma1.slope();
    const Slope hi = dec->gamma2.slope();
    for (const auto& s : cubic_unit_solutions(cc, bound)) {
        if (s.c == 0) continue;
        const Slope x = Slope::finite(make_rat(-s.d, s.c));
        const bool open_hit = lo < x && x < hi;
        const bool half_open_hit = lo <= x && x < hi;
        if (!half_open_hit) continue;
        QuestHit hit{s, fm_image(cc, s), open_hit, half_open_hit, true};
        hit.lemma_ok = (hit.image.beta == 0 && hit.image.n <= 0);
        if (open_hit) rep.counterexample = true;
        if (!hit.lemma_ok) rep.lemma_verified = false;
        rep.hits.push_back(std::move(hit));
    }
    return rep;
}

ConsistencyVerdict wallcross_consistency(const CurveClass& cc,
                                         const CubicUnitSolution& s) {
    auto dec = decompose(cc.as_gamma());
    if (!dec)
        throw std::invalid_argument(
            "wallcross_consistency: class is not decomposable");
    const SL2Matrix g = reconstruct_g(cc, s);
    const CurveClass img = fm_image(cc, s);

    ConsistencyVerdict v;
    const WallCrossCase wc = classify(g, *dec);
    v.wall = wc.wall;
    v.lhs = conj_dt(cc.beta, cc.n) - conj_dt(img.beta, img.n);
    v.rhs = wc.wall ? wall_crossing_term(*dec) : Rat(0);
    v.ok = (v.lhs == v.rhs);
    return v;
}

}  // namespace abel3
