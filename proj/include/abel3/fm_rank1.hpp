#ifndef ABEL3_FM_RANK1_HPP
#define ABEL3_FM_RANK1_HPP

#include <vector>

#include "abel3/qseries.hpp"
#include "abel3/wallcross.hpp"

namespace abel3 {

// The rank-one class (1, 0, -beta, -n).
struct CurveClass {
    Int beta, n;

    GammaVector as_gamma() const { return {Int(1), Int(0), -beta, -n}; }
    bool operator==(const CurveClass&) const = default;
};

// Integer solution of d^3 - 3 beta c^2 d - n c^3 = 1.
struct CubicUnitSolution {
    Int c, d;
    bool operator==(const CubicUnitSolution&) const = default;
};

bool solves_cubic_unit(const CurveClass& cc, const CubicUnitSolution& s);

// All solutions with |c|, |d| <= bound, lexicographic in (c, d).
std::vector<CubicUnitSolution> cubic_unit_solutions(const CurveClass& cc,
                                                    const Int& bound);

// (beta', n') of the induced Fourier-Mukai image.
CurveClass fm_image(const CurveClass& cc, const CubicUnitSolution& s);

// g = (a, b; c, d) with a = d^2 - beta c^2, b = n c^2 + 2 beta c d; asserts
// det g = 1 and that g maps (1,0,-beta,-n) to (1,0,-beta',-n').
SL2Matrix reconstruct_g(const CurveClass& cc, const CubicUnitSolution& s);

struct QuestHit {
    CubicUnitSolution solution;
    CurveClass image;
    bool open_interval_violation;  // -d/c strictly between the slopes
    bool boundary;                 // -d/c in the half-open interval
    bool lemma_ok;                 // boundary hits have beta' = 0, n' <= 0
};

struct QuestReport {
    CurveClass input;
    Int bound;
    std::vector<QuestHit> hits;  // solutions with c != 0 touching the interval
    bool counterexample;         // any open-interval hit
    bool lemma_verified;         // all boundary hits satisfy beta'=0, n'<=0
};

QuestReport check_quest(const CurveClass& cc, const Int& bound);

struct ConsistencyVerdict {
    bool wall;                   // case (ii)
    Rat lhs;                     // C(beta,n) - C(beta',n')
    Rat rhs;                     // wall-crossing term, or 0 in case (i)
    bool ok;
};

ConsistencyVerdict wallcross_consistency(const CurveClass& cc,
                                         const CubicUnitSolution& s);

}  // namespace abel3

#endif
