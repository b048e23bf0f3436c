#ifndef ABEL3_WALLCROSS_HPP
#define ABEL3_WALLCROSS_HPP

#include <optional>

#include "abel3/semihomog.hpp"

namespace abel3 {

// Case split of the wall-crossing formula: NoWall when -d/c misses the
// half-open slope interval (or c = 0), Wall otherwise with the crossing
// point -d/c.
struct WallCrossCase {
    bool wall;
    std::optional<Rat> crossing;  // set iff wall

    static WallCrossCase no_wall() { return {false, std::nullopt}; }
    static WallCrossCase at(Rat x) { return {true, std::move(x)}; }
};

// Sum_{k >= 1, k | |r|} 1/k^2 for the content |r| of the class.
Rat dt_semihom(const SemihomClass& c);

WallCrossCase classify(const SL2Matrix& g, const Decomposition& d);

// (-1)^{r1 r2 a} r1 r2 a^9 (sum 1/k1^2)(sum 1/k2^2) with a = p1 q2 - p2 q1.
Rat wall_crossing_term(const Decomposition& d);

}  // namespace abel3

#endif
