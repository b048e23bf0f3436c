#ifndef ABEL3_SPIN_HPP
#define ABEL3_SPIN_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "abel3/gamma.hpp"

namespace abel3 {

// Even-cardinality subsets of {1,...,6} as 6-bit masks (bit i-1 <-> i),
// canonically ordered by size then lexicographically; 32 basis states of the
// even half-spin representation of so(12).
namespace spin {

constexpr int kDim = 32;

int subset_index(uint8_t mask);          // mask -> 0..31
uint8_t subset_mask(int index);          // 0..31 -> mask
std::string subset_name(uint8_t mask);   // e.g. "x1x3" ("1" for the empty set)

// Exact-rational vector on wedge^even U, dim U = 6.
struct SpinVector {
    std::array<Rat, kDim> a{};

    bool operator==(const SpinVector&) const = default;
    bool is_zero() const;

    SpinVector operator+(const SpinVector& o) const;
    SpinVector operator-(const SpinVector& o) const;
    SpinVector operator*(const Rat& s) const;

    // Exterior product (both factors even, so the product is even).
    SpinVector wedge(const SpinVector& o) const;

    // exp of a degree <= 6 even element with zero scalar part would not
    // terminate in general; this is exp of w restricted to nilpotent even
    // elements (no scalar term), used for e^omega with omega of degree 2.
    static SpinVector exp_nilpotent(const SpinVector& w);
};

enum class GenKind { Create, Mixed, Annihilate };

// Create(i,j):     x_i ^ x_j ^ (.)
// Mixed(i,j):      x_i ^ d/dx_j   (i < j, so the -1/2 delta term vanishes)
// Annihilate(i,j): d^2/(dx_i dx_j)
struct LieGenerator {
    GenKind kind;
    int i, j;  // 1 <= i < j <= 6

    LieGenerator(GenKind k, int i_, int j_) : kind(k), i(i_), j(j_) {
        if (!(1 <= i && i < j && j <= 6))
            throw std::invalid_argument("LieGenerator: need 1 <= i < j <= 6");
    }
};

// The 45 generators of so(12) used throughout.
std::vector<LieGenerator> all_generators();

SpinVector apply_generator(const LieGenerator& g, const SpinVector& w);

// 32x32 matrix of the generator in the canonical basis: column j holds the
// image of basis state j.
using SpinMatrix = std::array<std::array<Rat, kDim>, kDim>;
SpinMatrix generator_matrix(const LieGenerator& g);

// Unique invariant bilinear form, normalized by beta(1, x1...x6) = 1.
const SpinMatrix& invariant_bilinear();
Rat bilinear(const SpinVector& v, const SpinVector& w);

// Quartic monomial: non-decreasing quadruple of basis indices in which every
// 1 <= i <= 6 is covered exactly twice.
using QuarticMonomial = std::array<int8_t, 4>;

struct QuarticInvariant {
    std::map<QuarticMonomial, Rat> coeff;

    Rat evaluate(const SpinVector& w) const;
};

// Solves the infinitesimal-invariance system for the quartic; nullspace
// dimension must be exactly 1, normalized by Delta(1 + x1...x6) = -1.
const QuarticInvariant& solve_quartic();

Rat delta_spin(const SpinVector& w);

// r + sum b_i L_i + d_1 L2L3 + d_2 L1L3 + d_3 L1L2 + n x1...x6 with
// L1 = x1x2, L2 = x3x4, L3 = x5x6.
SpinVector embed_e3(const Rat& r, const Rat& b1, const Rat& b2, const Rat& b3,
                    const Rat& d1, const Rat& d2, const Rat& d3, const Rat& n);

// Diagonal embedding of a rank-one Chern vector: H = L1 + L2 + L3.
SpinVector embed_ppav(const GammaVector& v);

// The closed discriminant polynomial for E1 x E2 x E3 classes.
Rat e3_remark_polynomial(const Rat& r, const Rat& b1, const Rat& b2,
                         const Rat& b3, const Rat& d1, const Rat& d2,
                         const Rat& d3, const Rat& n);

}  // namespace spin
}  // namespace abel3

#endif
