#ifndef ABEL3_LATTICE_RING_HPP
#define ABEL3_LATTICE_RING_HPP

#include <map>
#include <vector>

#include "abel3/rational.hpp"

namespace abel3 {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major, m x k

namespace intlin {

// Column-style Hermite normal form: H = A * U with U unimodular; pivot rows
// strictly increase per column, pivots positive, entries left of a pivot
// reduced into [0, pivot). Zero columns are pushed to the right.
IntMatrix column_hnf(const IntMatrix& a);

// Integer kernel of a (rows x cols): basis of {x : a x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

// Invariant factors d1 | d2 | ... of the Smith normal form (nonzero ones).
std::vector<Int> smith_invariants(IntMatrix a);

int rank(const IntMatrix& a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

}  // namespace intlin

// Saturated sublattice of Z^m in canonical (column HNF) form; models the
// cocharacter lattice of a connected abelian subvariety.
class SaturatedLattice {
public:
    // Canonicalizes the generating columns; throws if the span is not
    // saturated in Z^m.
    SaturatedLattice(int ambient, IntMatrix generators);

    static SaturatedLattice full(int ambient);
    static SaturatedLattice zero(int ambient);
    // Smallest saturated lattice containing the span of the generators.
    static SaturatedLattice saturation(int ambient, const IntMatrix& generators);

    int ambient() const { return m_; }
    int rank() const { return basis_.empty() ? 0 : int(basis_[0].size()); }
    const IntMatrix& basis() const { return basis_; }

    SaturatedLattice intersect(const SaturatedLattice& o) const;

    bool operator==(const SaturatedLattice& o) const {
        return m_ == o.m_ && basis_ == o.basis_;
    }
    bool operator<(const SaturatedLattice& o) const;

private:
    int m_;
    IntMatrix basis_;  // m x rank, canonical HNF; empty columns for rank 0
};

// Formal Q-linear combination of epsilon_L basis symbols.
struct RingElement {
    int ambient;
    std::map<SaturatedLattice, Rat> terms;  // no zero coefficients

    static RingElement zero(int ambient) { return {ambient, {}}; }
    static RingElement eps(const SaturatedLattice& l, Rat c = Rat(1));

    void add_term(const SaturatedLattice& l, const Rat& c);
    bool operator==(const RingElement&) const = default;
};

// epsilon_{L1} . epsilon_{L2}: t * epsilon_{L1 cap L2} when the codimensions
// add up (transversality), 0 otherwise; t is the torsion order of
// Z^m / (L1 + L2).
RingElement eps_product(const SaturatedLattice& l1, const SaturatedLattice& l2);

RingElement ring_multiply(const RingElement& x, const RingElement& y);

}  // namespace abel3

#endif
