#include "abel3/lattice_ring.hpp"

#include <algorithm>

namespace abel3 {
namespace intlin {

namespace {

int rows_of(const IntMatrix& a) { return int(a.size()); }
int cols_of(const IntMatrix& a) { return a.empty() ? 0 : int(a[0].size()); }

IntMatrix identity(int n) {
    IntMatrix u(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    return u;
}

// Column HNF in place; returns the pivot (row, col) list. When u is non-null
// it accumulates the column operations (starts as identity k x k).
std::vector<std::pair<int, int>> hnf_in_place(IntMatrix& a, IntMatrix* u) {
    const int m = rows_of(a), k = cols_of(a);
    auto colop_addmul = [&](int dst, int src, const Int& t) {
        for (int r = 0; r < m; ++r) a[r][dst] += t * a[r][src];
        if (u)
            for (int r = 0; r < k; ++r) (*u)[r][dst] += t * (*u)[r][src];
    };
    auto colop_swap = [&](int c1, int c2) {
        for (int r = 0; r < m; ++r) std::swap(a[r][c1], a[r][c2]);
        if (u)
            for (int r = 0; r < k; ++r) std::swap((*u)[r][c1], (*u)[r][c2]);
    };
    auto colop_negate = [&](int c) {
        for (int r = 0; r < m; ++r) a[r][c] = -a[r][c];
        if (u)
            for (int r = 0; r < k; ++r) (*u)[r][c] = -(*u)[r][c];
    };

    std::vector<std::pair<int, int>> pivots;
    int col = 0;
    for (int row = 0; row < m && col < k; ++row) {
        // Clear the row to the right of `col` via gcd steps.
        while (true) {
            int nz = -1;
            for (int c = col + 1; c < k; ++c)
                if (a[row][c] != 0) {
                    nz = c;
                    break;
                }
            if (nz == -1) break;
            if (a[row][col] == 0) {
                colop_swap(col, nz);
                continue;
            }
            // Reduce the pair (col, nz) euclidean-style.
            if (abs(a[row][col]) <= abs(a[row][nz])) {
                const Int t = a[row][nz] / a[row][col];
                colop_addmul(nz, col, -t);
            } else {
                colop_swap(col, nz);
            }
        }
        if (a[row][col] == 0) continue;
        if (a[row][col] < 0) colop_negate(col);
        // Reduce entries left of the pivot into [0, pivot).
        for (int c = 0; c < col; ++c) {
            Int t;
            mpz_fdiv_q(t.get_mpz_t(), a[row][c].get_mpz_t(),
                       a[row][col].get_mpz_t());
            if (t != 0) colop_addmul(c, col, -t);
        }
        pivots.emplace_back(row, col);
        ++col;
    }
    return pivots;
}

}  // namespace

IntMatrix column_hnf(const IntMatrix& a) {
    IntMatrix h = a;
    hnf_in_place(h, nullptr);
    return h;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    const int k = cols_of(a);
    IntMatrix h = a;
    IntMatrix u = identity(k);
    const auto pivots = hnf_in_place(h, &u);
    const int r = int(pivots.size());
    // Kernel basis: columns of u beyond the pivot columns.
    IntMatrix ker(k, std::vector<Int>(k - r, 0));
    for (int c = r; c < k; ++c)
        for (int row = 0; row < k; ++row) ker[row][c - r] = u[row][c];
    return ker;
}

int rank(const IntMatrix& a) {
    IntMatrix h = a;
    return int(hnf_in_place(h, nullptr).size());
}

std::vector<Int> smith_invariants(IntMatrix a) {
    const int m = rows_of(a), k = cols_of(a);
    std::vector<Int> inv;
    int top = 0;
    while (top < m && top < k) {
        // Find a nonzero entry in the submatrix starting at (top, top).
        int pr = -1, pc = -1;
        for (int r = top; r < m && pr < 0; ++r)
            for (int c = top; c < k; ++c)
                if (a[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        for (int r = 0; r < m; ++r) std::swap(a[r][top], a[r][pc]);
        std::swap(a[pr], a[top]);
        // Eliminate row and column `top` via gcd steps until clean.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int r = top + 1; r < m; ++r) {
                while (a[r][top] != 0) {
                    const Int t = a[r][top] / a[top][top];
                    for (int c = top; c < k; ++c) a[r][c] -= t * a[top][c];
                    if (a[r][top] != 0) std::swap(a[r], a[top]);
                }
            }
            for (int c = top + 1; c < k; ++c) {
                while (a[top][c] != 0) {
                    const Int t = a[top][c] / a[top][top];
                    for (int r = top; r < m; ++r) a[r][c] -= t * a[r][top];
                    if (a[top][c] != 0)
                        for (int r = top; r < m; ++r)
                            std::swap(a[r][c], a[r][top]);
                }
                if (a[top][c] != 0) dirty = true;
            }
            for (int r = top + 1; r < m; ++r)
                if (a[r][top] != 0) dirty = true;
        }
        inv.push_back(abs(a[top][top]));
        ++top;
    }
    // Enforce the divisibility chain d_i | d_{i+1}.
    for (size_t i = 0; i + 1 < inv.size(); ++i)
        for (size_t j = i + 1; j < inv.size(); ++j) {
            Int g;
            mpz_gcd(g.get_mpz_t(), inv[i].get_mpz_t(), inv[j].get_mpz_t());
            if (g == inv[i]) continue;
            const Int l = inv[i] / g * inv[j];
            inv[i] = g;
            inv[j] = l;
        }
    return inv;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const int m = rows_of(a), n = cols_of(a), k = cols_of(b);
    IntMatrix r(m, std::vector<Int>(k, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j)
            for (int t = 0; t < n; ++t) r[i][j] += a[i][t] * b[t][j];
    return r;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i].insert(r[i].end(), b[i].begin(), b[i].end());
    return r;
}

}  // namespace intlin

namespace {

// Drop zero columns (HNF pushes them right).
IntMatrix strip_zero_columns(const IntMatrix& h) {
    const int m = int(h.size());
    const int k = h.empty() ? 0 : int(h[0].size());
    int keep = 0;
    for (int c = 0; c < k; ++c) {
        bool nz = false;
        for (int r = 0; r < m; ++r)
            if (h[r][c] != 0) nz = true;
        if (nz) keep = c + 1;
    }
    IntMatrix out(m, std::vector<Int>(keep));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < keep; ++c) out[r][c] = h[r][c];
    return out;
}

}  // namespace

SaturatedLattice::SaturatedLattice(int ambient, IntMatrix generators)
    : m_(ambient) {
    if (ambient < 1) throw std::invalid_argument("SaturatedLattice: ambient < 1");
    for (const auto& row : generators)
        if (int(row.size()) != (generators.empty() ? 0 : int(generators[0].size())))
            throw std::invalid_argument("SaturatedLattice: ragged matrix");
    if (!generators.empty() && int(generators.size()) != ambient)
        throw std::invalid_argument("SaturatedLattice: wrong row count");
    if (generators.empty()) generators.assign(ambient, {});

    basis_ = strip_zero_columns(intlin::column_hnf(generators));
    if (!basis_.empty() && !basis_[0].empty()) {
        const auto inv = intlin::smith_invariants(basis_);
        for (const Int& d : inv)
            if (d != 1)
                throw std::invalid_argument(
                    "SaturatedLattice: span is not saturated");
    }
}

SaturatedLattice SaturatedLattice::full(int ambient) {
    IntMatrix id(ambient, std::vector<Int>(ambient, 0));
    for (int i = 0; i < ambient; ++i) id[i][i] = 1;
    return SaturatedLattice(ambient, std::move(id));
}

SaturatedLattice SaturatedLattice::zero(int ambient) {
    return SaturatedLattice(ambient, IntMatrix(ambient, std::vector<Int>{}));
}

SaturatedLattice SaturatedLattice::saturation(int ambient,
                                              const IntMatrix& generators) {
    // Sat(L) is the integer kernel of a basis of the rational annihilator,
    // and integer kernels are saturated.
    IntMatrix basis = strip_zero_columns(intlin::column_hnf(generators));
    if (basis.empty() || basis[0].empty())
        return SaturatedLattice::zero(ambient);
    // Rows of ann: integer kernel of basis^T.
    IntMatrix bt(basis[0].size(), std::vector<Int>(ambient));
    for (int r = 0; r < ambient; ++r)
        for (size_t c = 0; c < basis[0].size(); ++c) bt[c][r] = basis[r][c];
    IntMatrix ann = intlin::integer_kernel(bt);  // ambient x (m - rank)
    if (ann.empty() || ann[0].empty()) return SaturatedLattice::full(ambient);
    IntMatrix ann_t(ann[0].size(), std::vector<Int>(ambient));
    for (int r = 0; r < ambient; ++r)
        for (size_t c = 0; c < ann[0].size(); ++c) ann_t[c][r] = ann[r][c];
    return SaturatedLattice(ambient, intlin::integer_kernel(ann_t));
}

SaturatedLattice SaturatedLattice::intersect(const SaturatedLattice& o) const {
    if (m_ != o.m_)
        throw std::invalid_argument("intersect: ambient rank mismatch");
    if (rank() == 0 || o.rank() == 0) return zero(m_);
    IntMatrix neg = o.basis_;
    for (auto& row : neg)
        for (auto& x : row) x = -x;
    const IntMatrix ker = intlin::integer_kernel(intlin::hconcat(basis_, neg));
    if (ker.empty() || ker[0].empty()) return zero(m_);
    // First block of the kernel gives coordinates in this lattice's basis.
    IntMatrix x(rank(), std::vector<Int>(ker[0].size()));
    for (int r = 0; r < rank(); ++r) x[r] = ker[r];
    return SaturatedLattice(m_, intlin::multiply(basis_, x));
}

bool SaturatedLattice::operator<(const SaturatedLattice& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    if (rank() != o.rank()) return rank() < o.rank();
    return basis_ < o.basis_;
}

RingElement RingElement::eps(const SaturatedLattice& l, Rat c) {
    RingElement e{l.ambient(), {}};
    if (c != 0) e.terms.emplace(l, std::move(c));
    return e;
}

void RingElement::add_term(const SaturatedLattice& l, const Rat& c) {
    if (l.ambient() != ambient)
        throw std::invalid_argument("RingElement: ambient mismatch");
    auto [it, inserted] = terms.try_emplace(l, 0);
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

RingElement eps_product(const SaturatedLattice& l1, const SaturatedLattice& l2) {
    if (l1.ambient() != l2.ambient())
        throw std::invalid_argument("eps_product: ambient rank mismatch");
    const int m = l1.ambient();
    const int expected = l1.rank() + l2.rank() - m;
    if (expected < 0) return RingElement::zero(m);
    const SaturatedLattice meet = l1.intersect(l2);
    if (meet.rank() != expected) return RingElement::zero(m);
    // Transverse: torsion order of Z^m / (L1 + L2) from the Smith form of
    // the concatenated bases (the sum has full rank here).
    const auto inv =
        intlin::smith_invariants(intlin::hconcat(l1.basis(), l2.basis()));
    if (int(inv.size()) != m)
        throw std::logic_error("eps_product: sum not of full rank");
    Int t = 1;
    for (const Int& d : inv) t *= d;
    return RingElement::eps(meet, Rat(t));
}

RingElement ring_multiply(const RingElement& x, const RingElement& y) {
    if (x.ambient != y.ambient)
        throw std::invalid_argument("ring_multiply: ambient mismatch");
    RingElement out = RingElement::zero(x.ambient);
    for (const auto& [lx, cx] : x.terms)
        for (const auto& [ly, cy] : y.terms) {
            const RingElement p = eps_product(lx, ly);
            for (const auto& [l, c] : p.terms) out.add_term(l, cx * cy * c);
        }
    return out;
}

}  // namespace abel3
