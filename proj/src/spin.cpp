#include "abel3/spin.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace abel3 {
namespace spin {

namespace {

std::vector<int> mask_elements(uint8_t mask) {
    std::vector<int> els;
    for (int i = 0; i < 6; ++i)
        if (mask & (1 << i)) els.push_back(i + 1);
    return els;
}

const std::array<uint8_t, kDim>& mask_table() {
    static const std::array<uint8_t, kDim> table = [] {
        std::vector<uint8_t> masks;
        for (int m = 0; m < 64; ++m)
            if (std::popcount(unsigned(m)) % 2 == 0)
                masks.push_back(uint8_t(m));
        std::sort(masks.begin(), masks.end(), [](uint8_t a, uint8_t b) {
            const int pa = std::popcount(unsigned(a));
            const int pb = std::popcount(unsigned(b));
            if (pa != pb) return pa < pb;
            return mask_elements(a) < mask_elements(b);
        });
        std::array<uint8_t, kDim> t{};
        std::copy(masks.begin(), masks.end(), t.begin());
        return t;
    }();
    return table;
}

const std::array<int, 64>& index_table() {
    static const std::array<int, 64> table = [] {
        std::array<int, 64> t;
        t.fill(-1);
        for (int i = 0; i < kDim; ++i) t[mask_table()[i]] = i;
        return t;
    }();
    return table;
}

// Parity of the number of set bits of `mask` strictly below position `pos`
// (0-based).
int sign_below(uint8_t mask, int pos) {
    const unsigned below = mask & ((1u << pos) - 1);
    return std::popcount(below) % 2 == 0 ? 1 : -1;
}

// Basis-level x_i wedge: returns {sign, mask} or sign 0.
std::pair<int, uint8_t> wedge_var(int i, uint8_t mask) {
    const int pos = i - 1;
    if (mask & (1 << pos)) return {0, 0};
    return {sign_below(mask, pos), uint8_t(mask | (1 << pos))};
}

// Basis-level interior product d/dx_i as a left odd derivation.
std::pair<int, uint8_t> contract_var(int i, uint8_t mask) {
    const int pos = i - 1;
    if (!(mask & (1 << pos))) return {0, 0};
    return {sign_below(mask, pos), uint8_t(mask & ~(1 << pos))};
}

// --- sparse exact linear algebra -----------------------------------------

using Row = std::map<int, Rat>;

// Incremental reduced row echelon form over Q for homogeneous systems.
class NullspaceSolver {
public:
    explicit NullspaceSolver(int nvars) : nvars_(nvars) {}

    void add_equation(Row row) {
        // Reduce against existing pivots.
        for (auto it = row.begin(); it != row.end();) {
            auto p = rows_.find(it->first);
            if (p == rows_.end()) {
                ++it;
                continue;
            }
            const Rat factor = it->second;
            for (const auto& [k, c] : p->second) {
                auto [slot, inserted] = row.try_emplace(k, 0);
                slot->second -= factor * c;
                if (slot->second == 0) row.erase(slot);
            }
            it = row.upper_bound(p->first);
        }
        if (row.empty()) return;
        // Normalize on the smallest-index variable and back-eliminate.
        const int pivot = row.begin()->first;
        const Rat lead = row.begin()->second;
        for (auto& [k, c] : row) c /= lead;
        for (auto& [p, r] : rows_) {
            auto hit = r.find(pivot);
            if (hit == r.end()) continue;
            const Rat factor = hit->second;
            for (const auto& [k, c] : row) {
                auto [slot, inserted] = r.try_emplace(k, 0);
                slot->second -= factor * c;
                if (slot->second == 0) r.erase(slot);
            }
        }
        rows_.emplace(pivot, std::move(row));
    }

    int nullity() const { return nvars_ - int(rows_.size()); }

    // The kernel vector with the unique free variable set to 1; requires
    // nullity exactly 1.
    std::vector<Rat> kernel_vector() const {
        if (nullity() != 1)
            throw std::logic_error("NullspaceSolver: nullspace dimension != 1");
        int free_var = -1;
        for (int v = 0; v < nvars_; ++v)
            if (!rows_.count(v)) {
                free_var = v;
                break;
            }
        std::vector<Rat> x(nvars_, Rat(0));
        x[free_var] = 1;
        for (const auto& [p, r] : rows_) {
            auto hit = r.find(free_var);
            if (hit != r.end()) x[p] = -hit->second;
        }
        return x;
    }

private:
    int nvars_;
    std::map<int, Row> rows_;  // pivot variable -> fully reduced row
};

}  // namespace

int subset_index(uint8_t mask) {
    const int idx = index_table()[mask & 63];
    if (idx < 0) throw std::invalid_argument("subset_index: odd subset");
    return idx;
}

uint8_t subset_mask(int index) {
    if (index < 0 || index >= kDim)
        throw std::out_of_range("subset_mask: bad index");
    return mask_table()[index];
}

std::string subset_name(uint8_t mask) {
    if (mask == 0) return "1";
    std::string s;
    for (int e : mask_elements(mask)) s += "x" + std::to_string(e);
    return s;
}

bool SpinVector::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
}

SpinVector SpinVector::operator+(const SpinVector& o) const {
    SpinVector r;
    for (int i = 0; i < kDim; ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

SpinVector SpinVector::operator-(const SpinVector& o) const {
    SpinVector r;
    for (int i = 0; i < kDim; ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

SpinVector SpinVector::operator*(const Rat& s) const {
    SpinVector r;
    for (int i = 0; i < kDim; ++i) r.a[i] = a[i] * s;
    return r;
}

SpinVector SpinVector::wedge(const SpinVector& o) const {
    SpinVector r;
    for (int i = 0; i < kDim; ++i) {
        if (a[i] == 0) continue;
        const uint8_t mi = subset_mask(i);
        for (int j = 0; j < kDim; ++j) {
            if (o.a[j] == 0) continue;
            const uint8_t mj = subset_mask(j);
            if (mi & mj) continue;
            // Sign of sorting the concatenation: count inversions between
            // the two sorted blocks.
            int inv = 0;
            for (int p = 0; p < 6; ++p)
                if (mj & (1 << p))
                    inv += std::popcount(unsigned(mi >> (p + 1)));
            const int sign = inv % 2 == 0 ? 1 : -1;
            r.a[subset_index(mi | mj)] += sign * a[i] * o.a[j];
        }
    }
    return r;
}

SpinVector SpinVector::exp_nilpotent(const SpinVector& w) {
    if (w.a[0] != 0)
        throw std::invalid_argument("exp_nilpotent: nonzero scalar part");
    SpinVector result;
    result.a[0] = 1;
    SpinVector power = w;
    Rat factorial(1);
    for (int k = 1; k <= 3; ++k) {
        factorial *= k;
        result = result + power * (1 / factorial);
        power = power.wedge(w);
        if (power.is_zero()) break;
    }
    return result;
}

std::vector<LieGenerator> all_generators() {
    std::vector<LieGenerator> gens;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            gens.emplace_back(GenKind::Create, i, j);
            gens.emplace_back(GenKind::Mixed, i, j);
            gens.emplace_back(GenKind::Annihilate, i, j);
        }
    return gens;
}

SpinVector apply_generator(const LieGenerator& g, const SpinVector& w) {
    SpinVector r;
    for (int idx = 0; idx < kDim; ++idx) {
        if (w.a[idx] == 0) continue;
        const uint8_t mask = subset_mask(idx);
        int sign = 1;
        uint8_t cur = mask;
        switch (g.kind) {
            case GenKind::Create: {
                auto [s1, m1] = wedge_var(g.j, cur);
                if (s1 == 0) continue;
                auto [s2, m2] = wedge_var(g.i, m1);
                if (s2 == 0) continue;
                sign = s1 * s2;
                cur = m2;
                break;
            }
            case GenKind::Mixed: {
                auto [s1, m1] = contract_var(g.j, cur);
                if (s1 == 0) continue;
                auto [s2, m2] = wedge_var(g.i, m1);
                if (s2 == 0) continue;
                sign = s1 * s2;
                cur = m2;
                break;
            }
            case GenKind::Annihilate: {
                auto [s1, m1] = contract_var(g.j, cur);
                if (s1 == 0) continue;
                auto [s2, m2] = contract_var(g.i, m1);
                if (s2 == 0) continue;
                sign = s1 * s2;
                cur = m2;
                break;
            }
        }
        r.a[subset_index(cur)] += sign * w.a[idx];
    }
    return r;
}

SpinMatrix generator_matrix(const LieGenerator& g) {
    SpinMatrix m;
    for (auto& row : m) row.fill(Rat(0));
    for (int j = 0; j < kDim; ++j) {
        SpinVector e;
        e.a[j] = 1;
        const SpinVector img = apply_generator(g, e);
        for (int i = 0; i < kDim; ++i) m[i][j] = img.a[i];
    }
    return m;
}

const SpinMatrix& invariant_bilinear() {
    static const SpinMatrix form = [] {
        // Unknown M[u][v] at index u*32+v; invariance reads
        // sum_k X[k][r] M[k][s] + sum_k X[k][s] M[r][k] = 0.
        NullspaceSolver solver(kDim * kDim);
        for (const auto& g : all_generators()) {
            const SpinMatrix x = generator_matrix(g);
            for (int r = 0; r < kDim; ++r)
                for (int s = 0; s < kDim; ++s) {
                    Row eq;
                    for (int k = 0; k < kDim; ++k) {
                        if (x[k][r] != 0) eq[k * kDim + s] += x[k][r];
                        if (x[k][s] != 0) eq[r * kDim + k] += x[k][s];
                    }
                    for (auto it = eq.begin(); it != eq.end();)
                        it = it->second == 0 ? eq.erase(it) : std::next(it);
                    if (!eq.empty()) solver.add_equation(std::move(eq));
                }
        }
        std::vector<Rat> kernel = solver.kernel_vector();
        const int i0 = subset_index(0);
        const int ifull = subset_index(63);
        const Rat norm = kernel[i0 * kDim + ifull];
        if (norm == 0)
            throw std::logic_error("invariant_bilinear: degenerate normalization");
        SpinMatrix m;
        for (int u = 0; u < kDim; ++u)
            for (int v = 0; v < kDim; ++v)
                m[u][v] = kernel[u * kDim + v] / norm;
        return m;
    }();
    return form;
}

Rat bilinear(const SpinVector& v, const SpinVector& w) {
    const SpinMatrix& m = invariant_bilinear();
    Rat sum(0);
    for (int i = 0; i < kDim; ++i) {
        if (v.a[i] == 0) continue;
        for (int j = 0; j < kDim; ++j) {
            if (w.a[j] == 0) continue;
            if (m[i][j] != 0) sum += v.a[i] * m[i][j] * w.a[j];
        }
    }
    return sum;
}

namespace {

std::vector<QuarticMonomial> admissible_monomials() {
    std::vector<QuarticMonomial> out;
    for (int i1 = 0; i1 < kDim; ++i1)
        for (int i2 = i1; i2 < kDim; ++i2)
            for (int i3 = i2; i3 < kDim; ++i3)
                for (int i4 = i3; i4 < kDim; ++i4) {
                    int cover[6] = {0};
                    for (int idx : {i1, i2, i3, i4}) {
                        const uint8_t m = subset_mask(idx);
                        for (int p = 0; p < 6; ++p)
                            if (m & (1 << p)) ++cover[p];
                    }
                    if (std::all_of(cover, cover + 6,
                                    [](int c) { return c == 2; }))
                        out.push_back(QuarticMonomial{int8_t(i1), int8_t(i2),
                                                      int8_t(i3), int8_t(i4)});
                }
    return out;
}

}  // namespace

const QuarticInvariant& solve_quartic() {
    static const QuarticInvariant inv = [] {
        const std::vector<QuarticMonomial> monos = admissible_monomials();
        std::map<QuarticMonomial, int> unknown;
        for (int u = 0; u < int(monos.size()); ++u) unknown[monos[u]] = u;

        NullspaceSolver solver(int(monos.size()));
        for (const auto& g : all_generators()) {
            const SpinMatrix x = generator_matrix(g);
            // delta Delta = sum_M c_M sum_t sum_J X[M_t][J] a_J prod_{t'!=t} a_{M_t'};
            // collect by the resulting degree-4 monomial.
            std::map<QuarticMonomial, Row> eqs;
            for (int u = 0; u < int(monos.size()); ++u) {
                const QuarticMonomial& m = monos[u];
                for (int t = 0; t < 4; ++t) {
                    const int target = m[t];
                    for (int j = 0; j < kDim; ++j) {
                        if (x[target][j] == 0) continue;
                        QuarticMonomial res = m;
                        res[t] = int8_t(j);
                        std::sort(res.begin(), res.end());
                        eqs[res][u] += x[target][j];
                    }
                }
            }
            for (auto& [res, eq] : eqs) {
                for (auto it = eq.begin(); it != eq.end();)
                    it = it->second == 0 ? eq.erase(it) : std::next(it);
                if (!eq.empty()) solver.add_equation(std::move(eq));
            }
        }

        std::vector<Rat> kernel = solver.kernel_vector();
        const QuarticMonomial norm_mono{int8_t(subset_index(0)),
                                        int8_t(subset_index(0)),
                                        int8_t(subset_index(63)),
                                        int8_t(subset_index(63))};
        const Rat norm = kernel[unknown.at(norm_mono)];
        if (norm == 0)
            throw std::logic_error("solve_quartic: degenerate normalization");
        QuarticInvariant q;
        for (int u = 0; u < int(monos.size()); ++u)
            if (kernel[u] != 0) q.coeff[monos[u]] = -kernel[u] / norm;
        return q;
    }();
    return inv;
}

Rat QuarticInvariant::evaluate(const SpinVector& w) const {
    Rat sum(0);
    for (const auto& [m, c] : coeff) {
        const Rat term =
            w.a[m[0]] * w.a[m[1]] * w.a[m[2]] * w.a[m[3]];
        if (term != 0) sum += c * term;
    }
    return sum;
}

Rat delta_spin(const SpinVector& w) { return solve_quartic().evaluate(w); }

SpinVector embed_e3(const Rat& r, const Rat& b1, const Rat& b2, const Rat& b3,
                    const Rat& d1, const Rat& d2, const Rat& d3, const Rat& n) {
    // L1 = x1x2, L2 = x3x4, L3 = x5x6.
    SpinVector w;
    w.a[subset_index(0b000011)] += b1;
    w.a[subset_index(0b001100)] += b2;
    w.a[subset_index(0b110000)] += b3;
    w.a[subset_index(0b111100)] += d1;  // L2 L3
    w.a[subset_index(0b110011)] += d2;  // L1 L3
    w.a[subset_index(0b001111)] += d3;  // L1 L2
    w.a[subset_index(0)] += r;
    w.a[subset_index(0b111111)] += n;
    return w;
}

SpinVector embed_ppav(const GammaVector& v) {
    const Rat v0(v.v0), v1(v.v1), v2(v.v2), v3(v.v3);
    return embed_e3(v0, v1, v1, v1, v2, v2, v2, v3);
}

Rat e3_remark_polynomial(const Rat& r, const Rat& b1, const Rat& b2,
                         const Rat& b3, const Rat& d1, const Rat& d2,
                         const Rat& d3, const Rat& n) {
    return -n * n * r * r - 4 * (r * d1 * d2 * d3 + b1 * b2 * b3 * n) -
           (b1 * b1 * d1 * d1 + b2 * b2 * d2 * d2 + b3 * b3 * d3 * d3) +
           2 * (b1 * b2 * d1 * d2 + b1 * b3 * d1 * d3 + b2 * b3 * d2 * d3) +
           2 * r * n * (b1 * d1 + b2 * d2 + b3 * d3);
}

}  // namespace spin
}  // namespace abel3
