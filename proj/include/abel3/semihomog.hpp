#ifndef ABEL3_SEMIHOMOG_HPP
#define ABEL3_SEMIHOMOG_HPP

#include <compare>
#include <optional>

#include "abel3/gamma.hpp"

namespace abel3 {

// Slope q/p with the convention p=0 -> infinity; totally ordered with
// infinity maximal.
class Slope {
public:
    static Slope infinity() { return Slope(true, 0); }
    static Slope finite(Rat v) { return Slope(false, std::move(v)); }

    bool is_infinite() const { return inf_; }
    const Rat& value() const {
        if (inf_) throw std::domain_error("Slope: infinite");
        return val_;
    }

    bool operator==(const Slope& o) const {
        return inf_ == o.inf_ && (inf_ || val_ == o.val_);
    }
    bool operator<(const Slope& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return val_ < o.val_;
    }
    bool operator<=(const Slope& o) const { return *this < o || *this == o; }

    std::string str() const { return inf_ ? "inf" : to_string(val_); }

private:
    Slope(bool inf, Rat v) : inf_(inf), val_(std::move(v)) {}
    bool inf_;
    Rat val_;
};

// Canonical (p,q,r) with gcd(p,q)=1, r != 0 and p > 0 or (p,q) = (0,1);
// represents r(p^3, p^2 q, p q^2, q^3).
struct SemihomClass {
    Int p, q, r;

    SemihomClass(Int p_, Int q_, Int r_);

    bool operator==(const SemihomClass&) const = default;

    GammaVector as_gamma() const {
        return {r * p * p * p, r * p * p * q, r * p * q * q, r * q * q * q};
    }
    Slope slope() const {
        if (p == 0) return Slope::infinity();
        return Slope::finite(make_rat(q, p));
    }
    std::string str() const {
        return "(" + to_string(p) + "," + to_string(q) + "," + to_string(r) + ")";
    }
};

// Unique two-summand decomposition with strictly increasing slopes.
struct Decomposition {
    SemihomClass gamma1, gamma2;

    Decomposition(SemihomClass g1, SemihomClass g2);
    bool operator==(const Decomposition&) const = default;
};

// Canonical (p,q,r) with r(p^3,p^2 q,p q^2,q^3) = v, or absent.
std::optional<SemihomClass> in_C(const GammaVector& v);

std::optional<Decomposition> decompose(const GammaVector& v);

bool is_wallcrossing_free(const GammaVector& v);

}  // namespace abel3

#endif
