#ifndef ABEL3_RATIONAL_HPP
#define ABEL3_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace abel3 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

// "p/q" with "/1" suppressed.
inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

// Exact integer cube root test.
inline std::optional<Int> exact_cbrt(const Int& x) {
    Int r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), 3) != 0) return r;
    return std::nullopt;
}

// Exact square root of a nonnegative integer.
inline std::optional<Int> exact_sqrt(const Int& x) {
    if (x < 0) return std::nullopt;
    Int r = sqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

// Square root of a rational, when it is rational.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    auto n = exact_sqrt(Int(x.get_num()));
    if (!n) return std::nullopt;
    auto d = exact_sqrt(Int(x.get_den()));
    if (!d) return std::nullopt;
    return make_rat(*n, *d);
}

}  // namespace abel3

#endif
