#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace kinv {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

/// Natural log of |x| for arbitrarily large x; x must be nonzero.
inline double log_abs(const BigInt& x) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

/// Always "p/q", with q >= 1.
inline std::string rational_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Canonical GMP form: "p" for integers, "p/q" otherwise.
inline std::string short_string(const Rational& r) { return r.get_str(); }

inline bool fits_int53(const BigInt& x) {
    static const BigInt bound = BigInt(1) << 53;
    return abs(x) < bound;
}

inline long to_long(const BigInt& x) { return x.get_si(); }

}  // namespace kinv
