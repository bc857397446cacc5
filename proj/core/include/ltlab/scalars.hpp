#pragma once

// Arbitrary-precision scalar types used across the library, plus small
// p-adic valuation helpers on them.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace ltlab {

namespace mp = boost::multiprecision;

using Int      = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

// Dynamic-precision real; the working precision (decimal digits) is set per
// computation via BigFloat::default_precision.
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

// Valuation of zero.
inline constexpr long kValInf = std::numeric_limits<long>::max() / 2;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.backend().data(), 40) != 0;
}

// Representative of a mod m in [0, m).
inline Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    Int aa = mod_reduce(a, m);
    if (mpz_invert(r.backend().data(), aa.backend().data(), m.backend().data()) == 0)
        throw std::domain_error("mod_inverse: element not invertible");
    return r;
}

inline long val_p(Int x, const Int& p) {
    if (x == 0) return kValInf;
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline long val_p(const Rational& x, const Int& p) {
    if (x == 0) return kValInf;
    return val_p(numerator(x), p) - val_p(denominator(x), p);
}

}  // namespace ltlab
