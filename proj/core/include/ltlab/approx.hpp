#pragma once

// High-precision reals with rigorous (conservative) absolute error bounds.
// Values are MPFR floats at a guarded working precision; bounds are doubles
// propagated outward-rounding with a rounding-ulp cushion per operation.

#include "ltlab/scalars.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <string>

namespace ltlab {

// Scoped working precision (decimal digits) for BigFloat construction.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits)
        : old_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits);
    }
    ~PrecisionGuard() { BigFloat::default_precision(old_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned old_;
};

struct RealApprox {
    BigFloat value;
    double err = 0.0;  // |true - value| <= err

    RealApprox() : value(0) {}
    explicit RealApprox(BigFloat v, double e = 0.0) : value(std::move(v)), err(e) {}
    static RealApprox exact_int(long k) { return RealApprox(BigFloat(k), 0.0); }
    static RealApprox from_rational(const Rational& r) {
        BigFloat v = BigFloat(numerator(r).str()) / BigFloat(denominator(r).str());
        return RealApprox(v, ulp_of(v));
    }

    static double ulp_of(const BigFloat& v) {
        double av = std::fabs(static_cast<double>(v));
        double scale = std::pow(10.0, -static_cast<double>(BigFloat::default_precision()) + 1.0);
        return av * scale + 1e-300;
    }

    std::string str(unsigned digits = 0) const;
};

inline RealApprox operator+(const RealApprox& a, const RealApprox& b) {
    BigFloat v = a.value + b.value;
    return RealApprox(v, a.err + b.err + RealApprox::ulp_of(v));
}

inline RealApprox operator-(const RealApprox& a) { return RealApprox(-a.value, a.err); }

inline RealApprox operator-(const RealApprox& a, const RealApprox& b) {
    BigFloat v = a.value - b.value;
    return RealApprox(v, a.err + b.err + RealApprox::ulp_of(v));
}

inline RealApprox operator*(const RealApprox& a, const RealApprox& b) {
    BigFloat v = a.value * b.value;
    double aa = std::fabs(static_cast<double>(a.value));
    double ab = std::fabs(static_cast<double>(b.value));
    return RealApprox(v, aa * b.err + ab * a.err + a.err * b.err + RealApprox::ulp_of(v));
}

inline RealApprox approx_div_int(const RealApprox& a, long k) {
    if (k == 0) throw std::domain_error("approx_div_int: division by zero");
    BigFloat v = a.value / k;
    return RealApprox(v, a.err / std::fabs(static_cast<double>(k)) + RealApprox::ulp_of(v));
}

inline RealApprox approx_inv(const RealApprox& a) {
    double av = std::fabs(static_cast<double>(a.value));
    if (!(av > a.err)) throw std::domain_error("approx_inv: interval contains zero");
    BigFloat v = 1 / a.value;
    double e = a.err / (av * (av - a.err));
    return RealApprox(v, e + RealApprox::ulp_of(v));
}

inline RealApprox approx_exp(const RealApprox& a) {
    BigFloat v = exp(a.value);
    double dv = std::fabs(static_cast<double>(v));
    double grow = a.err < 1.0 ? std::exp(a.err) : std::exp(1.0) * std::exp(a.err - 1.0);
    return RealApprox(v, dv * a.err * grow + RealApprox::ulp_of(v));
}

inline RealApprox approx_log(const RealApprox& a) {
    double av = static_cast<double>(a.value);
    if (!(av > a.err)) throw std::domain_error("approx_log: argument not strictly positive");
    BigFloat v = log(a.value);
    return RealApprox(v, a.err / (av - a.err) + RealApprox::ulp_of(v));
}

inline RealApprox approx_pi() {
    BigFloat v = boost::math::constants::pi<BigFloat>();
    return RealApprox(v, RealApprox::ulp_of(v));
}

inline RealApprox approx_pow_int(const RealApprox& a, int e) {
    RealApprox r = RealApprox::exact_int(1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

// |a - b| <= err_a + err_b + tol.
inline bool approx_consistent(const RealApprox& a, const RealApprox& b, double tol = 0.0) {
    double d = std::fabs(static_cast<double>(a.value - b.value));
    return d <= a.err + b.err + tol;
}

// Coefficient ring for the series engine.
struct ApproxRing {
    using Elem = RealApprox;
    static constexpr bool exact = false;

    Elem zero() const { return RealApprox(); }
    Elem one() const { return RealApprox::exact_int(1); }
    Elem from_int(long k) const { return RealApprox::exact_int(k); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return approx_inv(a); }
    Elem mul_int(const Elem& a, long k) const { return a * RealApprox::exact_int(k); }
    Elem div_int(const Elem& a, long k) const { return approx_div_int(a, k); }
    bool is_zero(const Elem& a) const { return a.value == 0 && a.err == 0; }
    bool eq(const Elem& a, const Elem& b) const { return approx_consistent(a, b); }
    std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace ltlab
