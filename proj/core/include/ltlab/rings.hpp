#pragma once

// Coefficient-ring contexts for the series engine. A context is a small
// copyable object that manufactures and combines scalars; one series engine
// then serves exact rationals, p-adic scalars, W(F_q) elements and their
// mod-p reductions.

#include "ltlab/padic.hpp"
#include "ltlab/scalars.hpp"

#include <sstream>
#include <string>

namespace ltlab {

struct RationalRing {
    using Elem = Rational;
    static constexpr bool exact = true;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long k) const { return Rational(k); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalRing: inverse of zero");
        return 1 / a;
    }
    Elem mul_int(const Elem& a, long k) const { return a * k; }
    Elem div_int(const Elem& a, long k) const {
        if (k == 0) throw std::domain_error("RationalRing: division by zero");
        return a / k;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const {
        std::ostringstream os;
        os << a;
        return os.str();
    }
};

struct PadicRing {
    long p;
    int prec;
    using Elem = PadicFloat;
    static constexpr bool exact = true;  // exact mod p^prec

    Elem zero() const { return PadicFloat(p, prec); }
    Elem one() const { return PadicFloat::from_integer(p, prec, 1); }
    Elem from_int(long k) const { return PadicFloat::from_integer(p, prec, Int(k)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    Elem mul_int(const Elem& a, long k) const { return a * from_int(k); }
    Elem div_int(const Elem& a, long k) const { return a * from_int(k).inv(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const {
        return (a - b).is_zero();
    }
    std::string str(const Elem& a) const { return a.str(); }
};

struct UnramifiedRing {
    ModulusPtr mod;
    using Elem = UnramifiedElem;
    static constexpr bool exact = true;  // exact mod p^prec

    Elem zero() const { return UnramifiedElem(mod); }
    Elem one() const { return UnramifiedElem::from_int(mod, 1); }
    Elem from_int(long k) const { return UnramifiedElem::from_int(mod, Int(k)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    Elem mul_int(const Elem& a, long k) const { return a.mul_int(Int(k)); }
    Elem div_int(const Elem& a, long k) const { return a.div_int(Int(k)); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return (a - b).is_zero(); }
    std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace ltlab
