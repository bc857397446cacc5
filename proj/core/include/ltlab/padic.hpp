#pragma once

// Exact finite-precision arithmetic in Z_p, Q_p and the unramified extension
// W(F_q) = Z_p[omega], q = p^n, with Teichmueller lifts, Frobenius, and the
// p-adic log/exp on strict units.
//
// Representation: value = p^val * unit with a floating valuation, so elements
// of negative valuation (needed for series work) cost nothing extra.
// UnramifiedElem carries exactly N = modulus->prec relative digits
// (capped-relative semantics: additive cancellation can leave fewer true
// digits than the representation stores; the algorithms in this library stay
// on cancellation-free paths and the tests compare with explicit digit
// counts).

#include "ltlab/scalars.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ltlab {

// Scalar in Q_p with per-element precision tracking: the value is
// p^val * unit, known modulo p^(val + prec). For zero, val is kValInf and
// prec stores the absolute exponent up to which the value is known to vanish.
class PadicFloat {
public:
    PadicFloat(long p, int prec);  // zero, known to absolute precision p^prec
    static PadicFloat from_integer(long p, int prec, const Int& x);
    static PadicFloat from_rational(long p, int prec, const Rational& x);

    long p() const { return p_; }
    int prec() const { return prec_; }
    long val() const { return val_; }
    const Int& unit() const { return unit_; }
    bool is_zero() const { return val_ == kValInf; }
    // Exponent a such that the value is known modulo p^a.
    long abs_prec() const { return is_zero() ? prec_ : val_ + prec_; }

    PadicFloat operator-() const;
    friend PadicFloat operator+(const PadicFloat& a, const PadicFloat& b);
    friend PadicFloat operator-(const PadicFloat& a, const PadicFloat& b);
    friend PadicFloat operator*(const PadicFloat& a, const PadicFloat& b);
    PadicFloat inv() const;  // throws std::domain_error on zero

    // a == b modulo p^abs_prec.
    bool congruent(const PadicFloat& b, long abs_prec) const;
    Rational to_rational() const;  // p^val * unit as an exact rational
    std::string str() const;

private:
    PadicFloat() = default;
    void normalize();

    long p_ = 2;
    int prec_ = 0;
    long val_ = kValInf;
    Int unit_ = 0;
};

class UnramifiedModulus;
using ModulusPtr = std::shared_ptr<const UnramifiedModulus>;

// The ring (Z/p^N)[x]/(m) modelling W(F_q)/p^N, q = p^n.  The modulus m is a
// monic degree-n divisor of x^(q-1) - 1 over Z/p^N whose reduction mod p is
// irreducible, so the class of x is a Teichmueller generator and the
// Frobenius lift is exactly x -> x^p.
class UnramifiedModulus : public std::enable_shared_from_this<UnramifiedModulus> {
public:
    long p;
    int n;
    int prec;          // N
    Int p_pow_prec;    // p^N
    Int q;             // p^n
    std::vector<Int> m;        // size n+1, monic, coefficients in [0, p^N)
    std::vector<Int> frob_x;   // x^p mod (m, p^N), size n

    // Polynomial helpers in (Z/p^N)[x]/(m); vectors have size n.
    std::vector<Int> poly_add(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> poly_sub(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> poly_pow(std::vector<Int> a, Int e) const;
    std::vector<Int> poly_one() const;
    bool poly_is_zero(const std::vector<Int>& a) const;

    // Same ring at lower precision k <= prec (m reduced mod p^k).
    ModulusPtr reduced(int k) const;

    friend ModulusPtr hensel_lift_modulus(long p, int n, int prec);

private:
    UnramifiedModulus() = default;
};

// Deterministic model of W(F_q) at precision N: picks the canonical modulus
// (x - 1 for n = 1; otherwise the Hensel lift of the lexicographically least
// monic irreducible degree-n polynomial over F_p) and verifies the divisor
// and irreducibility invariants. Throws std::invalid_argument on bad input.
ModulusPtr hensel_lift_modulus(long p, int n, int prec);

// Element of W(F_q)[1/p] at the modulus' precision: p^val * unit with unit a
// polynomial of degree < n, nonzero mod p.
class UnramifiedElem {
public:
    explicit UnramifiedElem(ModulusPtr mod);  // zero
    static UnramifiedElem from_int(ModulusPtr mod, const Int& x);
    static UnramifiedElem from_rational(ModulusPtr mod, const Rational& x);
    // p^val * (c[0] + c[1] x + ...), normalized (powers of p pulled into val).
    static UnramifiedElem from_coeffs(ModulusPtr mod, std::vector<Int> c, long val = 0);
    // The Teichmueller generator omega = class of x.
    static UnramifiedElem generator(ModulusPtr mod);

    const ModulusPtr& modulus() const { return mod_; }
    long val() const { return val_; }
    const std::vector<Int>& unit() const { return unit_; }
    bool is_zero() const { return val_ == kValInf; }
    bool is_unit() const { return val_ == 0; }
    // val >= 0, i.e. lies in W(F_q) at this precision.
    bool is_integral() const { return is_zero() || val_ >= 0; }
    // True if the element lies in Z_p (unit polynomial is constant).
    bool is_scalar() const;

    UnramifiedElem operator-() const;
    friend UnramifiedElem operator+(const UnramifiedElem& a, const UnramifiedElem& b);
    friend UnramifiedElem operator-(const UnramifiedElem& a, const UnramifiedElem& b);
    friend UnramifiedElem operator*(const UnramifiedElem& a, const UnramifiedElem& b);
    UnramifiedElem inv() const;
    UnramifiedElem pow(Int e) const;
    UnramifiedElem mul_int(const Int& k) const;
    UnramifiedElem div_int(const Int& k) const;

    // Exact comparison of representations.
    friend bool operator==(const UnramifiedElem& a, const UnramifiedElem& b);
    // Agreement of the leading `digits` relative digits (vals equal, units
    // congruent mod p^digits).
    bool eq_rel(const UnramifiedElem& b, int digits) const;
    // Agreement of the values p^val * unit modulo p^k; both elements must be
    // integral (val >= 0).
    bool congruent(const UnramifiedElem& b, int k) const;

    // Image in the precision-k ring (k <= N); requires val >= 0 or val cut.
    UnramifiedElem to_precision(ModulusPtr reduced_mod) const;
    // Residue polynomial mod p (requires val >= 0; val > 0 reduces to 0).
    std::vector<Int> residue() const;

    std::string str() const;

private:
    void normalize();

    ModulusPtr mod_;
    long val_ = kValInf;
    std::vector<Int> unit_;
};

// The ring endomorphism determined by x -> x^p; fixes Z_p, acts on
// Teichmueller elements by omega -> omega^p, and has order n.
UnramifiedElem frobenius(const UnramifiedElem& a);

// Unique (q-1)st root of unity congruent to the residue of c mod p; computed
// by iterating y -> y^q to its fixed point. Requires a unit (val = 0).
UnramifiedElem teichmueller(const UnramifiedElem& c);

// log on the strict units 1 + pW (1 + 4Z_2 when p = 2), exp on pW (4Z_2 when
// p = 2); mutually inverse at the carried precision, and log turns
// multiplication into addition. Domain violations throw std::domain_error.
UnramifiedElem padic_log(const UnramifiedElem& u);
UnramifiedElem padic_exp(const UnramifiedElem& a);

}  // namespace ltlab
