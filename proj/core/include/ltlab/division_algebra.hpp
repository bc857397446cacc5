#pragma once

// Normal-form arithmetic in o_D = W(F_q)<F>/(F^n - p) with F a = sigma(a) F,
// its (1/n)Z-valued valuation and unit group, and the semidirect-product
// Weil elements (a, m) in W(F_q)^x |x Z with their embedding a F^m into D.

#include "ltlab/padic.hpp"

#include <optional>

namespace ltlab {

// sum_{i < n} a_i F^i; coefficient valuations may go negative (elements of D
// rather than o_D).
class ODElem {
public:
    explicit ODElem(ModulusPtr mod);  // zero
    static ODElem from_scalar(const UnramifiedElem& a);
    static ODElem from_coeffs(ModulusPtr mod, std::vector<UnramifiedElem> coeffs);
    static ODElem one(ModulusPtr mod);
    static ODElem frobenius_gen(ModulusPtr mod);      // F
    static ODElem frobenius_gen_inv(ModulusPtr mod);  // F^{-1} = p^{-1} F^{n-1}

    const ModulusPtr& modulus() const { return mod_; }
    const UnramifiedElem& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    bool is_zero() const;
    bool in_od() const;    // all coefficient valuations >= 0
    bool is_unit() const;  // valuation exactly 0

    // min_i (i/n + val(a_i)) in (1/n)Z; nullopt for zero.
    std::optional<Rational> valuation() const;

    ODElem operator-() const;
    friend ODElem operator+(const ODElem& a, const ODElem& b);
    friend ODElem operator-(const ODElem& a, const ODElem& b);
    // a_i sigma^i(b_j) F^(i+j) with F^(i+j) = p^((i+j) div n) F^((i+j) mod n).
    friend ODElem operator*(const ODElem& a, const ODElem& b);
    friend bool operator==(const ODElem& a, const ODElem& b);

    // Two-sided inverse mod p^N by Newton iteration y <- y(2 - xy) from the
    // residue inverse; requires valuation 0.
    ODElem inverse() const;
    ODElem pow(long e) const;  // negative e allowed for units and F

    // Value congruence mod p^k coefficientwise (after clearing a common
    // denominator power of p when valuations are negative).
    bool congruent(const ODElem& b, int k) const;

    std::string str() const;

private:
    ModulusPtr mod_;
    std::vector<UnramifiedElem> c_;
};

// F a F^{-1} computed inside D; equals frobenius(a) embedded.
ODElem conj_by_F(const UnramifiedElem& a);

// True iff x commutes with both F and the Teichmueller generator.
bool center_check(const ODElem& x);

// (a, m) in W(F_q)^x |x Z with (a, m)(b, k) = (a sigma^m(b), m + k).
struct WeilElem {
    UnramifiedElem a;  // val = 0
    long m;
};

WeilElem weil_elem(UnramifiedElem a, long m);  // validates the unit part
WeilElem weil_mul(const WeilElem& x, const WeilElem& y);
WeilElem weil_inv(const WeilElem& x);
bool weil_eq(const WeilElem& x, const WeilElem& y);

// a F^m in D (lands in o_D when m >= 0).
ODElem weil_embed(const WeilElem& x);

}  // namespace ltlab
