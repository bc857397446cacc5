#pragma once

// Flat equisingular connection machinery at truncated desk scale: the form
// lambda = lambda_0 dz + lambda_1 u^{-1} du with Lie-algebra-valued Laurent
// coefficients, lambda_1 = -z^{-1} sum_k u^k beta_k determined by a graded
// element beta, the degreewise recursion producing lambda_0, the flatness
// residual d_z lambda_1 - H lambda_0 + [lambda_0, lambda_1], and the Witt
// derivations v_k = u^(k+1) d_u.

#include "ltlab/free_lie.hpp"

namespace ltlab {

// Finitely many (z-exponent, u-exponent) -> Lie coefficient; z exponents may
// be negative (poles at z = 0), u exponents are >= 0.
class ConnCoeffs {
public:
    using Key = std::pair<int, int>;  // (z_exp, u_exp)
    using Terms = std::map<Key, GradedLieElem>;

    explicit ConnCoeffs(int trunc) : trunc_(trunc) {}

    int trunc() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GradedLieElem coeff(int z_exp, int u_exp) const;
    void add_term(int z_exp, int u_exp, const GradedLieElem& x);

    ConnCoeffs operator-() const;
    friend ConnCoeffs operator+(const ConnCoeffs& a, const ConnCoeffs& b);
    friend ConnCoeffs operator-(const ConnCoeffs& a, const ConnCoeffs& b);
    friend bool operator==(const ConnCoeffs& a, const ConnCoeffs& b);

    ConnCoeffs dz() const;  // z-derivative
    bool has_u0_term() const;

    std::string str() const;

private:
    int trunc_;
    Terms terms_;
};

// Componentwise grading operator on the Lie coefficients.
ConnCoeffs apply_H(const ConnCoeffs& x);
ConnCoeffs apply_H_inverse(const ConnCoeffs& x);

// [a, b] with (z, u) exponents adding.
ConnCoeffs conn_bracket(const ConnCoeffs& a, const ConnCoeffs& b);

// lambda_1(z, u) = -z^{-1} sum_k u^k beta_k for positive-degree beta.
ConnCoeffs lambda1_from_beta(const GradedLieElem& beta);

// Fixed point of lambda_0 <- H^{-1}(d_z lambda_1 + [lambda_0, lambda_1]);
// each bracket raises the Lie degree, so the iteration stabilizes within the
// truncation. bracket_depth caps the iteration defensively.
ConnCoeffs solve_lambda0(const ConnCoeffs& lambda1, int bracket_depth = 0);

// d_z lambda_1 - H lambda_0 + [lambda_0, lambda_1]; flat iff it vanishes.
struct FlatnessReport {
    bool flat;
    ConnCoeffs residual;
};
FlatnessReport flatness_check(const ConnCoeffs& lambda0, const ConnCoeffs& lambda1);

// The full local connection form.
struct ConnectionForm {
    ConnCoeffs dz_part;  // lambda_0
    ConnCoeffs du_part;  // lambda_1 (the u^{-1} du coefficient)
};

// Witt derivation v_k = u^(k+1) d_u on polynomials in u.
using UPoly = std::map<int, Rational>;  // exponent -> coefficient

struct WittOperator {
    int k;
};
UPoly witt_apply(const WittOperator& v, const UPoly& f);

// Applies v_k v_l - v_l v_k to u^m for m <= max_monomial and compares with
// (l - k) v_{k+l}.
struct WittBracketReport {
    int k;
    int l;
    bool pass;
};
WittBracketReport witt_bracket_check(int k, int l, int max_monomial = 8);

}  // namespace ltlab
