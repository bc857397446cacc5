#pragma once

// Numerical multizeta backend: zeta(n) by Euler-Maclaurin with rigorous tail
// bounds, Euler's gamma by two independent algorithms, multiple zeta values
// by the Hoelder splitting of their iterated-integral representation at 1/2
// (geometric convergence with an explicit tail bound), the specialization
// homomorphism on QSym, the even-zeta Bernoulli identity, and the Taylor
// coefficients of 1/Gamma.

#include "ltlab/approx.hpp"
#include "ltlab/qsym.hpp"
#include "ltlab/series.hpp"

namespace ltlab {

// Exact Bernoulli numbers B_0, B_1, ... (B_1 = -1/2), cached.
const Rational& bernoulli_number(int k);

// zeta(n) for integer n >= 2.
RealApprox zeta(int n, unsigned digits);

// Euler's constant by Euler-Maclaurin on harmonic sums.
RealApprox euler_gamma(unsigned digits);
// Independent evaluation (exponential-integral series at large argument).
RealApprox euler_gamma_alt(unsigned digits);

// zeta(s_1, ..., s_k) = sum_{n_1 > ... > n_k >= 1} prod n_i^(-s_i); requires
// s_1 >= 2.
bool mzv_admissible(const Composition& s);
RealApprox mzv(const Composition& s, unsigned digits);

// Defining nested sum truncated at n_1 <= cutoff, with an integral-comparison
// tail bound; slow convergence, used as an independent cross-check.
RealApprox mzv_direct(const Composition& s, unsigned digits, long cutoff);

// Linear extension of composition -> mzv; the empty composition gives 1 and
// M_(1) (the image of p_1) is regularized to Euler's gamma. Any other
// non-admissible composition is a domain error.
RealApprox eval_qsym(const QSymElem& x, unsigned digits);

// -1/2 B_{2n} (2 pi i)^{2n} / (2n)! versus zeta(2n).
struct ZetaEvenReport {
    int n;
    RealApprox bernoulli_side;
    RealApprox zeta_side;
    double residual;
    bool pass;  // |residual| within combined error bounds
};
ZetaEvenReport zeta_even_check(int n, unsigned digits);

// Taylor coefficients of 1/Gamma(z) = z exp(gamma z - sum_{k>=2} (-1)^k
// zeta(k) z^k / k) up to degree trunc.
UniSeries<ApproxRing> gamma_reciprocal_series(int trunc, unsigned digits);

// Rigorous bound on |1/Gamma(z) - (truncation to degree trunc)(z)| for
// 0 < z < 1/2, from the coefficient bound |c_k| <= e 2^(k-1).
double gamma_series_truncation_bound(int trunc, double z);

// Independent Gamma(x) oracle for rational x > 0: argument shift + Stirling
// series with a first-omitted-term remainder bound.
RealApprox gamma_real(const Rational& x, unsigned digits);

// Horner evaluation of an approximate series at a point.
RealApprox eval_series_at(const UniSeries<ApproxRing>& s, const RealApprox& z);

}  // namespace ltlab
