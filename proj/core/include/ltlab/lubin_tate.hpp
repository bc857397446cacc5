#pragma once

// Honda's formal group law F_q(X,Y) = log^{-1}(log X + log Y) built from the
// logarithm sum p^(-i) T^(q^i), its [a](T) endomorphisms, integrality and
// reduction-mod-p checks, and the Frobenius relation on endomorphisms.

#include "ltlab/series.hpp"

namespace ltlab {

// sum_{q^i <= trunc} p^(-i) T^(q^i) over exact rationals.
UniSeries<RationalRing> honda_log(long p, int n, int trunc);

// Same series with coefficients in W(F_q)[1/p].
UniSeries<UnramifiedRing> honda_log_unramified(const ModulusPtr& mod, int trunc);

// F(X,Y) = log^{-1}(log X + log Y) to total degree trunc; log must have unit
// linear coefficient and truncation >= trunc.
template <class R>
BiSeries<R> group_law(const UniSeries<R>& log, int trunc) {
    if (log.trunc() < trunc)
        throw std::invalid_argument("group_law: log truncated below the requested degree");
    auto lg = log.truncated(trunc);
    auto exp = revert(lg);
    auto L = lift_to_x(lg, trunc) + lift_to_y(lg, trunc);
    return eval_uni_at(exp, L);
}

// [a](T) = log^{-1}(a log(T)).
template <class R>
UniSeries<R> mult_by(const typename R::Elem& a, const UniSeries<R>& log) {
    return compose(revert(log), log.scale(a));
}

// Formal-group-law axioms at the truncation.
template <class R>
bool fgl_unit_ok(const BiSeries<R>& F) {
    auto id = UniSeries<R>::identity(F.ring(), F.trunc());
    return series_eq(F.slice_y0(), id) && series_eq(F.slice_x0(), id);
}

template <class R>
bool fgl_commutative(const BiSeries<R>& F) {
    return series_eq(F, F.swapped());
}

template <class R>
bool fgl_associative(const BiSeries<R>& F) {
    const int d = F.trunc();
    auto X = TriSeries<R>::var(F.ring(), d, 0);
    auto Y = TriSeries<R>::var(F.ring(), d, 1);
    auto Z = TriSeries<R>::var(F.ring(), d, 2);
    auto XY = eval_bi_at(F, X, Y);
    auto YZ = eval_bi_at(F, Y, Z);
    return series_eq(eval_bi_at(F, XY, Z), eval_bi_at(F, X, YZ));
}

// log(F(X,Y)) = log X + log Y as a bivariate identity.
template <class R>
bool fgl_log_additive(const UniSeries<R>& log, const BiSeries<R>& F) {
    const int d = F.trunc();
    auto lhs = eval_uni_at(log.truncated(d), F);
    auto rhs = lift_to_x(log, d) + lift_to_y(log, d);
    return series_eq(lhs, rhs);
}

// p-integrality of exact-rational series.
bool is_p_integral(const UniSeries<RationalRing>& s, long p);
bool is_p_integral(const BiSeries<RationalRing>& s, long p);

// Honda data at (p, n): the logarithm and its group law over exact rationals,
// with the integrality of F verified during construction.
struct HondaData {
    long p;
    int n;
    Int q;
    int trunc;
    UniSeries<RationalRing> log;
    BiSeries<RationalRing> fgl;
};
HondaData honda_data(long p, int n, int trunc);

// [p](T) mod p versus T^q: residues[k] = coefficient of T^k reduced mod p.
struct PTypicalReport {
    long p;
    int n;
    Int q;
    int trunc;
    bool integral;
    bool pass;
    std::vector<Int> residues;
};
PTypicalReport verify_p_typical(long p, int n, int trunc);

// Over F_q coefficients: [sigma(a)](T^p) = ([a](T))^p as truncated series.
struct FrobeniusRelationReport {
    bool integral;  // both endomorphism series landed in W(F_q)
    bool pass;
    int trunc;
};
FrobeniusRelationReport endo_frobenius_relation(const UnramifiedElem& a, int trunc);

// Working precision large enough to certify integrality at degree trunc.
int default_unramified_prec(long p, int trunc);

}  // namespace ltlab
