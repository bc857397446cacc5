#include "ltlab/lubin_tate.hpp"

#include <cmath>

namespace ltlab {

UniSeries<RationalRing> honda_log(long p, int n, int trunc) {
    if (trunc < 1) throw std::invalid_argument("honda_log: trunc must be >= 1");
    UniSeries<RationalRing> s(RationalRing{}, trunc);
    Int q = pow_int(Int(p), static_cast<unsigned long>(n));
    Int deg = 1;
    Int coeff_den = 1;
    while (deg <= trunc) {
        s.set_coeff(static_cast<int>(deg), Rational(1) / Rational(coeff_den));
        deg *= q;
        coeff_den *= p;
    }
    return s;
}

UniSeries<UnramifiedRing> honda_log_unramified(const ModulusPtr& mod, int trunc) {
    if (trunc < 1) throw std::invalid_argument("honda_log_unramified: trunc must be >= 1");
    UnramifiedRing R{mod};
    UniSeries<UnramifiedRing> s(R, trunc);
    Int deg = 1;
    long i = 0;
    while (deg <= trunc) {
        s.set_coeff(static_cast<int>(deg),
                    UnramifiedElem::from_rational(mod, Rational(1) / Rational(pow_int(Int(mod->p), static_cast<unsigned long>(i)))));
        deg *= mod->q;
        ++i;
    }
    return s;
}

bool is_p_integral(const UniSeries<RationalRing>& s, long p) {
    Int pp(p);
    for (int k = 0; k <= s.trunc(); ++k)
        if (val_p(s.coeff(k), pp) < 0) return false;
    return true;
}

bool is_p_integral(const BiSeries<RationalRing>& s, long p) {
    Int pp(p);
    for (int i = 0; i <= s.trunc(); ++i)
        for (int j = 0; i + j <= s.trunc(); ++j)
            if (val_p(s.coeff(i, j), pp) < 0) return false;
    return true;
}

HondaData honda_data(long p, int n, int trunc) {
    auto log = honda_log(p, n, trunc);
    auto fgl = group_law(log, trunc);
    if (!is_p_integral(fgl, p))
        throw std::logic_error("honda_data: group law failed the integrality check");
    return HondaData{p, n, pow_int(Int(p), static_cast<unsigned long>(n)), trunc, std::move(log), std::move(fgl)};
}

PTypicalReport verify_p_typical(long p, int n, int trunc) {
    Int q = pow_int(Int(p), static_cast<unsigned long>(n));
    if (trunc < q) throw std::invalid_argument("verify_p_typical: trunc must be >= q");
    auto log = honda_log(p, n, trunc);
    auto mp = mult_by(Rational(p), log);
    PTypicalReport rep;
    rep.p = p;
    rep.n = n;
    rep.q = q;
    rep.trunc = trunc;
    rep.integral = is_p_integral(mp, p);
    rep.residues.assign(static_cast<size_t>(trunc) + 1, Int(0));
    rep.pass = rep.integral;
    for (int k = 0; k <= trunc && rep.integral; ++k) {
        Rational c = mp.coeff(k);
        Int num = numerator(c);
        Int den = denominator(c);
        Int r = mod_reduce(num * mod_inverse(den, Int(p)), Int(p));
        rep.residues[static_cast<size_t>(k)] = r;
        Int want = (Int(k) == q) ? Int(1) : Int(0);
        if (r != want) rep.pass = false;
    }
    return rep;
}

int default_unramified_prec(long p, int trunc) {
    int extra = 1;
    long pw = p;
    while (pw < trunc) {
        pw *= p;
        ++extra;
    }
    return 12 + extra;
}

namespace {

// Image of an integral element in the residue ring F_q (precision-1 modulus).
UnramifiedElem reduce_mod_p(const UnramifiedElem& x, const ModulusPtr& mod1) {
    return UnramifiedElem::from_coeffs(mod1, x.residue(), 0);
}

}  // namespace

FrobeniusRelationReport endo_frobenius_relation(const UnramifiedElem& a, int trunc) {
    if (!a.is_integral())
        throw std::invalid_argument("endo_frobenius_relation: a must be integral");
    const ModulusPtr& mod = a.modulus();
    if (trunc < 1) throw std::invalid_argument("endo_frobenius_relation: trunc must be >= 1");
    auto log = honda_log_unramified(mod, trunc);
    auto ea = mult_by(a, log);
    auto es = mult_by(frobenius(a), log);

    FrobeniusRelationReport rep;
    rep.trunc = trunc;
    rep.integral = true;
    for (int k = 0; k <= trunc; ++k)
        if (!ea.coeff(k).is_integral() || !es.coeff(k).is_integral()) rep.integral = false;
    if (!rep.integral) {
        rep.pass = false;
        return rep;
    }

    auto mod1 = mod->reduced(1);
    UnramifiedRing Rbar{mod1};
    UniSeries<UnramifiedRing> ea_bar(Rbar, trunc), lhs(Rbar, trunc);
    for (int k = 0; k <= trunc; ++k) {
        ea_bar.set_coeff(k, reduce_mod_p(ea.coeff(k), mod1));
        if (static_cast<long>(k) * mod->p <= trunc)
            lhs.set_coeff(static_cast<int>(k * mod->p), reduce_mod_p(es.coeff(k), mod1));
    }
    // ([a](T))^p by repeated multiplication in F_q[T]/(T^(trunc+1))
    UniSeries<UnramifiedRing> rhs(Rbar, trunc);
    rhs.set_coeff(0, Rbar.one());
    for (long i = 0; i < mod->p; ++i) rhs = rhs * ea_bar;
    rep.pass = series_eq(lhs, rhs);
    return rep;
}

}  // namespace ltlab
