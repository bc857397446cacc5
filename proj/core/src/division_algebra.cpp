#include "ltlab/division_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace ltlab {

ODElem::ODElem(ModulusPtr mod) : mod_(std::move(mod)) {
    c_.assign(static_cast<size_t>(mod_->n), UnramifiedElem(mod_));
}

ODElem ODElem::from_scalar(const UnramifiedElem& a) {
    ODElem r(a.modulus());
    r.c_[0] = a;
    return r;
}

ODElem ODElem::from_coeffs(ModulusPtr mod, std::vector<UnramifiedElem> coeffs) {
    if (coeffs.size() != static_cast<size_t>(mod->n))
        throw std::invalid_argument("ODElem: need exactly n coefficients");
    for (const auto& c : coeffs)
        if (c.modulus() != mod) throw std::invalid_argument("ODElem: modulus mismatch");
    ODElem r(std::move(mod));
    r.c_ = std::move(coeffs);
    return r;
}

ODElem ODElem::one(ModulusPtr mod) { return from_scalar(UnramifiedElem::from_int(mod, 1)); }

ODElem ODElem::frobenius_gen(ModulusPtr mod) {
    ODElem r(mod);
    if (mod->n == 1) {
        r.c_[0] = UnramifiedElem::from_int(mod, Int(mod->p));  // F = p when n = 1
    } else {
        r.c_[1] = UnramifiedElem::from_int(mod, 1);
    }
    return r;
}

ODElem ODElem::frobenius_gen_inv(ModulusPtr mod) {
    ODElem r(mod);
    Rational pinv = Rational(1) / Rational(mod->p);
    r.c_[static_cast<size_t>(mod->n - 1)] = UnramifiedElem::from_rational(mod, pinv);
    return r;
}

bool ODElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const UnramifiedElem& x) { return x.is_zero(); });
}

bool ODElem::in_od() const {
    return std::all_of(c_.begin(), c_.end(), [](const UnramifiedElem& x) { return x.is_integral(); });
}

std::optional<Rational> ODElem::valuation() const {
    std::optional<Rational> v;
    for (int i = 0; i < mod_->n; ++i) {
        const auto& a = c_[static_cast<size_t>(i)];
        if (a.is_zero()) continue;
        Rational cand = Rational(i, mod_->n) + Rational(a.val());
        if (!v || cand < *v) v = cand;
    }
    return v;
}

bool ODElem::is_unit() const {
    auto v = valuation();
    return v && *v == 0;
}

ODElem ODElem::operator-() const {
    ODElem r(mod_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

ODElem operator+(const ODElem& a, const ODElem& b) {
    if (a.mod_ != b.mod_) throw std::invalid_argument("ODElem: modulus mismatch");
    ODElem r(a.mod_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

ODElem operator-(const ODElem& a, const ODElem& b) { return a + (-b); }

ODElem operator*(const ODElem& a, const ODElem& b) {
    if (a.mod_ != b.mod_) throw std::invalid_argument("ODElem: modulus mismatch");
    const int n = a.mod_->n;
    ODElem r(a.mod_);
    for (int i = 0; i < n; ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
            UnramifiedElem bj = b.c_[static_cast<size_t>(j)];
            for (int s = 0; s < i; ++s) bj = frobenius(bj);
            UnramifiedElem term = a.c_[static_cast<size_t>(i)] * bj;
            int carry = (i + j) / n;
            if (carry > 0) term = term.mul_int(pow_int(Int(a.mod_->p), static_cast<unsigned long>(carry)));
            size_t slot = static_cast<size_t>((i + j) % n);
            r.c_[slot] = r.c_[slot] + term;
        }
    }
    return r;
}

bool operator==(const ODElem& a, const ODElem& b) {
    return a.mod_ == b.mod_ && a.c_ == b.c_;
}

ODElem ODElem::inverse() const {
    if (!is_unit() || !in_od())
        throw std::domain_error("ODElem::inverse: requires a unit of o_D (valuation 0)");
    // valuation 0 forces the 0-th coefficient to be a unit of W(F_q)
    ODElem y = from_scalar(c_[0].inv());
    ODElem two = from_scalar(UnramifiedElem::from_int(mod_, 2));
    int steps = 2;
    long target = static_cast<long>(mod_->n) * mod_->prec;
    for (long v = 1; v < target; v *= 2) ++steps;
    for (int i = 0; i < steps; ++i) y = y * (two - *this * y);
    return y;
}

ODElem ODElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);  // units only; F^{-m} via frobenius_gen_inv
    ODElem r = one(mod_);
    ODElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool ODElem::congruent(const ODElem& b, int k) const {
    if (mod_ != b.mod_) return false;
    long shift = 0;
    for (const auto& x : c_)
        if (!x.is_zero()) shift = std::min(shift, x.val());
    for (const auto& x : b.c_)
        if (!x.is_zero()) shift = std::min(shift, x.val());
    Int ps = pow_int(Int(mod_->p), static_cast<unsigned long>(-shift));
    for (size_t i = 0; i < c_.size(); ++i) {
        UnramifiedElem xa = shift < 0 ? c_[i].mul_int(ps) : c_[i];
        UnramifiedElem xb = shift < 0 ? b.c_[i].mul_int(ps) : b.c_[i];
        if (!xa.congruent(xb, k)) return false;
    }
    return true;
}

std::string ODElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < mod_->n; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[static_cast<size_t>(i)].str() << ")";
        if (i >= 1) os << "*F";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ODElem conj_by_F(const UnramifiedElem& a) {
    auto mod = a.modulus();
    ODElem F = ODElem::frobenius_gen(mod);
    ODElem Finv = ODElem::frobenius_gen_inv(mod);
    return F * ODElem::from_scalar(a) * Finv;
}

bool center_check(const ODElem& x) {
    auto mod = x.modulus();
    ODElem F = ODElem::frobenius_gen(mod);
    ODElem w = ODElem::from_scalar(UnramifiedElem::generator(mod));
    return x * F == F * x && x * w == w * x;
}

WeilElem weil_elem(UnramifiedElem a, long m) {
    if (a.is_zero() || a.val() != 0)
        throw std::invalid_argument("weil_elem: first component must be a unit of W(F_q)");
    return WeilElem{std::move(a), m};
}

WeilElem weil_mul(const WeilElem& x, const WeilElem& y) {
    const auto& mod = x.a.modulus();
    long reps = ((x.m % mod->n) + mod->n) % mod->n;
    UnramifiedElem b = y.a;
    for (long s = 0; s < reps; ++s) b = frobenius(b);
    return WeilElem{x.a * b, x.m + y.m};
}

WeilElem weil_inv(const WeilElem& x) {
    const auto& mod = x.a.modulus();
    long reps = (((-x.m) % mod->n) + mod->n) % mod->n;
    UnramifiedElem ainv = x.a.inv();
    for (long s = 0; s < reps; ++s) ainv = frobenius(ainv);
    return WeilElem{std::move(ainv), -x.m};
}

bool weil_eq(const WeilElem& x, const WeilElem& y) { return x.m == y.m && x.a == y.a; }

ODElem weil_embed(const WeilElem& x) {
    auto mod = x.a.modulus();
    ODElem r = ODElem::from_scalar(x.a);
    ODElem step = x.m >= 0 ? ODElem::frobenius_gen(mod) : ODElem::frobenius_gen_inv(mod);
    long reps = x.m >= 0 ? x.m : -x.m;
    for (long s = 0; s < reps; ++s) r = r * step;
    return r;
}

}  // namespace ltlab
