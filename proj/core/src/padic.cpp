#include "ltlab/padic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ltlab {

// ---------------------------------------------------------------- PadicFloat

PadicFloat::PadicFloat(long p, int prec) : p_(p), prec_(prec), val_(kValInf), unit_(0) {
    if (!is_prime(Int(p))) throw std::invalid_argument("PadicFloat: p must be prime");
    if (prec < 1) throw std::invalid_argument("PadicFloat: prec must be >= 1");
}

PadicFloat PadicFloat::from_integer(long p, int prec, const Int& x) {
    PadicFloat r(p, prec);
    if (x == 0) return r;
    Int pp(p);
    r.val_ = val_p(x, pp);
    r.unit_ = mod_reduce(x / pow_int(pp, static_cast<unsigned long>(r.val_)),
                         pow_int(pp, static_cast<unsigned long>(prec)));
    if (r.unit_ == 0) {  // x vanishes to the working precision
        r.val_ = kValInf;
        r.prec_ = prec;
    }
    return r;
}

PadicFloat PadicFloat::from_rational(long p, int prec, const Rational& x) {
    if (x == 0) return PadicFloat(p, prec);
    Int pp(p);
    long vn = val_p(numerator(x), pp);
    long vd = val_p(denominator(x), pp);
    Int pN = pow_int(pp, static_cast<unsigned long>(prec));
    Int nu = numerator(x) / pow_int(pp, static_cast<unsigned long>(vn));
    Int de = denominator(x) / pow_int(pp, static_cast<unsigned long>(vd));
    PadicFloat r(p, prec);
    r.val_ = vn - vd;
    r.unit_ = mod_reduce(nu * mod_inverse(de, pN), pN);
    return r;
}

void PadicFloat::normalize() {
    if (val_ == kValInf) return;
    Int pp(p_);
    Int pN = pow_int(pp, static_cast<unsigned long>(prec_));
    unit_ = mod_reduce(unit_, pN);
    long e = val_p(unit_, pp);
    if (e == kValInf || e >= prec_) {  // indistinguishable from zero
        long a = val_ + prec_;
        val_ = kValInf;
        prec_ = static_cast<int>(a);
        unit_ = 0;
        return;
    }
    if (e > 0) {
        unit_ /= pow_int(pp, static_cast<unsigned long>(e));
        val_ += e;
        prec_ -= static_cast<int>(e);
    }
}

PadicFloat PadicFloat::operator-() const {
    PadicFloat r = *this;
    if (!r.is_zero()) {
        Int pN = pow_int(Int(p_), static_cast<unsigned long>(prec_));
        r.unit_ = mod_reduce(-r.unit_, pN);
    }
    return r;
}

PadicFloat operator+(const PadicFloat& a, const PadicFloat& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PadicFloat: mixed primes");
    if (a.is_zero() && b.is_zero()) {
        PadicFloat r(a.p_, 1);
        r.prec_ = static_cast<int>(std::min(a.prec_, b.prec_));
        return r;
    }
    // a known mod p^(va + Na), b mod p^(vb + Nb); the sum is good to the min.
    long abs_prec = std::min(a.abs_prec(), b.abs_prec());
    if (a.is_zero() || b.is_zero()) {
        const PadicFloat& x = a.is_zero() ? b : a;
        PadicFloat r = x;
        if (x.val_ >= abs_prec) {
            r.val_ = kValInf;
            r.prec_ = static_cast<int>(abs_prec);
            r.unit_ = 0;
            return r;
        }
        r.prec_ = static_cast<int>(abs_prec - x.val_);
        r.normalize();
        return r;
    }
    long v = std::min(a.val_, b.val_);
    int rel = static_cast<int>(abs_prec - v);
    if (rel <= 0) {
        PadicFloat r(a.p_, 1);
        r.prec_ = static_cast<int>(abs_prec);
        return r;
    }
    Int pp(a.p_);
    Int s = a.unit_ * pow_int(pp, static_cast<unsigned long>(a.val_ - v)) +
            b.unit_ * pow_int(pp, static_cast<unsigned long>(b.val_ - v));
    PadicFloat r(a.p_, rel);
    r.val_ = v;
    r.unit_ = s;
    r.normalize();
    return r;
}

PadicFloat operator-(const PadicFloat& a, const PadicFloat& b) { return a + (-b); }

PadicFloat operator*(const PadicFloat& a, const PadicFloat& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PadicFloat: mixed primes");
    if (a.is_zero() || b.is_zero()) {
        // v(xy) >= v(x) + min valuation bound of the zero side.
        PadicFloat r(a.p_, 1);
        long bound = (a.is_zero() ? a.prec_ : a.val_) + (b.is_zero() ? b.prec_ : b.val_);
        r.prec_ = static_cast<int>(std::min<long>(bound, kValInf / 4));
        return r;
    }
    int rel = std::min(a.prec_, b.prec_);
    PadicFloat r(a.p_, rel);
    r.val_ = a.val_ + b.val_;
    r.unit_ = mod_reduce(a.unit_ * b.unit_, pow_int(Int(a.p_), static_cast<unsigned long>(rel)));
    return r;
}

PadicFloat PadicFloat::inv() const {
    if (is_zero()) throw std::domain_error("PadicFloat: division by zero");
    PadicFloat r(p_, prec_);
    r.val_ = -val_;
    r.unit_ = mod_inverse(unit_, pow_int(Int(p_), static_cast<unsigned long>(prec_)));
    return r;
}

bool PadicFloat::congruent(const PadicFloat& b, long abs_prec) const {
    Int pp(p_);
    Int pa = pow_int(pp, static_cast<unsigned long>(std::max<long>(abs_prec, 0)));
    auto rep = [&](const PadicFloat& x) -> Int {
        if (x.is_zero()) return 0;
        if (x.val_ < 0) throw std::domain_error("congruent: negative valuation");
        return mod_reduce(x.unit_ * pow_int(pp, static_cast<unsigned long>(x.val_)), pa);
    };
    if (std::min(this->abs_prec(), b.abs_prec()) < abs_prec)
        throw std::domain_error("congruent: operands not known to the requested precision");
    return rep(*this) == rep(b);
}

Rational PadicFloat::to_rational() const {
    if (is_zero()) return Rational(0);
    Rational r(unit_);
    Int pv = pow_int(Int(p_), static_cast<unsigned long>(val_ < 0 ? -val_ : val_));
    return val_ >= 0 ? r * pv : r / pv;
}

std::string PadicFloat::str() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "O(" << p_ << "^" << prec_ << ")";
    } else {
        os << unit_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << abs_prec() << ")";
    }
    return os.str();
}

// -------------------------------------------------- raw polynomial helpers

namespace {

// Dense polynomials with Int coefficients; index = degree.
using Poly = std::vector<Int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod_m(Poly a, const Poly& m, const Int& pN) {
    // m monic of degree n; reduce a modulo (m, pN).
    const size_t n = m.size() - 1;
    for (auto& c : a) c = mod_reduce(c, pN);
    while (true) {
        a = trim(a);
        if (a.size() <= n) break;
        size_t d = a.size() - 1;
        Int lead = a.back();
        a.pop_back();
        for (size_t j = 0; j < n; ++j)
            a[d - n + j] = mod_reduce(a[d - n + j] - lead * m[j], pN);
    }
    a.resize(n, Int(0));
    return a;
}

Poly polymul_mod(const Poly& a, const Poly& b, const Poly& m, const Int& pN) {
    const size_t n = m.size() - 1;
    Poly c(2 * n, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] = mod_reduce(c[i + j] + a[i] * b[j], pN);
        }
    }
    return poly_mod_m(std::move(c), m, pN);
}

Poly polypow_mod(Poly a, Int e, const Poly& m, const Int& pN) {
    const size_t n = m.size() - 1;
    Poly r(n, Int(0));
    r[0] = 1;
    a = poly_mod_m(std::move(a), m, pN);
    while (e > 0) {
        if ((e & 1) != 0) r = polymul_mod(r, a, m, pN);
        a = polymul_mod(a, a, m, pN);
        e >>= 1;
    }
    return r;
}

Poly fp_gcd(Poly a, Poly b, const Int& p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // a mod b over F_p
        Int lead_inv = mod_inverse(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            Int f = mod_reduce(a.back() * lead_inv, p);
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = mod_reduce(a[shift + j] - f * b[j], p);
            a = trim(std::move(a));
        }
        std::swap(a, b);
    }
    return a;
}

bool fp_irreducible(const Poly& mbar, long pl, int n) {
    // m irreducible over F_p iff x^(p^n) = x mod m and for each prime l | n,
    // gcd(x^(p^(n/l)) - x, m) = 1.
    Int p(pl);
    Poly x{Int(0), Int(1)};
    auto x_pow_p_iter = [&](int times) {
        Poly y = x;
        for (int i = 0; i < times; ++i) y = polypow_mod(y, p, mbar, p);
        return y;
    };
    Poly xpn = x_pow_p_iter(n);
    Poly diff = xpn;
    diff.resize(std::max<size_t>(diff.size(), 2), Int(0));
    diff[1] = mod_reduce(diff[1] - 1, p);
    if (!trim(diff).empty()) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) lprime = false;
        if (!lprime) continue;
        Poly xq = x_pow_p_iter(n / l);
        Poly g = xq;
        g.resize(std::max<size_t>(g.size(), 2), Int(0));
        g[1] = mod_reduce(g[1] - 1, p);
        Poly gc = fp_gcd(g, mbar, p);
        if (!(gc.size() == 1)) return false;
    }
    return true;
}

Poly least_irreducible(long p, int n) {
    if (n == 1) return Poly{mod_reduce(Int(-1), Int(p)), Int(1)};  // x - 1
    // Lexicographically least (c_0, ..., c_{n-1}) giving an irreducible
    // monic polynomial; every degree-n irreducible divides x^(q-1) - 1.
    std::vector<long> c(n, 0);
    while (true) {
        Poly cand(n + 1, Int(0));
        for (int i = 0; i < n; ++i) cand[i] = c[i];
        cand[n] = 1;
        if (fp_irreducible(cand, p, n)) return cand;
        int i = n - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw std::logic_error("least_irreducible: exhausted candidates");
        ++c[i];
    }
}

}  // namespace

// --------------------------------------------------------- UnramifiedModulus

std::vector<Int> UnramifiedModulus::poly_add(const std::vector<Int>& a,
                                             const std::vector<Int>& b) const {
    std::vector<Int> r(n);
    for (int i = 0; i < n; ++i) r[i] = mod_reduce(a[i] + b[i], p_pow_prec);
    return r;
}

std::vector<Int> UnramifiedModulus::poly_sub(const std::vector<Int>& a,
                                             const std::vector<Int>& b) const {
    std::vector<Int> r(n);
    for (int i = 0; i < n; ++i) r[i] = mod_reduce(a[i] - b[i], p_pow_prec);
    return r;
}

std::vector<Int> UnramifiedModulus::poly_mul(const std::vector<Int>& a,
                                             const std::vector<Int>& b) const {
    return polymul_mod(a, b, m, p_pow_prec);
}

std::vector<Int> UnramifiedModulus::poly_pow(std::vector<Int> a, Int e) const {
    return polypow_mod(std::move(a), std::move(e), m, p_pow_prec);
}

std::vector<Int> UnramifiedModulus::poly_one() const {
    std::vector<Int> r(n, Int(0));
    r[0] = 1;
    return r;
}

bool UnramifiedModulus::poly_is_zero(const std::vector<Int>& a) const {
    return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
}

ModulusPtr UnramifiedModulus::reduced(int k) const {
    if (k < 1 || k > prec) throw std::invalid_argument("reduced: bad precision");
    if (k == prec) return shared_from_this();
    auto r = std::shared_ptr<UnramifiedModulus>(new UnramifiedModulus());
    r->p = p;
    r->n = n;
    r->prec = k;
    r->p_pow_prec = pow_int(Int(p), static_cast<unsigned long>(k));
    r->q = q;
    r->m.resize(n + 1);
    for (int i = 0; i <= n; ++i) r->m[i] = mod_reduce(m[i], r->p_pow_prec);
    r->frob_x.resize(n);
    for (int i = 0; i < n; ++i) r->frob_x[i] = mod_reduce(frob_x[i], r->p_pow_prec);
    return r;
}

ModulusPtr hensel_lift_modulus(long p, int n, int prec) {
    if (!is_prime(Int(p))) throw std::invalid_argument("hensel_lift_modulus: p must be prime");
    if (n < 1) throw std::invalid_argument("hensel_lift_modulus: n must be >= 1");
    if (prec < 1) throw std::invalid_argument("hensel_lift_modulus: prec must be >= 1");

    Int pp(p);
    Int pN = pow_int(pp, static_cast<unsigned long>(prec));
    Int q = pow_int(pp, static_cast<unsigned long>(n));

    Poly mbar = least_irreducible(p, n);
    // Naive lift of mbar; the ring it defines is already unramified, so the
    // Teichmueller generator can be located by iterating y -> y^q.
    Poly mlift = mbar;
    Poly omega{Int(0), Int(1)};
    if (n == 1) omega = Poly{mod_reduce(mlift[0] * Int(-1), pN)};  // the root of x - c
    for (int it = 0; it <= prec + 2; ++it) {
        Poly next = polypow_mod(omega, q, mlift, pN);
        if (next == omega) break;
        omega = std::move(next);
        if (it == prec + 2) throw std::logic_error("hensel_lift_modulus: Teichmueller iteration failed");
    }
    // Canonical modulus: product of (X - omega^(p^i)); its coefficients are
    // Frobenius-symmetric, hence scalars mod p^N.
    std::vector<Poly> factors;
    Poly w = omega;
    for (int i = 0; i < n; ++i) {
        factors.push_back(w);
        w = polypow_mod(w, pp, mlift, pN);
    }
    if (w != omega) throw std::logic_error("hensel_lift_modulus: Frobenius orbit not closed");
    // Expand prod (X - w_i) with coefficients in the lifted ring.
    std::vector<Poly> coeff(n + 1, Poly(static_cast<size_t>(n), Int(0)));
    coeff[0] = Poly(static_cast<size_t>(n), Int(0));
    coeff[0][0] = 1;
    int deg = 0;
    for (const Poly& root : factors) {
        // multiply (sum coeff_j X^j) by (X - root)
        std::vector<Poly> next(static_cast<size_t>(deg) + 2, Poly(static_cast<size_t>(n), Int(0)));
        for (int j = 0; j <= deg; ++j) {
            // X * coeff_j
            for (int t = 0; t < n; ++t)
                next[j + 1][t] = mod_reduce(next[j + 1][t] + coeff[j][t], pN);
            Poly prod = polymul_mod(coeff[j], root, mlift, pN);
            for (int t = 0; t < n; ++t)
                next[j][t] = mod_reduce(next[j][t] - prod[t], pN);
        }
        coeff = std::move(next);
        ++deg;
    }
    Poly mfinal(n + 1, Int(0));
    for (int j = 0; j <= n; ++j) {
        for (int t = 1; t < n; ++t)
            if (coeff[j][t] != 0)
                throw std::logic_error("hensel_lift_modulus: non-scalar coefficient");
        mfinal[j] = coeff[j].empty() ? Int(0) : coeff[j][0];
    }
    if (mfinal[n] != 1) throw std::logic_error("hensel_lift_modulus: not monic");
    for (int j = 0; j <= n; ++j)
        if (mod_reduce(mfinal[j] - mbar[j], pp) != 0)
            throw std::logic_error("hensel_lift_modulus: lift does not reduce to mbar");

    auto mod = std::shared_ptr<UnramifiedModulus>(new UnramifiedModulus());
    mod->p = p;
    mod->n = n;
    mod->prec = prec;
    mod->p_pow_prec = pN;
    mod->q = q;
    mod->m = mfinal;
    // x is a Teichmueller element: x^(q-1) = 1 exactly mod (m, p^N).
    Poly x(static_cast<size_t>(n), Int(0));
    if (n == 1) {
        x[0] = mod_reduce(-mfinal[0], pN);
    } else {
        x[1] = 1;
    }
    Poly xq1 = polypow_mod(x, q - 1, mod->m, pN);
    Poly one(static_cast<size_t>(n), Int(0));
    one[0] = 1;
    if (xq1 != one) throw std::logic_error("hensel_lift_modulus: generator is not a (q-1)st root of unity");
    // sigma: x -> x^p must be a root of m, so the quotient map is a ring hom.
    mod->frob_x = polypow_mod(x, pp, mod->m, pN);
    {
        Poly acc(static_cast<size_t>(n), Int(0));  // m(frob_x)
        Poly xp = mod->frob_x;
        Poly pw = one;
        for (int j = 0; j <= n; ++j) {
            Poly term = pw;
            for (auto& c : term) c = mod_reduce(c * mfinal[j], pN);
            for (int t = 0; t < n; ++t) acc[t] = mod_reduce(acc[t] + term[t], pN);
            if (j < n) pw = polymul_mod(pw, xp, mod->m, pN);
        }
        if (!mod->poly_is_zero(acc))
            throw std::logic_error("hensel_lift_modulus: x^p is not a root of m");
    }
    return mod;
}

// ------------------------------------------------------------ UnramifiedElem

UnramifiedElem::UnramifiedElem(ModulusPtr mod) : mod_(std::move(mod)), val_(kValInf) {
    unit_.assign(static_cast<size_t>(mod_->n), Int(0));
}

UnramifiedElem UnramifiedElem::from_int(ModulusPtr mod, const Int& x) {
    std::vector<Int> c(static_cast<size_t>(mod->n), Int(0));
    c[0] = x;
    return from_coeffs(std::move(mod), std::move(c), 0);
}

UnramifiedElem UnramifiedElem::from_rational(ModulusPtr mod, const Rational& x) {
    if (x == 0) return UnramifiedElem(std::move(mod));
    Int pp(mod->p);
    long vn = val_p(numerator(x), pp);
    long vd = val_p(denominator(x), pp);
    Int nu = numerator(x) / pow_int(pp, static_cast<unsigned long>(vn));
    Int de = denominator(x) / pow_int(pp, static_cast<unsigned long>(vd));
    Int u = mod_reduce(nu * mod_inverse(de, mod->p_pow_prec), mod->p_pow_prec);
    std::vector<Int> c(static_cast<size_t>(mod->n), Int(0));
    c[0] = u;
    return from_coeffs(std::move(mod), std::move(c), vn - vd);
}

UnramifiedElem UnramifiedElem::from_coeffs(ModulusPtr mod, std::vector<Int> c, long val) {
    UnramifiedElem r(mod);
    c.resize(static_cast<size_t>(mod->n), Int(0));
    r.unit_ = std::move(c);
    r.val_ = val;
    r.normalize();
    return r;
}

UnramifiedElem UnramifiedElem::generator(ModulusPtr mod) {
    std::vector<Int> c(static_cast<size_t>(mod->n), Int(0));
    if (mod->n == 1) {
        c[0] = mod_reduce(-mod->m[0], mod->p_pow_prec);
    } else {
        c[1] = 1;
    }
    return from_coeffs(std::move(mod), std::move(c), 0);
}

void UnramifiedElem::normalize() {
    const auto& M = *mod_;
    for (auto& c : unit_) c = mod_reduce(c, M.p_pow_prec);
    if (val_ == kValInf) {
        unit_.assign(static_cast<size_t>(M.n), Int(0));
        return;
    }
    Int pp(M.p);
    long e = kValInf;
    for (const auto& c : unit_) e = std::min(e, val_p(c, pp));
    if (e >= M.prec || e == kValInf) {
        val_ = kValInf;
        unit_.assign(static_cast<size_t>(M.n), Int(0));
        return;
    }
    if (e > 0) {
        Int pe = pow_int(pp, static_cast<unsigned long>(e));
        for (auto& c : unit_) c /= pe;
        val_ += e;
    }
}

bool UnramifiedElem::is_scalar() const {
    if (is_zero()) return true;
    for (size_t i = 1; i < unit_.size(); ++i)
        if (unit_[i] != 0) return false;
    return true;
}

UnramifiedElem UnramifiedElem::operator-() const {
    if (is_zero()) return *this;
    UnramifiedElem r = *this;
    for (auto& c : r.unit_) c = mod_reduce(-c, mod_->p_pow_prec);
    return r;
}

UnramifiedElem operator+(const UnramifiedElem& a, const UnramifiedElem& b) {
    if (a.mod_ != b.mod_) throw std::invalid_argument("UnramifiedElem: modulus mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& M = *a.mod_;
    long v = std::min(a.val_, b.val_);
    Int pp(M.p);
    UnramifiedElem r(a.mod_);
    r.val_ = v;
    r.unit_.assign(static_cast<size_t>(M.n), Int(0));
    Int sa = pow_int(pp, static_cast<unsigned long>(std::min<long>(a.val_ - v, M.prec)));
    Int sb = pow_int(pp, static_cast<unsigned long>(std::min<long>(b.val_ - v, M.prec)));
    for (int i = 0; i < M.n; ++i)
        r.unit_[static_cast<size_t>(i)] =
            mod_reduce(a.unit_[static_cast<size_t>(i)] * sa + b.unit_[static_cast<size_t>(i)] * sb,
                       M.p_pow_prec);
    r.normalize();
    return r;
}

UnramifiedElem operator-(const UnramifiedElem& a, const UnramifiedElem& b) { return a + (-b); }

UnramifiedElem operator*(const UnramifiedElem& a, const UnramifiedElem& b) {
    if (a.mod_ != b.mod_) throw std::invalid_argument("UnramifiedElem: modulus mismatch");
    if (a.is_zero() || b.is_zero()) return UnramifiedElem(a.mod_);
    UnramifiedElem r(a.mod_);
    r.val_ = a.val_ + b.val_;
    r.unit_ = a.mod_->poly_mul(a.unit_, b.unit_);
    // unit * unit stays a unit mod p, no renormalization needed
    return r;
}

UnramifiedElem UnramifiedElem::inv() const {
    if (is_zero()) throw std::domain_error("UnramifiedElem: division by zero");
    const auto& M = *mod_;
    // |(W/p^N)^x| = q^(N-1) (q - 1); invert by powering.
    Int order = pow_int(M.q, static_cast<unsigned long>(M.prec - 1)) * (M.q - 1);
    UnramifiedElem r(mod_);
    r.val_ = -val_;
    r.unit_ = M.poly_pow(unit_, order - 1);
    return r;
}

UnramifiedElem UnramifiedElem::pow(Int e) const {
    if (e < 0) return inv().pow(-e);
    if (is_zero()) {
        if (e == 0) return from_int(mod_, 1);
        return *this;
    }
    UnramifiedElem r(mod_);
    long ve = val_ * static_cast<long>(e);
    r.val_ = ve;
    r.unit_ = mod_->poly_pow(unit_, e);
    return r;
}

UnramifiedElem UnramifiedElem::mul_int(const Int& k) const {
    return *this * from_int(mod_, k);
}

UnramifiedElem UnramifiedElem::div_int(const Int& k) const {
    if (k == 0) throw std::domain_error("UnramifiedElem: division by zero");
    if (is_zero()) return *this;
    Int pp(mod_->p);
    long vk = val_p(k, pp);
    Int ku = k / pow_int(pp, static_cast<unsigned long>(vk));
    UnramifiedElem r = *this;
    r.val_ -= vk;
    Int kinv = mod_inverse(ku, mod_->p_pow_prec);
    for (auto& c : r.unit_) c = mod_reduce(c * kinv, mod_->p_pow_prec);
    return r;
}

bool operator==(const UnramifiedElem& a, const UnramifiedElem& b) {
    return a.mod_ == b.mod_ && a.val_ == b.val_ && a.unit_ == b.unit_;
}

bool UnramifiedElem::eq_rel(const UnramifiedElem& b, int digits) const {
    if (is_zero() || b.is_zero()) return is_zero() && b.is_zero();
    if (val_ != b.val_) return false;
    Int pk = pow_int(Int(mod_->p), static_cast<unsigned long>(std::min(digits, mod_->prec)));
    for (int i = 0; i < mod_->n; ++i)
        if (mod_reduce(unit_[static_cast<size_t>(i)] - b.unit_[static_cast<size_t>(i)], pk) != 0)
            return false;
    return true;
}

bool UnramifiedElem::congruent(const UnramifiedElem& b, int k) const {
    if (!is_integral() || !b.is_integral())
        throw std::domain_error("congruent: requires integral elements");
    Int pk = pow_int(Int(mod_->p), static_cast<unsigned long>(k));
    auto rep = [&](const UnramifiedElem& x, int i) -> Int {
        if (x.is_zero() || x.val_ >= k) return 0;
        return mod_reduce(x.unit_[static_cast<size_t>(i)] *
                              pow_int(Int(mod_->p), static_cast<unsigned long>(x.val_)),
                          pk);
    };
    for (int i = 0; i < mod_->n; ++i)
        if (rep(*this, i) != rep(b, i)) return false;
    return true;
}

UnramifiedElem UnramifiedElem::to_precision(ModulusPtr reduced_mod) const {
    if (is_zero()) return UnramifiedElem(std::move(reduced_mod));
    return from_coeffs(std::move(reduced_mod), unit_, val_);
}

std::vector<Int> UnramifiedElem::residue() const {
    std::vector<Int> r(static_cast<size_t>(mod_->n), Int(0));
    if (is_zero() || val_ > 0) return r;
    if (val_ < 0) throw std::domain_error("residue: negative valuation");
    Int pp(mod_->p);
    for (int i = 0; i < mod_->n; ++i) r[static_cast<size_t>(i)] = mod_reduce(unit_[static_cast<size_t>(i)], pp);
    return r;
}

std::string UnramifiedElem::str() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "0";
        return os.str();
    }
    os << mod_->p << "^" << val_ << "*(";
    bool first = true;
    for (int i = 0; i < mod_->n; ++i) {
        if (unit_[static_cast<size_t>(i)] == 0) continue;
        if (!first) os << " + ";
        os << unit_[static_cast<size_t>(i)];
        if (i >= 1) os << "*w";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- operations

UnramifiedElem frobenius(const UnramifiedElem& a) {
    if (a.is_zero()) return a;
    const auto& M = *a.modulus();
    // Evaluate the unit polynomial at x^p (Horner).
    std::vector<Int> acc(static_cast<size_t>(M.n), Int(0));
    for (int i = M.n - 1; i >= 0; --i) {
        acc = M.poly_mul(acc, M.frob_x);
        acc[0] = mod_reduce(acc[0] + a.unit()[static_cast<size_t>(i)], M.p_pow_prec);
    }
    return UnramifiedElem::from_coeffs(a.modulus(), std::move(acc), a.val());
}

UnramifiedElem teichmueller(const UnramifiedElem& c) {
    if (c.is_zero() || c.val() != 0)
        throw std::domain_error("teichmueller: requires a nonzero residue (val = 0)");
    const auto& M = *c.modulus();
    UnramifiedElem y = c;
    for (int it = 0; it <= M.prec + 2; ++it) {
        UnramifiedElem next = y.pow(M.q);
        if (next == y) return y;
        y = next;
    }
    throw std::logic_error("teichmueller: iteration failed to converge");
}

UnramifiedElem padic_log(const UnramifiedElem& u) {
    const auto& M = *u.modulus();
    long need = M.p == 2 ? 2 : 1;
    UnramifiedElem x = u - UnramifiedElem::from_int(u.modulus(), 1);
    if (u.is_zero() || u.val() != 0 || (!x.is_zero() && x.val() < need))
        throw std::domain_error("padic_log: argument must be a strict unit");
    if (x.is_zero()) return x;
    UnramifiedElem sum(u.modulus());
    UnramifiedElem xk = UnramifiedElem::from_int(u.modulus(), 1);
    int kmax = 3 * M.prec + 16;
    for (int k = 1; k <= kmax; ++k) {
        xk = xk * x;
        if (xk.is_zero() || xk.val() > M.prec + static_cast<long>(std::log2(double(kmax))) + 2) break;
        UnramifiedElem term = xk.div_int(Int(k));
        if (k % 2 == 0) term = -term;
        sum = sum + term;
    }
    return sum;
}

UnramifiedElem padic_exp(const UnramifiedElem& a) {
    const auto& M = *a.modulus();
    long need = M.p == 2 ? 2 : 1;
    if (!a.is_zero() && a.val() < need)
        throw std::domain_error("padic_exp: argument valuation too small for convergence");
    UnramifiedElem sum = UnramifiedElem::from_int(a.modulus(), 1);
    if (a.is_zero()) return sum;
    UnramifiedElem term = sum;
    int kmax = 4 * M.prec + 24;
    for (int k = 1; k <= kmax; ++k) {
        term = (term * a).div_int(Int(k));
        if (term.is_zero() || term.val() > M.prec + 2) break;
        sum = sum + term;
    }
    return sum;
}

}  // namespace ltlab
