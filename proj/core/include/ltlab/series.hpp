#pragma once

// Truncated formal power series over a generic coefficient ring, in one, two
// and three variables (dense storage; desk-scale truncations). Binary
// operations between series of different truncation work at the minimum of
// the two truncations.

#include "ltlab/rings.hpp"

#include <string>
#include <vector>

namespace ltlab {

template <class R>
class UniSeries {
public:
    using Elem = typename R::Elem;

    UniSeries(R ring, int trunc)
        : ring_(std::move(ring)), trunc_(trunc),
          c_(static_cast<size_t>(trunc) + 1, ring_.zero()) {
        if (trunc < 0) throw std::invalid_argument("UniSeries: negative truncation");
    }
    static UniSeries identity(R ring, int trunc) {  // t
        UniSeries s(ring, trunc);
        if (trunc >= 1) s.c_[1] = s.ring_.one();
        return s;
    }
    static UniSeries constant(R ring, int trunc, Elem v) {
        UniSeries s(std::move(ring), trunc);
        s.c_[0] = std::move(v);
        return s;
    }

    const R& ring() const { return ring_; }
    int trunc() const { return trunc_; }
    const Elem& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    void set_coeff(int k, Elem v) {
        if (k < 0 || k > trunc_) throw std::out_of_range("UniSeries::set_coeff");
        c_[static_cast<size_t>(k)] = std::move(v);
    }

    UniSeries truncated(int d) const {
        UniSeries s(ring_, d);
        for (int k = 0; k <= std::min(d, trunc_); ++k) s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
        return s;
    }
    UniSeries zero_like() const { return UniSeries(ring_, trunc_); }
    UniSeries one_like() const { return constant(ring_, trunc_, ring_.one()); }

    UniSeries scale(const Elem& f) const {
        UniSeries s(ring_, trunc_);
        for (int k = 0; k <= trunc_; ++k) s.c_[static_cast<size_t>(k)] = ring_.mul(c_[static_cast<size_t>(k)], f);
        return s;
    }

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        UniSeries s(a.ring_, d);
        for (int k = 0; k <= d; ++k)
            s.c_[static_cast<size_t>(k)] = a.ring_.add(a.c_[static_cast<size_t>(k)], b.c_[static_cast<size_t>(k)]);
        return s;
    }
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        UniSeries s(a.ring_, d);
        for (int k = 0; k <= d; ++k)
            s.c_[static_cast<size_t>(k)] = a.ring_.sub(a.c_[static_cast<size_t>(k)], b.c_[static_cast<size_t>(k)]);
        return s;
    }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        UniSeries s(a.ring_, d);
        for (int i = 0; i <= d; ++i) {
            if (a.ring_.is_zero(a.c_[static_cast<size_t>(i)])) continue;
            for (int j = 0; i + j <= d; ++j) {
                if (a.ring_.is_zero(b.c_[static_cast<size_t>(j)])) continue;
                s.c_[static_cast<size_t>(i + j)] =
                    a.ring_.add(s.c_[static_cast<size_t>(i + j)],
                                a.ring_.mul(a.c_[static_cast<size_t>(i)], b.c_[static_cast<size_t>(j)]));
            }
        }
        return s;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!ring_.is_zero(v)) return false;
        return true;
    }

    // Lowest degree with nonzero coefficient; trunc+1 if zero.
    int order() const {
        for (int k = 0; k <= trunc_; ++k)
            if (!ring_.is_zero(c_[static_cast<size_t>(k)])) return k;
        return trunc_ + 1;
    }

private:
    R ring_;
    int trunc_;
    std::vector<Elem> c_;
};

template <class R>
bool series_eq(const UniSeries<R>& a, const UniSeries<R>& b) {
    int d = std::min(a.trunc(), b.trunc());
    for (int k = 0; k <= d; ++k)
        if (!a.ring().eq(a.coeff(k), b.coeff(k))) return false;
    return true;
}

// Bivariate series truncated by total degree.
template <class R>
class BiSeries {
public:
    using Elem = typename R::Elem;

    BiSeries(R ring, int trunc)
        : ring_(std::move(ring)), trunc_(trunc), c_(size_for(trunc), ring_.zero()) {
        if (trunc < 0) throw std::invalid_argument("BiSeries: negative truncation");
    }
    static BiSeries var_x(R ring, int trunc) {
        BiSeries s(ring, trunc);
        s.set_coeff(1, 0, s.ring_.one());
        return s;
    }
    static BiSeries var_y(R ring, int trunc) {
        BiSeries s(ring, trunc);
        s.set_coeff(0, 1, s.ring_.one());
        return s;
    }

    const R& ring() const { return ring_; }
    int trunc() const { return trunc_; }
    const Elem& coeff(int i, int j) const { return c_[idx(i, j)]; }
    void set_coeff(int i, int j, Elem v) { c_[idx(i, j)] = std::move(v); }

    BiSeries zero_like() const { return BiSeries(ring_, trunc_); }
    BiSeries one_like() const {
        BiSeries s(ring_, trunc_);
        s.set_coeff(0, 0, ring_.one());
        return s;
    }
    BiSeries scale(const Elem& f) const {
        BiSeries s(ring_, trunc_);
        for (size_t t = 0; t < c_.size(); ++t) s.c_[t] = ring_.mul(c_[t], f);
        return s;
    }
    BiSeries swapped() const {  // (X, Y) -> (Y, X)
        BiSeries s(ring_, trunc_);
        for (int i = 0; i <= trunc_; ++i)
            for (int j = 0; i + j <= trunc_; ++j) s.set_coeff(j, i, coeff(i, j));
        return s;
    }
    // Restriction to y = 0 (or x = 0), as a univariate series.
    UniSeries<R> slice_y0() const {
        UniSeries<R> s(ring_, trunc_);
        for (int i = 0; i <= trunc_; ++i) s.set_coeff(i, coeff(i, 0));
        return s;
    }
    UniSeries<R> slice_x0() const {
        UniSeries<R> s(ring_, trunc_);
        for (int j = 0; j <= trunc_; ++j) s.set_coeff(j, coeff(0, j));
        return s;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        BiSeries s(a.ring_, d);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                s.set_coeff(i, j, a.ring_.add(a.coeff(i, j), b.coeff(i, j)));
        return s;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        BiSeries s(a.ring_, d);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                s.set_coeff(i, j, a.ring_.sub(a.coeff(i, j), b.coeff(i, j)));
        return s;
    }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        BiSeries s(a.ring_, d);
        for (int i1 = 0; i1 <= d; ++i1)
            for (int j1 = 0; i1 + j1 <= d; ++j1) {
                if (a.ring_.is_zero(a.coeff(i1, j1))) continue;
                for (int i2 = 0; i1 + j1 + i2 <= d; ++i2)
                    for (int j2 = 0; i1 + j1 + i2 + j2 <= d; ++j2) {
                        if (a.ring_.is_zero(b.coeff(i2, j2))) continue;
                        s.set_coeff(i1 + i2, j1 + j2,
                                    a.ring_.add(s.coeff(i1 + i2, j1 + j2),
                                                a.ring_.mul(a.coeff(i1, j1), b.coeff(i2, j2))));
                    }
            }
        return s;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!ring_.is_zero(v)) return false;
        return true;
    }
    bool has_constant_term() const { return !ring_.is_zero(coeff(0, 0)); }

private:
    static size_t size_for(int d) { return static_cast<size_t>((d + 1) * (d + 2) / 2); }
    size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i + j > trunc_) throw std::out_of_range("BiSeries: index");
        return static_cast<size_t>(i * (trunc_ + 1) - i * (i - 1) / 2 + j);
    }

    R ring_;
    int trunc_;
    std::vector<Elem> c_;
};

template <class R>
bool series_eq(const BiSeries<R>& a, const BiSeries<R>& b) {
    int d = std::min(a.trunc(), b.trunc());
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            if (!a.ring().eq(a.coeff(i, j), b.coeff(i, j))) return false;
    return true;
}

// Trivariate series truncated by total degree (used for associativity checks).
template <class R>
class TriSeries {
public:
    using Elem = typename R::Elem;

    TriSeries(R ring, int trunc)
        : ring_(std::move(ring)), trunc_(trunc), c_(size_for(trunc), ring_.zero()) {}
    static TriSeries var(R ring, int trunc, int which) {
        TriSeries s(std::move(ring), trunc);
        int e[3] = {0, 0, 0};
        e[which] = 1;
        s.set_coeff(e[0], e[1], e[2], s.ring_.one());
        return s;
    }

    const R& ring() const { return ring_; }
    int trunc() const { return trunc_; }
    const Elem& coeff(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    void set_coeff(int i, int j, int k, Elem v) { c_[idx(i, j, k)] = std::move(v); }

    TriSeries zero_like() const { return TriSeries(ring_, trunc_); }
    TriSeries one_like() const {
        TriSeries s(ring_, trunc_);
        s.set_coeff(0, 0, 0, ring_.one());
        return s;
    }
    TriSeries scale(const Elem& f) const {
        TriSeries s(ring_, trunc_);
        for (size_t t = 0; t < c_.size(); ++t) s.c_[t] = ring_.mul(c_[t], f);
        return s;
    }

    friend TriSeries operator+(const TriSeries& a, const TriSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        TriSeries s(a.ring_, d);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                for (int k = 0; i + j + k <= d; ++k)
                    s.set_coeff(i, j, k, a.ring_.add(a.coeff(i, j, k), b.coeff(i, j, k)));
        return s;
    }
    friend TriSeries operator*(const TriSeries& a, const TriSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        TriSeries s(a.ring_, d);
        for (int i1 = 0; i1 <= d; ++i1)
            for (int j1 = 0; i1 + j1 <= d; ++j1)
                for (int k1 = 0; i1 + j1 + k1 <= d; ++k1) {
                    if (a.ring_.is_zero(a.coeff(i1, j1, k1))) continue;
                    int rem = d - i1 - j1 - k1;
                    for (int i2 = 0; i2 <= rem; ++i2)
                        for (int j2 = 0; i2 + j2 <= rem; ++j2)
                            for (int k2 = 0; i2 + j2 + k2 <= rem; ++k2) {
                                if (a.ring_.is_zero(b.coeff(i2, j2, k2))) continue;
                                s.set_coeff(i1 + i2, j1 + j2, k1 + k2,
                                            a.ring_.add(s.coeff(i1 + i2, j1 + j2, k1 + k2),
                                                        a.ring_.mul(a.coeff(i1, j1, k1),
                                                                    b.coeff(i2, j2, k2))));
                            }
                }
        return s;
    }

    friend bool series_eq(const TriSeries& a, const TriSeries& b) {
        int d = std::min(a.trunc_, b.trunc_);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                for (int k = 0; i + j + k <= d; ++k)
                    if (!a.ring_.eq(a.coeff(i, j, k), b.coeff(i, j, k))) return false;
        return true;
    }

private:
    static size_t size_for(int d) {
        return static_cast<size_t>((d + 1) * (d + 2) * (d + 3) / 6);
    }
    size_t idx(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i + j + k > trunc_) throw std::out_of_range("TriSeries: index");
        // monomials grouped by i, then by j
        long off = 0;
        for (int t = 0; t < i; ++t) {
            long m = trunc_ - t;
            off += (m + 1) * (m + 2) / 2;
        }
        long m = trunc_ - i;
        off += j * (m + 1) - j * (j - 1) / 2 + k;
        return static_cast<size_t>(off);
    }

    R ring_;
    int trunc_;
    std::vector<Elem> c_;
};

// g evaluated at an algebra element x with x's constant term zero; Alg is any
// of the series types over the same ring (Horner).
template <class R, class Alg>
Alg eval_uni_at(const UniSeries<R>& g, const Alg& x) {
    Alg acc = x.zero_like();
    const Alg one = x.one_like();
    for (int k = g.trunc(); k >= 0; --k) {
        acc = acc * x + one.scale(g.coeff(k));
    }
    return acc;
}

// F(a, b) for a bivariate F; a and b must have zero constant term.
template <class R, class Alg>
Alg eval_bi_at(const BiSeries<R>& F, const Alg& a, const Alg& b) {
    const int d = F.trunc();
    std::vector<Alg> apow, bpow;
    apow.reserve(static_cast<size_t>(d) + 1);
    bpow.reserve(static_cast<size_t>(d) + 1);
    apow.push_back(a.one_like());
    bpow.push_back(b.one_like());
    for (int k = 1; k <= d; ++k) {
        apow.push_back(apow.back() * a);
        bpow.push_back(bpow.back() * b);
    }
    Alg acc = a.zero_like();
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            if (F.ring().is_zero(F.coeff(i, j))) continue;
            acc = acc + (apow[static_cast<size_t>(i)] * bpow[static_cast<size_t>(j)]).scale(F.coeff(i, j));
        }
    return acc;
}

// g(h(t)) truncated; h must have zero constant term.
template <class R>
UniSeries<R> compose(const UniSeries<R>& g, const UniSeries<R>& h) {
    if (!h.ring().is_zero(h.coeff(0)))
        throw std::domain_error("compose: inner series has nonzero constant term");
    int d = std::min(g.trunc(), h.trunc());
    return eval_uni_at(g.truncated(d), h.truncated(d));
}

// Formal derivative; the result is only known one degree lower, so the
// truncation shrinks accordingly.
template <class R>
UniSeries<R> derivative(const UniSeries<R>& g) {
    UniSeries<R> s(g.ring(), std::max(g.trunc() - 1, 0));
    for (int k = 1; k <= g.trunc(); ++k)
        s.set_coeff(k - 1, g.ring().mul_int(g.coeff(k), k));
    return s;
}

// Compositional inverse by degreewise triangular solve: h(rev(h)) = t.
// Requires h(0) = 0 and h'(0) invertible.
template <class R>
UniSeries<R> revert(const UniSeries<R>& h) {
    const R& ring = h.ring();
    if (!ring.is_zero(h.coeff(0)))
        throw std::domain_error("revert: series has nonzero constant term");
    if (h.trunc() < 1 || ring.is_zero(h.coeff(1)))
        throw std::domain_error("revert: linear coefficient not invertible");
    const int d = h.trunc();
    typename R::Elem h1inv = ring.inv(h.coeff(1));
    UniSeries<R> w(ring, d);
    w.set_coeff(1, h1inv);
    for (int k = 2; k <= d; ++k) {
        // with w known below degree k, [t^k] h(w) = h'(0) w_k + E
        UniSeries<R> partial = compose(h.truncated(k), w.truncated(k));
        w.set_coeff(k, ring.neg(ring.mul(h1inv, partial.coeff(k))));
    }
    return w;
}

// F(a(t), b(t)) for univariate a, b with zero constant term.
template <class R>
UniSeries<R> bi_substitute(const BiSeries<R>& F, const UniSeries<R>& a, const UniSeries<R>& b) {
    if (!a.ring().is_zero(a.coeff(0)) || !b.ring().is_zero(b.coeff(0)))
        throw std::domain_error("bi_substitute: inner series has nonzero constant term");
    int d = std::min(F.trunc(), std::min(a.trunc(), b.trunc()));
    BiSeries<R> Ft(F.ring(), d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) Ft.set_coeff(i, j, F.coeff(i, j));
    return eval_bi_at(Ft, a.truncated(d), b.truncated(d));
}

// The translated derivative g'(h(t)); the anchor of the composition-groupoid
// cocycle identity g'(h(t)) * k'((g.h)(t)) = (k.g)'(h(t)).
template <class R>
UniSeries<R> derivative_cocycle(const UniSeries<R>& g, const UniSeries<R>& h) {
    return compose(derivative(g), h);
}

// Lift a univariate series into the bivariate ring, in x or in y.
template <class R>
BiSeries<R> lift_to_x(const UniSeries<R>& g, int trunc) {
    BiSeries<R> s(g.ring(), trunc);
    for (int k = 0; k <= std::min(trunc, g.trunc()); ++k) s.set_coeff(k, 0, g.coeff(k));
    return s;
}
template <class R>
BiSeries<R> lift_to_y(const UniSeries<R>& g, int trunc) {
    BiSeries<R> s(g.ring(), trunc);
    for (int k = 0; k <= std::min(trunc, g.trunc()); ++k) s.set_coeff(0, k, g.coeff(k));
    return s;
}

// exp of a series with zero constant term, via g' = f' g:
// g_n = (1/n) * sum_{k=1..n} k f_k g_{n-k}.
template <class R>
UniSeries<R> exp_series(const UniSeries<R>& f) {
    const R& ring = f.ring();
    if (!ring.is_zero(f.coeff(0)))
        throw std::domain_error("exp_series: nonzero constant term");
    UniSeries<R> g(ring, f.trunc());
    g.set_coeff(0, ring.one());
    for (int n = 1; n <= f.trunc(); ++n) {
        typename R::Elem acc = ring.zero();
        for (int k = 1; k <= n; ++k)
            acc = ring.add(acc, ring.mul(ring.mul_int(f.coeff(k), k), g.coeff(n - k)));
        g.set_coeff(n, ring.div_int(acc, n));
    }
    return g;
}

}  // namespace ltlab
