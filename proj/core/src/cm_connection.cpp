#include "ltlab/cm_connection.hpp"

#include <sstream>

namespace ltlab {

GradedLieElem ConnCoeffs::coeff(int z_exp, int u_exp) const {
    auto it = terms_.find({z_exp, u_exp});
    return it == terms_.end() ? GradedLieElem(trunc_) : it->second;
}

void ConnCoeffs::add_term(int z_exp, int u_exp, const GradedLieElem& x) {
    if (x.is_zero()) return;
    if (u_exp < 0) throw std::invalid_argument("ConnCoeffs: negative u exponent");
    Key key{z_exp, u_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, x);
    } else {
        it->second = it->second + x;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ConnCoeffs ConnCoeffs::operator-() const {
    ConnCoeffs r(trunc_);
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

ConnCoeffs operator+(const ConnCoeffs& a, const ConnCoeffs& b) {
    ConnCoeffs r(std::min(a.trunc_, b.trunc_));
    for (const auto& [k, v] : a.terms_) r.add_term(k.first, k.second, v);
    for (const auto& [k, v] : b.terms_) r.add_term(k.first, k.second, v);
    return r;
}

ConnCoeffs operator-(const ConnCoeffs& a, const ConnCoeffs& b) { return a + (-b); }

bool operator==(const ConnCoeffs& a, const ConnCoeffs& b) { return a.terms_ == b.terms_; }

ConnCoeffs ConnCoeffs::dz() const {
    ConnCoeffs r(trunc_);
    for (const auto& [k, v] : terms_) {
        if (k.first == 0) continue;
        r.add_term(k.first - 1, k.second, v.scale(Rational(k.first)));
    }
    return r;
}

bool ConnCoeffs::has_u0_term() const {
    for (const auto& [k, v] : terms_)
        if (k.second == 0 && !v.is_zero()) return true;
    return false;
}

std::string ConnCoeffs::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        os << "z^" << k.first << " u^" << k.second << " (" << v.str() << ")";
        first = false;
    }
    return os.str();
}

ConnCoeffs apply_H(const ConnCoeffs& x) {
    ConnCoeffs r(x.trunc());
    for (const auto& [k, v] : x.terms()) r.add_term(k.first, k.second, grading_H(v));
    return r;
}

ConnCoeffs apply_H_inverse(const ConnCoeffs& x) {
    ConnCoeffs r(x.trunc());
    for (const auto& [k, v] : x.terms()) r.add_term(k.first, k.second, grading_H_inverse(v));
    return r;
}

ConnCoeffs conn_bracket(const ConnCoeffs& a, const ConnCoeffs& b) {
    ConnCoeffs r(std::min(a.trunc(), b.trunc()));
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms()) {
            if (ka.second + kb.second > r.trunc()) continue;  // u-degree beyond truncation
            auto br = bracket(va, vb);
            if (!br.is_zero()) r.add_term(ka.first + kb.first, ka.second + kb.second, br);
        }
    return r;
}

ConnCoeffs lambda1_from_beta(const GradedLieElem& beta) {
    ConnCoeffs r(beta.trunc());
    for (int k = 1; k <= beta.trunc(); ++k) {
        auto bk = beta.graded_part(k);
        if (!bk.is_zero()) r.add_term(-1, k, -bk);
    }
    return r;
}

ConnCoeffs solve_lambda0(const ConnCoeffs& lambda1, int bracket_depth) {
    const int depth = bracket_depth > 0 ? bracket_depth : lambda1.trunc() + 2;
    ConnCoeffs base = lambda1.dz();
    ConnCoeffs l0 = apply_H_inverse(base);
    for (int it = 0; it < depth; ++it) {
        ConnCoeffs next = apply_H_inverse(base + conn_bracket(l0, lambda1));
        if (next == l0) return l0;
        l0 = next;
    }
    throw std::runtime_error("solve_lambda0: no fixed point within bracket_depth");
}

FlatnessReport flatness_check(const ConnCoeffs& lambda0, const ConnCoeffs& lambda1) {
    ConnCoeffs residual = lambda1.dz() - apply_H(lambda0) + conn_bracket(lambda0, lambda1);
    return FlatnessReport{residual.is_zero(), residual};
}

UPoly witt_apply(const WittOperator& v, const UPoly& f) {
    UPoly out;
    for (const auto& [m, c] : f) {
        if (c == 0 || m == 0) continue;
        Rational nc = c * m;
        auto [it, fresh] = out.emplace(m + v.k, nc);
        if (!fresh) {
            it->second += nc;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

WittBracketReport witt_bracket_check(int k, int l, int max_monomial) {
    if (k < 1 || l < 1) throw std::invalid_argument("witt_bracket_check: k, l must be >= 1");
    WittOperator vk{k}, vl{l}, vkl{k + l};
    bool pass = true;
    for (int m = 0; m <= max_monomial; ++m) {
        UPoly um{{m, Rational(1)}};
        UPoly lhs = witt_apply(vk, witt_apply(vl, um));
        for (auto& [e, c] : witt_apply(vl, witt_apply(vk, um))) {
            auto [it, fresh] = lhs.emplace(e, -c);
            if (!fresh) {
                it->second -= c;
                if (it->second == 0) lhs.erase(it);
            }
        }
        UPoly rhs;
        for (auto& [e, c] : witt_apply(vkl, um))
            if (c * (l - k) != 0) rhs.emplace(e, c * (l - k));
        if (lhs != rhs) pass = false;
    }
    return WittBracketReport{k, l, pass};
}

}  // namespace ltlab
