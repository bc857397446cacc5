#include "ltlab/free_lie.hpp"

#include <numeric>
#include <sstream>

namespace ltlab {

int word_weight(const Word& w) { return std::accumulate(w.begin(), w.end(), 0); }

namespace {

void nc_add(NCPoly& p, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            nc_add(out, w, x * y);
        }
    return out;
}

NCPoly nc_commutator(const NCPoly& a, const NCPoly& b) {
    NCPoly out = nc_mul(a, b);
    for (const auto& [w, c] : nc_mul(b, a)) nc_add(out, w, -c);
    return out;
}

}  // namespace

NCPoly lyndon_bracketing(const Word& w) {
    if (w.empty()) throw std::invalid_argument("lyndon_bracketing: empty word");
    if (!is_lyndon(w)) throw std::invalid_argument("lyndon_bracketing: not a Lyndon word");
    if (w.size() == 1) return NCPoly{{w, Rational(1)}};
    auto [u, v] = lyndon_factorization(w);
    return nc_commutator(lyndon_bracketing(u), lyndon_bracketing(v));
}

GradedLieElem::GradedLieElem(int trunc) : trunc_(trunc) {
    if (trunc < 1) throw std::invalid_argument("GradedLieElem: truncation must be >= 1");
}

GradedLieElem GradedLieElem::generator(int trunc, int k) {
    return basis_elem(trunc, Word{k});
}

GradedLieElem GradedLieElem::basis_elem(int trunc, const Word& lyndon, Rational c) {
    if (!is_lyndon(lyndon)) throw std::invalid_argument("GradedLieElem: key must be a Lyndon word");
    GradedLieElem r(trunc);
    if (word_weight(lyndon) <= trunc) r.add_term(lyndon, c);
    return r;
}

Rational GradedLieElem::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedLieElem::add_term(const Word& w, const Rational& c) {
    if (c == 0 || word_weight(w) > trunc_) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedLieElem GradedLieElem::operator-() const {
    GradedLieElem r(trunc_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

GradedLieElem operator+(const GradedLieElem& a, const GradedLieElem& b) {
    GradedLieElem r(std::min(a.trunc_, b.trunc_));
    for (const auto& [w, c] : a.terms_) r.add_term(w, c);
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

GradedLieElem operator-(const GradedLieElem& a, const GradedLieElem& b) { return a + (-b); }

GradedLieElem GradedLieElem::scale(const Rational& c) const {
    GradedLieElem r(trunc_);
    if (c == 0) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

bool operator==(const GradedLieElem& a, const GradedLieElem& b) {
    return a.terms_ == b.terms_;
}

GradedLieElem GradedLieElem::graded_part(int degree) const {
    GradedLieElem r(trunc_);
    for (const auto& [w, c] : terms_)
        if (word_weight(w) == degree) r.terms_.emplace(w, c);
    return r;
}

int GradedLieElem::max_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, word_weight(w));
    return d;
}

NCPoly GradedLieElem::to_associative() const {
    NCPoly out;
    for (const auto& [w, c] : terms_)
        for (const auto& [u, x] : lyndon_bracketing(w)) nc_add(out, u, x * c);
    return out;
}

std::string GradedLieElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        if (a != 1) os << a << "*";
        if (w.size() == 1) {
            os << "e" << w[0];
        } else {
            os << "L(";
            for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
            os << ")";
        }
        first = false;
    }
    return os.str();
}

GradedLieElem lie_from_associative(NCPoly p, int trunc) {
    // drop everything beyond the truncation
    for (auto it = p.begin(); it != p.end();)
        it = word_weight(it->first) > trunc ? p.erase(it) : std::next(it);
    GradedLieElem out(trunc);
    while (!p.empty()) {
        // the lexicographically least word of a Lie element is Lyndon, and
        // subtracting its bracketing removes it while only adding larger words
        const Word w = p.begin()->first;
        const Rational c = p.begin()->second;
        if (!is_lyndon(w))
            throw std::invalid_argument("lie_from_associative: not a Lie element");
        out.add_term(w, c);
        for (const auto& [u, x] : lyndon_bracketing(w)) nc_add(p, u, -x * c);
    }
    return out;
}

GradedLieElem bracket(const GradedLieElem& a, const GradedLieElem& b) {
    int trunc = std::min(a.trunc(), b.trunc());
    return lie_from_associative(nc_commutator(a.to_associative(), b.to_associative()), trunc);
}

GradedLieElem grading_H(const GradedLieElem& x) {
    GradedLieElem r(x.trunc());
    for (const auto& [w, c] : x.terms())
        r = r + GradedLieElem::basis_elem(x.trunc(), w, c * word_weight(w));
    return r;
}

GradedLieElem grading_H_inverse(const GradedLieElem& x) {
    GradedLieElem r(x.trunc());
    for (const auto& [w, c] : x.terms())
        r = r + GradedLieElem::basis_elem(x.trunc(), w, c / word_weight(w));
    return r;
}

}  // namespace ltlab
