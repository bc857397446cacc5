#include "ltlab/qsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ltlab {

int composition_weight(const Composition& c) {
    return std::accumulate(c.begin(), c.end(), 0);
}

bool is_valid_composition(const Composition& c) {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 1; });
}

bool is_valid_partition(const Partition& p) {
    if (!is_valid_composition(p)) return false;
    return std::is_sorted(p.rbegin(), p.rend());
}

// ------------------------------------------------------------------ QSymElem

QSymElem QSymElem::monomial(Composition I, Rational c) {
    if (!is_valid_composition(I)) throw std::invalid_argument("QSymElem: parts must be positive");
    QSymElem r;
    r.add_term(I, c);
    return r;
}

QSymElem QSymElem::unit(Rational c) { return monomial({}, std::move(c)); }

Rational QSymElem::coeff(const Composition& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSymElem::add_term(const Composition& I, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(I, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymElem QSymElem::operator-() const {
    QSymElem r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

QSymElem operator+(const QSymElem& a, const QSymElem& b) {
    QSymElem r = a;
    for (const auto& [k, v] : b.terms_) r.add_term(k, v);
    return r;
}

QSymElem operator-(const QSymElem& a, const QSymElem& b) { return a + (-b); }

QSymElem QSymElem::scale(const Rational& c) const {
    QSymElem r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool operator==(const QSymElem& a, const QSymElem& b) { return a.terms_ == b.terms_; }

QSymElem QSymElem::graded_part(int weight) const {
    QSymElem r;
    for (const auto& [k, v] : terms_)
        if (composition_weight(k) == weight) r.terms_.emplace(k, v);
    return r;
}

int QSymElem::max_weight() const {
    int w = 0;
    for (const auto& [k, v] : terms_) w = std::max(w, composition_weight(k));
    return w;
}

std::string QSymElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, c] : terms_) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        if (a != 1) os << a << "*";
        os << "M(";
        for (size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i];
        os << ")";
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------------ NSymElem

NSymElem NSymElem::word(Word w, Rational c) {
    if (!is_valid_composition(w)) throw std::invalid_argument("NSymElem: letters must be positive");
    NSymElem r;
    r.add_term(w, c);
    return r;
}

NSymElem NSymElem::unit(Rational c) { return word({}, std::move(c)); }

Rational NSymElem::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NSymElem::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NSymElem NSymElem::operator-() const {
    NSymElem r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

NSymElem operator+(const NSymElem& a, const NSymElem& b) {
    NSymElem r = a;
    for (const auto& [k, v] : b.terms_) r.add_term(k, v);
    return r;
}

NSymElem operator-(const NSymElem& a, const NSymElem& b) { return a + (-b); }

NSymElem NSymElem::scale(const Rational& c) const {
    NSymElem r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool operator==(const NSymElem& a, const NSymElem& b) { return a.terms_ == b.terms_; }

std::string NSymElem::str() const {
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
        if (a != 1 || w.empty()) os << a;
        if (a != 1 && !w.empty()) os << "*";
        for (size_t i = 0; i < w.size(); ++i) os << (i ? "*" : "") << "Z" << w[i];
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- operations

namespace {

// Quasi-shuffle of two compositions; coefficients count multiplicities.
void quasi_shuffle(const Composition& I, size_t i, const Composition& J, size_t j,
                   Composition& cur, const Rational& c, QSymElem& out) {
    if (i == I.size() && j == J.size()) {
        out.add_term(cur, c);
        return;
    }
    if (i < I.size()) {
        cur.push_back(I[i]);
        quasi_shuffle(I, i + 1, J, j, cur, c, out);
        cur.pop_back();
    }
    if (j < J.size()) {
        cur.push_back(J[j]);
        quasi_shuffle(I, i, J, j + 1, cur, c, out);
        cur.pop_back();
    }
    if (i < I.size() && j < J.size()) {
        cur.push_back(I[i] + J[j]);
        quasi_shuffle(I, i + 1, J, j + 1, cur, c, out);
        cur.pop_back();
    }
}

}  // namespace

QSymElem qsym_mul(const QSymElem& x, const QSymElem& y) {
    QSymElem out;
    for (const auto& [I, a] : x.terms())
        for (const auto& [J, b] : y.terms()) {
            Composition cur;
            quasi_shuffle(I, 0, J, 0, cur, a * b, out);
        }
    return out;
}

QTensor qsym_comul(const QSymElem& x) {
    QTensor out;
    for (const auto& [I, c] : x.terms())
        for (size_t j = 0; j <= I.size(); ++j) {
            Composition left(I.begin(), I.begin() + static_cast<long>(j));
            Composition right(I.begin() + static_cast<long>(j), I.end());
            auto key = std::make_pair(std::move(left), std::move(right));
            auto [it, fresh] = out.emplace(std::move(key), c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

NSymElem nsym_mul(const NSymElem& x, const NSymElem& y) {
    NSymElem out;
    for (const auto& [u, a] : x.terms())
        for (const auto& [v, b] : y.terms()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, a * b);
        }
    return out;
}

namespace {

void ntensor_add(NTensor& t, const Word& l, const Word& r, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(std::make_pair(l, r), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

void qtensor_add(QTensor& t, const Composition& l, const Composition& r, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(std::make_pair(l, r), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

// All ways to split every letter k_t = a_t + b_t, keeping nonzero letters.
void nsym_word_comul(const Word& w, size_t t, Word& left, Word& right, const Rational& c,
                     NTensor& out) {
    if (t == w.size()) {
        ntensor_add(out, left, right, c);
        return;
    }
    for (int a = 0; a <= w[t]; ++a) {
        int b = w[t] - a;
        if (a > 0) left.push_back(a);
        if (b > 0) right.push_back(b);
        nsym_word_comul(w, t + 1, left, right, c, out);
        if (a > 0) left.pop_back();
        if (b > 0) right.pop_back();
    }
}

}  // namespace

NTensor nsym_comul(const NSymElem& x) {
    NTensor out;
    for (const auto& [w, c] : x.terms()) {
        Word l, r;
        nsym_word_comul(w, 0, l, r, c, out);
    }
    return out;
}

Rational duality_pairing(const NSymElem& w, const QSymElem& x) {
    Rational out(0);
    for (const auto& [word, a] : w.terms()) {
        auto it = x.terms().find(word);
        if (it != x.terms().end()) out += a * it->second;
    }
    return out;
}

QSymElem antipode(const QSymElem& x) {
    QSymElem out;
    for (const auto& [I, c] : x.terms()) {
        // S on all prefixes of I, shortest first:
        // S(M_K) = - sum_{j < |K|} S(M_{K[0..j)}) * M_{K[j..)}
        std::vector<QSymElem> s_prefix;
        s_prefix.push_back(QSymElem::unit());  // S(M_()) = M_()
        for (size_t len = 1; len <= I.size(); ++len) {
            QSymElem acc;
            for (size_t j = 0; j < len; ++j) {
                Composition tail(I.begin() + static_cast<long>(j), I.begin() + static_cast<long>(len));
                acc = acc + qsym_mul(s_prefix[j], QSymElem::monomial(tail));
            }
            s_prefix.push_back(-acc);
        }
        out = out + s_prefix[I.size()].scale(c);
    }
    return out;
}

QTensor qtensor_mul(const QTensor& a, const QTensor& b) {
    QTensor out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            auto left = qsym_mul(QSymElem::monomial(ka.first), QSymElem::monomial(kb.first));
            auto right = qsym_mul(QSymElem::monomial(ka.second), QSymElem::monomial(kb.second));
            for (const auto& [lI, lc] : left.terms())
                for (const auto& [rI, rc] : right.terms())
                    qtensor_add(out, lI, rI, va * vb * lc * rc);
        }
    return out;
}

NTensor ntensor_mul(const NTensor& a, const NTensor& b) {
    NTensor out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            Word l = ka.first;
            l.insert(l.end(), kb.first.begin(), kb.first.end());
            Word r = ka.second;
            r.insert(r.end(), kb.second.begin(), kb.second.end());
            ntensor_add(out, l, r, va * vb);
        }
    return out;
}

QTensor qtensor_of(const QSymElem& a, const QSymElem& b) {
    QTensor out;
    for (const auto& [I, x] : a.terms())
        for (const auto& [J, y] : b.terms()) qtensor_add(out, I, J, x * y);
    return out;
}

// ------------------------------------------------------------------- SymElem

SymElem SymElem::basis_elem(SymBasis basis, Partition lambda, Rational c) {
    if (!is_valid_partition(lambda))
        throw std::invalid_argument("SymElem: not a partition (need weakly decreasing positive parts)");
    SymElem r(basis);
    r.add_term(lambda, c);
    return r;
}

void SymElem::add_term(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(lambda, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymElem embed_sym(const SymElem& f) {
    QSymElem out;
    for (const auto& [lambda, c] : f.terms()) {
        if (f.basis() == SymBasis::monomial) {
            Composition sorted = lambda;
            std::sort(sorted.begin(), sorted.end());
            QSymElem part;
            do {
                part.add_term(sorted, Rational(1));
            } while (std::next_permutation(sorted.begin(), sorted.end()));
            out = out + part.scale(c);
        } else {
            QSymElem prod = QSymElem::unit();
            for (int n : lambda) prod = qsym_mul(prod, QSymElem::monomial({n}));
            out = out + prod.scale(c);
        }
    }
    return out;
}

Int qsym_graded_dimension(int k) {
    if (k < 1) throw std::invalid_argument("qsym_graded_dimension: k must be >= 1");
    return pow_int(Int(2), static_cast<unsigned long>(k - 1));
}

}  // namespace ltlab
