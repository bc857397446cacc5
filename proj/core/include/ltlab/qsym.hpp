#pragma once

// The graded Hopf algebra QSym of quasisymmetric functions in the monomial
// basis M_I, its graded dual NSym (free associative algebra on Z_1, Z_2, ...
// with Delta Z_k = sum_{i+j=k} Z_i (x) Z_j), the duality pairing, the
// antipode, and the embedding of symmetric functions.
//
// Composition order convention: M_(s_1,...,s_r) carries its first part on the
// *largest* variable index, so the specialization x_n -> 1/n sends M_I
// directly to the multiple zeta value with exponents in the written order.
// All Hopf-structural formulas are unaffected by this choice.

#include "ltlab/lyndon.hpp"
#include "ltlab/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace ltlab {

using Composition = std::vector<int>;  // positive parts; empty = unit
using Partition = std::vector<int>;    // weakly decreasing positive parts

int composition_weight(const Composition& c);
bool is_valid_composition(const Composition& c);
bool is_valid_partition(const Partition& p);

// Sparse rational element of QSym in the monomial basis.
class QSymElem {
public:
    using Terms = std::map<Composition, Rational>;

    QSymElem() = default;
    static QSymElem monomial(Composition I, Rational c = Rational(1));
    static QSymElem unit(Rational c = Rational(1));  // c * M_()

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Composition& I) const;
    void add_term(const Composition& I, const Rational& c);  // drops zeros

    QSymElem operator-() const;
    friend QSymElem operator+(const QSymElem& a, const QSymElem& b);
    friend QSymElem operator-(const QSymElem& a, const QSymElem& b);
    QSymElem scale(const Rational& c) const;
    friend bool operator==(const QSymElem& a, const QSymElem& b);

    // Homogeneous component of the given weight; max weight present.
    QSymElem graded_part(int weight) const;
    int max_weight() const;

    std::string str() const;

private:
    Terms terms_;  // no zero coefficients stored
};

// Sparse rational element of NSym (words in Z_k).
class NSymElem {
public:
    using Terms = std::map<Word, Rational>;

    NSymElem() = default;
    static NSymElem word(Word w, Rational c = Rational(1));
    static NSymElem unit(Rational c = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Word& w) const;
    void add_term(const Word& w, const Rational& c);

    NSymElem operator-() const;
    friend NSymElem operator+(const NSymElem& a, const NSymElem& b);
    friend NSymElem operator-(const NSymElem& a, const NSymElem& b);
    NSymElem scale(const Rational& c) const;
    friend bool operator==(const NSymElem& a, const NSymElem& b);

    std::string str() const;

private:
    Terms terms_;
};

// Rank-one-free tensors as sparse maps over pairs of basis labels.
using QTensor = std::map<std::pair<Composition, Composition>, Rational>;
using NTensor = std::map<std::pair<Word, Word>, Rational>;

// Quasi-shuffle (overlapping shuffle) product: interleave parts, optionally
// merging one part from each side by addition.
QSymElem qsym_mul(const QSymElem& x, const QSymElem& y);

// Deconcatenation coproduct: Delta M_I = sum over splittings I = I1 . I2.
QTensor qsym_comul(const QSymElem& x);

// Concatenation product of words.
NSymElem nsym_mul(const NSymElem& x, const NSymElem& y);

// Algebra-map extension of Delta Z_k = sum_{i+j=k} Z_i (x) Z_j (Z_0 = 1).
NTensor nsym_comul(const NSymElem& x);

// <Z-word with parts I, M_J> = delta_{I,J}, bilinear.
Rational duality_pairing(const NSymElem& w, const QSymElem& x);

// Antipode, computed degree by degree from m(S (x) id) Delta = u eps.
QSymElem antipode(const QSymElem& x);

// Componentwise products on tensors (the algebra structure of H (x) H).
QTensor qtensor_mul(const QTensor& a, const QTensor& b);
NTensor ntensor_mul(const NTensor& a, const NTensor& b);
QTensor qtensor_of(const QSymElem& a, const QSymElem& b);

// Symmetric functions in the monomial (m_lambda) or power-sum (p_lambda)
// basis.
enum class SymBasis { monomial, powersum };
class SymElem {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymElem(SymBasis basis) : basis_(basis) {}
    static SymElem basis_elem(SymBasis basis, Partition lambda, Rational c = Rational(1));

    SymBasis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    void add_term(const Partition& lambda, const Rational& c);

private:
    SymBasis basis_;
    Terms terms_;
};

// m_lambda -> sum of M_I over distinct rearrangements I of lambda;
// p_n -> M_(n), extended multiplicatively to p_lambda.
QSymElem embed_sym(const SymElem& f);

// Number of compositions of weight k (the graded dimension 2^(k-1), k >= 1).
Int qsym_graded_dimension(int k);

}  // namespace ltlab
