#pragma once

// Free graded Lie algebra on one generator e_k per degree k, truncated by
// degree. Elements live in the Lyndon-word basis with exact rational
// coefficients; brackets are computed in the enveloping free associative
// algebra and straightened back (the standard bracketing of a Lyndon word
// expands to the word itself plus lexicographically larger rearrangements).

#include "ltlab/lyndon.hpp"
#include "ltlab/scalars.hpp"

#include <map>
#include <string>

namespace ltlab {

// Words in the enveloping algebra; letter k is the degree-k generator.
using NCPoly = std::map<Word, Rational>;

int word_weight(const Word& w);

// Standard bracketing of a Lyndon word, expanded in the associative algebra.
NCPoly lyndon_bracketing(const Word& w);

class GradedLieElem {
public:
    using Terms = std::map<Word, Rational>;  // keys are Lyndon words

    explicit GradedLieElem(int trunc);
    static GradedLieElem generator(int trunc, int k);  // e_k
    static GradedLieElem basis_elem(int trunc, const Word& lyndon, Rational c = Rational(1));

    int trunc() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Word& w) const;

    GradedLieElem operator-() const;
    friend GradedLieElem operator+(const GradedLieElem& a, const GradedLieElem& b);
    friend GradedLieElem operator-(const GradedLieElem& a, const GradedLieElem& b);
    GradedLieElem scale(const Rational& c) const;
    friend bool operator==(const GradedLieElem& a, const GradedLieElem& b);

    // Homogeneous component of the given degree; largest degree present.
    GradedLieElem graded_part(int degree) const;
    int max_degree() const;

    NCPoly to_associative() const;

    std::string str() const;

private:
    void add_term(const Word& w, const Rational& c);
    friend GradedLieElem lie_from_associative(NCPoly p, int trunc);

    int trunc_;
    Terms terms_;
};

// Straighten an associative polynomial known to be a Lie element into the
// Lyndon basis (throws std::invalid_argument if it is not one).
GradedLieElem lie_from_associative(NCPoly p, int trunc);

// [a, b], truncated at the common truncation.
GradedLieElem bracket(const GradedLieElem& a, const GradedLieElem& b);

// Grading operator: multiplies the degree-k component by k; its inverse
// divides (defined here on Lie elements, which have no degree-0 part).
GradedLieElem grading_H(const GradedLieElem& x);
GradedLieElem grading_H_inverse(const GradedLieElem& x);

}  // namespace ltlab
