#pragma once

// Lyndon words over the weighted alphabet {1, 2, 3, ...} (letter k has weight
// k). They index a basis of the free Lie algebra with one generator per
// degree; restricting the alphabet to odd letters gives the free odd
// subalgebra.

#include <utility>
#include <vector>

namespace ltlab {

using Word = std::vector<int>;

// Which generators are available, by degree.
enum class LieAlphabet {
    all,           // one generator in every degree >= 1
    odd,           // odd degrees >= 3
    odd_with_one,  // odd degrees >= 1
};

bool letter_allowed(int k, LieAlphabet alpha);

// w nonempty and strictly smaller than each of its proper rotations.
bool is_lyndon(const Word& w);

// All Lyndon words of total weight `weight` over the alphabet, sorted.
std::vector<Word> lyndon_words(int weight, LieAlphabet alpha = LieAlphabet::all);

// Dimension of the degree-k component of the free graded Lie algebra.
long lie_generator_count(int weight, LieAlphabet alpha = LieAlphabet::all);

// w = uv with v the lexicographically least proper suffix; both factors are
// Lyndon and the bracketing b(w) = [b(u), b(v)] is the standard one.
std::pair<Word, Word> lyndon_factorization(const Word& w);

}  // namespace ltlab
