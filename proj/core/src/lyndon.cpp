#include "ltlab/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltlab {

bool letter_allowed(int k, LieAlphabet alpha) {
    switch (alpha) {
        case LieAlphabet::all: return k >= 1;
        case LieAlphabet::odd: return k >= 3 && k % 2 == 1;
        case LieAlphabet::odd_with_one: return k >= 1 && k % 2 == 1;
    }
    return false;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    const size_t n = w.size();
    for (size_t r = 1; r < n; ++r) {
        Word rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        if (!(w < rot)) return false;
    }
    return true;
}

namespace {

void compositions_rec(int rest, LieAlphabet alpha, Word& cur, std::vector<Word>& out) {
    if (rest == 0) {
        if (is_lyndon(cur)) out.push_back(cur);
        return;
    }
    for (int k = 1; k <= rest; ++k) {
        if (!letter_allowed(k, alpha)) continue;
        cur.push_back(k);
        compositions_rec(rest - k, alpha, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> lyndon_words(int weight, LieAlphabet alpha) {
    if (weight < 1) throw std::invalid_argument("lyndon_words: weight must be >= 1");
    std::vector<Word> out;
    Word cur;
    compositions_rec(weight, alpha, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

long lie_generator_count(int weight, LieAlphabet alpha) {
    return static_cast<long>(lyndon_words(weight, alpha).size());
}

std::pair<Word, Word> lyndon_factorization(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("lyndon_factorization: need length >= 2");
    size_t best = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + static_cast<long>(i), w.end());
        Word cur(w.begin() + static_cast<long>(best), w.end());
        if (suffix < cur) best = i;
    }
    return {Word(w.begin(), w.begin() + static_cast<long>(best)),
            Word(w.begin() + static_cast<long>(best), w.end())};
}

}  // namespace ltlab
