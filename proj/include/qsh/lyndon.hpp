#pragma once

#include <vector>

#include "qsh/words.hpp"

namespace qsh {

/// Nonempty and strictly smaller (word_less) than each proper suffix.
bool is_lyndon(const Word& w);

/// Lyndon words of weight exactly n, increasing in word_less.
std::vector<Word> lyndon_of_weight(int n);

/// Lyndon words of weight <= n, sorted by (weight, word_less).
std::vector<Word> lyndon_up_to(int n);

struct StandardFactorization {
    Word left;
    Word right;
};

/// l = left . right with right the longest proper Lyndon suffix.
/// Throws std::invalid_argument unless l is Lyndon of length >= 2.
StandardFactorization standard_factorization(const Word& l);

struct LyndonFactor {
    Word word;
    int multiplicity = 1;

    friend bool operator==(const LyndonFactor&, const LyndonFactor&) = default;
};

/// w = l_1^{i_1} ... l_k^{i_k} with l_1 > ... > l_k Lyndon.
using LyndonFactorization = std::vector<LyndonFactor>;

/// Chen-Fox-Lyndon factorization (Duval's scan). Throws on the empty word.
LyndonFactorization lyndon_factorization(const Word& w);

} // namespace qsh
