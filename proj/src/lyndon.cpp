#include "qsh/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsh {

namespace {

// Letter comparison in the y_1 > y_2 > ... order: a < b iff index a > index b.
int compare_letters(int a, int b)
{
    if (a == b)
        return 0;
    return a > b ? -1 : 1;
}

} // namespace

bool is_lyndon(const Word& w)
{
    if (w.empty())
        return false;
    for (std::size_t i = 1; i < w.length(); ++i)
        if (!word_less(w, w.suffix(i)))
            return false;
    return true;
}

std::vector<Word> lyndon_of_weight(int n)
{
    std::vector<Word> out;
    for (auto& w : words_of_weight(n))
        if (is_lyndon(w))
            out.push_back(std::move(w));
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

std::vector<Word> lyndon_up_to(int n)
{
    std::vector<Word> out;
    for (int k = 1; k <= n; ++k) {
        auto ls = lyndon_of_weight(k);
        out.insert(out.end(), ls.begin(), ls.end());
    }
    return out;
}

StandardFactorization standard_factorization(const Word& l)
{
    if (l.length() < 2 || !is_lyndon(l))
        throw std::invalid_argument("standard factorization needs a Lyndon word of length >= 2");
    for (std::size_t i = 1; i < l.length(); ++i) {
        Word right = l.suffix(i);
        if (is_lyndon(right))
            return {l.prefix(i), right};
    }
    // The last letter is always a Lyndon suffix.
    throw std::logic_error("unreachable: no Lyndon proper suffix");
}

LyndonFactorization lyndon_factorization(const Word& w)
{
    if (w.empty())
        throw std::invalid_argument("Lyndon factorization of the empty word");
    std::vector<Word> factors;
    const auto& s = w.letters();
    const std::size_t n = s.size();
    std::size_t k = 0;
    while (k < n) {
        std::size_t i = k;
        std::size_t j = k + 1;
        while (j < n && compare_letters(s[i], s[j]) <= 0) {
            if (compare_letters(s[i], s[j]) < 0)
                i = k;
            else
                ++i;
            ++j;
        }
        while (k <= i) {
            factors.push_back(w.suffix(k).prefix(j - i));
            k += j - i;
        }
    }

    LyndonFactorization out;
    for (auto& f : factors) {
        if (!out.empty() && out.back().word == f)
            ++out.back().multiplicity;
        else
            out.push_back({std::move(f), 1});
    }
    return out;
}

} // namespace qsh
