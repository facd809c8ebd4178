#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "../oracles.hpp"
#include "qsh/lyndon.hpp"

using namespace qsh;

TEST_CASE("is_lyndon under y1 > y2 > ...")
{
    CHECK(is_lyndon(Word{2, 1}));
    CHECK_FALSE(is_lyndon(Word{1, 2}));
    CHECK(is_lyndon(Word{1}));
    CHECK_FALSE(is_lyndon(Word{}));
}

TEST_CASE("Lyndon words by weight")
{
    CHECK(lyndon_of_weight(1) == std::vector<Word>{Word{1}});
    CHECK(lyndon_of_weight(2) == std::vector<Word>{Word{2}});
    const auto w3 = lyndon_of_weight(3);
    CHECK(w3.size() == 2);
    CHECK(std::find(w3.begin(), w3.end(), Word{3}) != w3.end());
    CHECK(std::find(w3.begin(), w3.end(), Word({2, 1})) != w3.end());
    const auto w4 = lyndon_of_weight(4);
    CHECK(w4.size() == 3);
    for (const Word& w : {Word{4}, Word{3, 1}, Word{2, 1, 1}})
        CHECK(std::find(w4.begin(), w4.end(), w) != w4.end());
}

TEST_CASE("Lyndon counts match brute force and the necklace formula")
{
    const std::int64_t expected[] = {1, 1, 2, 3, 6, 9, 18};
    for (int n = 1; n <= 7; ++n) {
        std::int64_t brute = 0;
        for (const auto& w : oracle::all_words(n))
            brute += oracle::is_lyndon_by_rotation(w) ? 1 : 0;
        const auto count = static_cast<std::int64_t>(lyndon_of_weight(n).size());
        CHECK(count == expected[n - 1]);
        CHECK(count == brute);
        CHECK(count == oracle::necklace_count(n));
    }
    for (const auto& w : words_up_to(7))
        CHECK(is_lyndon(w) == oracle::is_lyndon_by_rotation(w.letters()));
}

TEST_CASE("standard factorization")
{
    auto f = standard_factorization(Word{2, 1});
    CHECK(f.left == Word{2});
    CHECK(f.right == Word{1});
    f = standard_factorization(Word{2, 1, 1});
    CHECK(f.left == (Word{2, 1}));
    CHECK(f.right == Word{1});
    f = standard_factorization(Word{3, 2, 1});
    CHECK(f.left == Word{3});
    CHECK(f.right == (Word{2, 1}));
    CHECK_THROWS_AS(standard_factorization(Word{1}), std::invalid_argument);
    CHECK_THROWS_AS(standard_factorization(Word{1, 2}), std::invalid_argument);
}

TEST_CASE("Chen-Fox-Lyndon factorization")
{
    CHECK(lyndon_factorization(Word{1, 2}) == LyndonFactorization{{Word{1}, 1}, {Word{2}, 1}});
    CHECK(lyndon_factorization(Word{2, 1}) == LyndonFactorization{{Word{2, 1}, 1}});
    CHECK(lyndon_factorization(Word{1, 1, 2}) == LyndonFactorization{{Word{1}, 2}, {Word{2}, 1}});
    CHECK_THROWS(lyndon_factorization(Word{}));

    for (const auto& w : words_up_to(7)) {
        if (w.empty())
            continue;
        Word rebuilt;
        const auto f = lyndon_factorization(w);
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(is_lyndon(f[i].word));
            if (i)
                CHECK(word_less(f[i].word, f[i - 1].word));
            rebuilt = rebuilt + power(f[i].word, f[i].multiplicity);
        }
        CHECK(rebuilt == w);
    }
}
