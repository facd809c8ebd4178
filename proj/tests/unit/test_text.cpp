#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "qsh/text.hpp"
#include "qsh/verify.hpp"

using namespace qsh;

TEST_CASE("word text form")
{
    CHECK(format_word(Word{1, 2, 2}) == "1 2 2");
    CHECK(format_word(Word{}) == "e");
    CHECK(parse_word("1 2 2") == Word{1, 2, 2});
    CHECK(parse_word(" e ") == Word{});
    CHECK(parse_word("") == Word{});
    CHECK_THROWS_AS(parse_word("1 x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
}

TEST_CASE("composition text form")
{
    CHECK(format_composition(Composition{1, 2}) == "(1,2)");
    CHECK(format_composition(Composition{}) == "()");
    CHECK(parse_composition("(2, 1)") == Composition{2, 1});
    CHECK(parse_composition("()") == Composition{});
    CHECK_THROWS_AS(parse_composition("(1,,2)"), std::invalid_argument);
}

TEST_CASE("polynomial text form")
{
    Polynomial p;
    p.add(Word{}, 1);
    p.add(Word{2}, make_rational(1, 2));
    p.add(Word{1, 1}, 2);
    CHECK(format_polynomial(p) == "1 + 2·[1 1] + 1/2·[2]");
    CHECK(parse_polynomial("1 + 2·[1 1] + 1/2·[2]") == p);
    CHECK(parse_polynomial("1 + 2*[1 1] + 1/2*[2]") == p);
    CHECK(format_polynomial(Polynomial{}) == "0");
    CHECK(parse_polynomial("0").is_zero());
    CHECK(format_polynomial(parse_polynomial("-[1] - 3/4·[2 1]")) == "-[1] - 3/4·[2 1]");
    CHECK_THROWS_AS(parse_polynomial("1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("[1"), std::invalid_argument);
}

TEST_CASE("JSON round trips")
{
    for (const char* text : {"0", "1", "-[1 2] + 1/3·[3]", "2 - [2 1] + 5/7·[1 1 1 1]"}) {
        const Polynomial p = parse_polynomial(text);
        const auto j = to_json(p);
        CHECK(polynomial_from_json(j) == p);
        CHECK(polynomial_from_json(nlohmann::json::parse(j.dump())) == p);
        CHECK(parse_polynomial(format_polynomial(p)) == p);
    }
    const auto j = to_json(parse_polynomial("2·[1 1]"));
    CHECK(j.dump() == R"([{"coeff":"2/1","word":[1,1]}])");
}

TEST_CASE("Sym and QSym element text forms")
{
    const SymElement x = parse_sym_element("S:(1,1) - S:(2)");
    CHECK(x.basis() == SymBasis::S);
    CHECK(format_element(x) == "S:(1,1) - S:(2)");
    CHECK(parse_sym_element("(2)", SymBasis::Lambda) == SymElement(SymBasis::Lambda, Composition{2}));
    CHECK(format_element(parse_qsym_element("1/2·F:(1,2)")) == "1/2·F:(1,2)");
    CHECK(format_element(SymElement(SymBasis::Ribbon)) == "0");
}

TEST_CASE("verify sweep passes and is deterministic")
{
    const auto a = run_verify({4, 8, 7});
    const auto b = run_verify({4, 8, 7});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        INFO(a[i].name << ": " << a[i].detail);
        CHECK(a[i].passed);
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].detail == b[i].detail);
    }
    for (std::uint64_t seed : {1u, 2u, 3u})
        for (const auto& r : run_verify({3, 6, seed}))
            CHECK(r.passed);
}
