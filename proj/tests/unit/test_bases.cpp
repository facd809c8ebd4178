#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "../oracles.hpp"
#include "qsh/bases.hpp"
#include "qsh/lyndon.hpp"
#include "qsh/text.hpp"

using namespace qsh;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

Polynomial from_oracle(const oracle::Poly& p)
{
    Polynomial out;
    for (const auto& [w, c] : p)
        out.add(Word(w), c);
    return out;
}

} // namespace

TEST_CASE("p and s on small words")
{
    CHECK(p_basis(Word{2, 1}) == P("[2 1] - [1 2]"));
    CHECK(s_basis(Word{2, 1}) == P("[2 1]"));
    CHECK(s_basis(Word{1, 1}) == P("[1 1]"));
}

TEST_CASE("pi1 on letters")
{
    CHECK(pi1(Word{1}) == P("[1]"));
    CHECK(pi1(Word{2}) == P("[2] - 1/2·[1 1]"));
    CHECK(pi1(Word{3}) == P("[3] - 1/2·[1 2] - 1/2·[2 1] + 1/3·[1 1 1]"));
}

TEST_CASE("pi1 matches the tuple-enumeration oracle")
{
    for (const auto& w : words_up_to(4))
        if (!w.empty())
            CHECK(pi1(w) == from_oracle(oracle::pi1(w.letters())));
}

TEST_CASE("pi1 exponential inverse")
{
    CHECK(pi1_inverse_check(Word{2}));
    CHECK(pi1_inverse_check(Word{1}));
    CHECK(pi1_inverse_check(Word{2, 1}));
    for (const auto& w : words_up_to(5))
        if (!w.empty())
            CHECK(pi1_inverse_check(w));
}

TEST_CASE("X, L and R elements")
{
    const auto X = X_elements(3);
    CHECK(X[0] == one());
    CHECK(X[1] == P("-[1]"));
    CHECK(X[2] == P("[1 1] - [2]"));
    const auto L = L_elements(3);
    const auto R = R_elements(3);
    CHECK(L[2] == P("2·[2] - [1 1]"));
    CHECK(R[2] == P("2·[2] - [1 1]"));
    CHECK(L[3] == P("3·[3] - [1 2] - 2·[2 1] + [1 1 1]"));
    CHECK(R[3] == P("3·[3] - 2·[1 2] - [2 1] + [1 1 1]"));
    for (int n = 1; n <= 6; ++n) {
        const auto Ln = L_elements(n), Rn = R_elements(n);
        CHECK(is_homogeneous(Ln[n], n));
        CHECK(is_primitive(Ln[n], CoproductKind::stuffle));
        CHECK(is_primitive(Rn[n], CoproductKind::stuffle));
        CHECK(is_primitive(pi1(letter(n)), CoproductKind::stuffle));
    }
}

TEST_CASE("Pi and Sigma")
{
    CHECK(Pi_basis(Word{2}) == P("[2] - 1/2·[1 1]"));
    CHECK(Pi_basis(Word{1, 1}) == P("[1 1]"));
    CHECK(Sigma_basis(Word{2}) == P("[2]"));
    CHECK(basis_element(Family::PiR, Word{2}) == P("2·[2] - [1 1]"));
    CHECK(basis_element(Family::PiR, Word{2, 1}) == bracket(P("2·[2] - [1 1]"), P("[1]")));
}

TEST_CASE("duality for all four pairs up to weight 5")
{
    const std::pair<Family, Family> pairs[] = {
        {Family::p, Family::s}, {Family::Pi, Family::Sigma}, {Family::PiL, Family::SigmaL}, {Family::PiR, Family::SigmaR}};
    for (const auto& [primal, dual] : pairs)
        for (int n = 1; n <= 5; ++n) {
            const auto words = words_of_weight(n);
            for (const auto& u : words)
                for (const auto& v : words)
                    CHECK(pairing(basis_element(primal, u), basis_element(dual, v)) == (u == v ? 1 : 0));
        }
}

TEST_CASE("explicit s recursion agrees with the duality solve")
{
    const auto& table = shared_basis(Generators::letters);
    for (const auto& w : words_up_to(6))
        if (!w.empty())
            CHECK(s_basis(w) == table.dual(w));
}

TEST_CASE("Lyndon brackets are primitive")
{
    for (const auto& l : lyndon_up_to(5)) {
        CHECK(is_primitive(p_basis(l), CoproductKind::shuffle));
        for (Family f : {Family::Pi, Family::PiL, Family::PiR})
            CHECK(is_primitive(basis_element(f, l), CoproductKind::stuffle));
    }
}

TEST_CASE("y_n over products of R")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(y_in_R_expansion(n));
    CHECK(y_in_R_expansion(1, RExpansionWeight::parts_product));
    CHECK_FALSE(y_in_R_expansion(2, RExpansionWeight::parts_product));
}

TEST_CASE("family names")
{
    for (Family f : {Family::p, Family::s, Family::Pi, Family::Sigma, Family::PiL, Family::SigmaL, Family::PiR,
                     Family::SigmaR})
        CHECK(parse_family(std::string(family_name(f))) == f);
    CHECK_THROWS_AS(parse_family("Q"), std::invalid_argument);
}
