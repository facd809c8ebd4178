#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "qsh/bases.hpp"
#include "qsh/series.hpp"
#include "qsh/text.hpp"

using namespace qsh;

TEST_CASE("Y times its inverse is one")
{
    for (int d = 0; d <= 6; ++d) {
        CHECK(Y_series(d) * Y_inverse_series(d) == constant_series(one(), d));
        CHECK(Y_inverse_series(d) * Y_series(d) == constant_series(one(), d));
    }
}

TEST_CASE("derivative of Y is L Y and Y R")
{
    const int d = 5;
    const TSeries Y = Y_series(d);
    CHECK((L_series(d) * Y).truncated(d - 1) == Y.derivative());
    CHECK((Y * R_series(d)).truncated(d - 1) == Y.derivative());
}

TEST_CASE("n y_n over L and R")
{
    const int n = 6;
    const auto L = L_elements(n);
    const auto R = R_elements(n);
    for (int m = 1; m <= n; ++m) {
        Polynomial viaL, viaR;
        for (int i = 0; i <= m - 1; ++i) {
            const Polynomial y = m - 1 - i == 0 ? one() : monomial(letter(m - 1 - i));
            viaL += L[i + 1] * y;
            viaR += y * R[i + 1];
        }
        CHECK(viaL == Rational(m) * monomial(letter(m)));
        CHECK(viaR == Rational(m) * monomial(letter(m)));
    }
}

TEST_CASE("log Y has pi1(y_n) as coefficients")
{
    const TSeries logY = log_series(Y_series(6));
    CHECK(logY[0].is_zero());
    for (int n = 1; n <= 6; ++n)
        CHECK(logY[n] == pi1(letter(n)));
}

TEST_CASE("higher series")
{
    const int d = 5;
    const auto h1 = higher_series(1, d);
    CHECK(h1.left == L_series(d));
    CHECK(h1.right == R_series(d));
    const TSeries Y = Y_series(d);
    const TSeries logY = log_series(Y);
    for (int k = 1; k <= 3; ++k) {
        const auto h = higher_series(k, d);
        const TSeries dk = Y_derivative(k, d);
        CHECK((h.left * Y).truncated(d - k) == dk.truncated(d - k));
        CHECK((Y * h.right).truncated(d - k) == dk.truncated(d - k));
        CHECK(exp_ad(logY, h.right) == h.left);
        CHECK(exp_ad(Rational(-1) * logY, h.left) == h.right);
    }
}

TEST_CASE("second derivative of Y, low degrees")
{
    const auto h = higher_series(2, 1);
    CHECK((h.left * Y_series(1)).truncated(1) == Y_derivative(2, 1).truncated(1));
    CHECK(Y_derivative(2, 3)[0] == Rational(2) * monomial(letter(2)));
    CHECK(Y_derivative(2, 3)[1] == Rational(6) * monomial(letter(3)));
}

TEST_CASE("series argument checks")
{
    CHECK_THROWS(TSeries(0).derivative());
    CHECK_THROWS(exp_ad(Y_series(2), Y_series(2)));
}
