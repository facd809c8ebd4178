#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qsh {

// Exact rationals; mpq_class keeps values canonical after every arithmetic op.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Always "p/q" (denominator included even when it is 1).
std::string to_fraction_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

} // namespace qsh
