#include "qsh/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qsh {

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_fraction_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (num.front() == '+')
        num.remove_prefix(1);

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace qsh
