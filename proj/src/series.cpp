#include "qsh/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsh/bases.hpp"

namespace qsh {

namespace {

const Polynomial& zero_polynomial()
{
    static const Polynomial z;
    return z;
}

} // namespace

TSeries::TSeries(int bound)
{
    if (bound < 0)
        throw std::invalid_argument("series bound must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(bound) + 1);
}

const Polynomial& TSeries::operator[](int degree) const
{
    if (degree < 0 || degree > bound())
        return zero_polynomial();
    return coeffs_[static_cast<std::size_t>(degree)];
}

void TSeries::set(int degree, Polynomial p)
{
    if (degree < 0)
        throw std::invalid_argument("negative t-degree");
    if (degree <= bound())
        coeffs_[static_cast<std::size_t>(degree)] = std::move(p);
}

void TSeries::add(int degree, const Polynomial& p)
{
    if (degree < 0)
        throw std::invalid_argument("negative t-degree");
    if (degree <= bound())
        coeffs_[static_cast<std::size_t>(degree)] += p;
}

TSeries TSeries::truncated(int b) const
{
    TSeries out(b);
    for (int d = 0; d <= std::min(b, bound()); ++d)
        out.coeffs_[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)];
    return out;
}

TSeries TSeries::derivative() const
{
    if (bound() == 0)
        throw std::domain_error("derivative of a series known only modulo t");
    TSeries out(bound() - 1);
    for (int d = 1; d <= bound(); ++d)
        out.coeffs_[static_cast<std::size_t>(d - 1)] = Rational(d) * coeffs_[static_cast<std::size_t>(d)];
    return out;
}

TSeries& TSeries::operator+=(const TSeries& o)
{
    if (o.bound() < bound())
        coeffs_.resize(o.coeffs_.size());
    for (int d = 0; d <= bound(); ++d)
        coeffs_[static_cast<std::size_t>(d)] += o[d];
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o)
{
    if (o.bound() < bound())
        coeffs_.resize(o.coeffs_.size());
    for (int d = 0; d <= bound(); ++d)
        coeffs_[static_cast<std::size_t>(d)] -= o[d];
    return *this;
}

TSeries& TSeries::operator*=(const Rational& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b)
{
    TSeries out(std::min(a.bound(), b.bound()));
    for (int i = 0; i <= out.bound(); ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= out.bound(); ++j)
            if (!b[j].is_zero())
                out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return out;
}

TSeries constant_series(const Polynomial& p, int bound)
{
    TSeries s(bound);
    s.set(0, p);
    return s;
}

TSeries Y_series(int bound)
{
    TSeries s = constant_series(one(), bound);
    for (int n = 1; n <= bound; ++n)
        s.set(n, monomial(letter(n)));
    return s;
}

TSeries Y_inverse_series(int bound)
{
    const auto x = X_elements(bound);
    TSeries s(bound);
    for (int n = 0; n <= bound; ++n)
        s.set(n, x[static_cast<std::size_t>(n)]);
    return s;
}

TSeries L_series(int bound)
{
    const auto l = L_elements(bound + 1);
    TSeries s(bound);
    for (int n = 1; n <= bound + 1; ++n)
        s.set(n - 1, l[static_cast<std::size_t>(n)]);
    return s;
}

TSeries R_series(int bound)
{
    const auto r = R_elements(bound + 1);
    TSeries s(bound);
    for (int n = 1; n <= bound + 1; ++n)
        s.set(n - 1, r[static_cast<std::size_t>(n)]);
    return s;
}

TSeries Y_derivative(int k, int bound)
{
    if (k < 0)
        throw std::invalid_argument("derivative order must be >= 0");
    TSeries s(bound);
    for (int n = std::max(k, 0); n - k <= bound; ++n) {
        // falling factorial n (n-1) ... (n-k+1)
        Integer f = 1;
        for (int i = 0; i < k; ++i)
            f *= n - i;
        s.set(n - k, Rational(f) * (n == 0 ? one() : monomial(letter(n))));
    }
    return s;
}

TSeries log_series(const TSeries& s)
{
    if (s[0] != one())
        throw std::invalid_argument("log_series needs constant coefficient 1");
    const TSeries x = s - constant_series(one(), s.bound());
    TSeries out(s.bound());
    TSeries xk = constant_series(one(), s.bound());
    for (int k = 1; k <= s.bound(); ++k) {
        xk = xk * x;
        out += Rational(k % 2 == 1 ? 1 : -1, k) * xk;
    }
    return out;
}

TSeries bracket(const TSeries& a, const TSeries& b)
{
    return a * b - b * a;
}

TSeries exp_ad(const TSeries& a, const TSeries& b)
{
    if (!a[0].is_zero())
        throw std::invalid_argument("exp_ad needs a series without constant coefficient");
    const int bound = std::min(a.bound(), b.bound());
    TSeries out = b.truncated(bound);
    TSeries term = b.truncated(bound);
    for (int n = 1; n <= bound; ++n) {
        term = bracket(a, term);
        term *= Rational(1, n);
        out += term;
    }
    return out;
}

HigherSeries higher_series(int k, int bound)
{
    if (k < 1)
        throw std::invalid_argument("higher_series needs k >= 1");
    const int work = bound + k - 1;
    const TSeries l = L_series(work);
    const TSeries r = R_series(work);
    TSeries left = l;
    TSeries right = r;
    for (int j = 2; j <= k; ++j) {
        left = left.derivative() + left * l;
        right = right.derivative() + r * right;
    }
    left = left.truncated(bound);
    right = right.truncated(bound);

    const TSeries y = Y_series(bound);
    const TSeries target = Y_derivative(k, bound);
    if (left * y != target || y * right != target)
        throw std::logic_error("higher_series: Y^(k) = L_k Y = Y R_k fails");
    return {std::move(left), std::move(right)};
}

} // namespace qsh
