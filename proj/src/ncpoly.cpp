#include "qsh/ncpoly.hpp"

#include <stdexcept>
#include <vector>

namespace qsh {

namespace {

Polynomial prepend(int letter_index, const Polynomial& p)
{
    Polynomial out;
    Word head = letter(letter_index);
    for (const auto& [w, c] : p)
        out.add(head + w, c);
    return out;
}

// table[i][j] = product of the suffixes u[i:] and v[j:]
template <bool WithContraction>
Polynomial quasi_shuffle(const Word& u, const Word& v)
{
    const std::size_t m = u.length();
    const std::size_t n = v.length();
    std::vector<std::vector<Polynomial>> table(m + 1, std::vector<Polynomial>(n + 1));
    for (std::size_t i = 0; i <= m; ++i)
        table[i][n] = monomial(u.suffix(i));
    for (std::size_t j = 0; j <= n; ++j)
        table[m][j] = monomial(v.suffix(j));
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = n; j-- > 0;) {
            Polynomial cell = prepend(u[i], table[i + 1][j]);
            cell += prepend(v[j], table[i][j + 1]);
            if constexpr (WithContraction)
                cell += prepend(u[i] + v[j], table[i + 1][j + 1]);
            table[i][j] = std::move(cell);
        }
    }
    return table[0][0];
}

TensorPolynomial letter_coproduct(int n, CoproductKind kind)
{
    TensorPolynomial t;
    const Word y = letter(n);
    if (kind == CoproductKind::shuffle || kind == CoproductKind::stuffle) {
        t.add({y, Word{}}, 1);
        t.add({Word{}, y}, 1);
    }
    if (kind == CoproductKind::stuffle || kind == CoproductKind::plus) {
        for (int i = 1; i < n; ++i)
            t.add({letter(i), letter(n - i)}, 1);
    }
    return t;
}

TensorPolynomial word_coproduct(const Word& w, CoproductKind kind)
{
    TensorPolynomial t;
    switch (kind) {
    case CoproductKind::deconcat:
        for (std::size_t k = 0; k <= w.length(); ++k)
            t.add({w.prefix(k), w.suffix(k)}, 1);
        return t;
    case CoproductKind::plus:
        if (w.length() != 1)
            throw std::domain_error("Delta_plus is defined on letters only; it is not a morphism for concatenation");
        return letter_coproduct(w[0], kind);
    case CoproductKind::shuffle:
    case CoproductKind::stuffle:
        t.add({Word{}, Word{}}, 1);
        for (int a : w)
            t = multiply(t, letter_coproduct(a, kind), ProductKind::concat, ProductKind::concat);
        return t;
    }
    throw std::logic_error("unknown coproduct kind");
}

} // namespace

Polynomial one()
{
    return monomial(Word{});
}

Polynomial monomial(const Word& w, const Rational& c)
{
    return Polynomial(w, c);
}

Rational counit(const Polynomial& p)
{
    return p.coefficient(Word{});
}

int max_weight(const Polynomial& p)
{
    int m = -1;
    for (const auto& [w, c] : p)
        m = std::max(m, w.weight());
    return m;
}

bool is_homogeneous(const Polynomial& p, int n)
{
    for (const auto& [w, c] : p)
        if (w.weight() != n)
            return false;
    return true;
}

Polynomial truncate(const Polynomial& p, int n)
{
    return p.filtered([n](const Word& w) { return w.weight() <= n; });
}

Polynomial shuffle(const Word& u, const Word& v)
{
    return quasi_shuffle<false>(u, v);
}

Polynomial stuffle(const Word& u, const Word& v)
{
    return quasi_shuffle<true>(u, v);
}

Polynomial product(const Polynomial& p, const Polynomial& q, ProductKind kind)
{
    Polynomial out;
    for (const auto& [u, a] : p) {
        for (const auto& [v, b] : q) {
            const Rational ab = a * b;
            switch (kind) {
            case ProductKind::concat:
                out.add(u + v, ab);
                break;
            case ProductKind::shuffle:
                out += ab * shuffle(u, v);
                break;
            case ProductKind::stuffle:
                out += ab * stuffle(u, v);
                break;
            }
        }
    }
    return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    return product(p, q, ProductKind::concat);
}

Polynomial bracket(const Polynomial& p, const Polynomial& q)
{
    return p * q - q * p;
}

Polynomial power(const Polynomial& p, int k, ProductKind kind)
{
    if (k < 0)
        throw std::invalid_argument("negative power");
    Polynomial out = one();
    for (int i = 0; i < k; ++i)
        out = product(out, p, kind);
    return out;
}

TensorPolynomial coproduct(const Polynomial& p, CoproductKind kind)
{
    TensorPolynomial out;
    for (const auto& [w, c] : p) {
        TensorPolynomial t = word_coproduct(w, kind);
        t *= c;
        out += t;
    }
    return out;
}

TensorPolynomial tensor(const Polynomial& a, const Polynomial& b)
{
    TensorPolynomial out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b)
            out.add({u, v}, x * y);
    return out;
}

TensorPolynomial multiply(const TensorPolynomial& s, const TensorPolynomial& t, ProductKind left, ProductKind right)
{
    TensorPolynomial out;
    for (const auto& [ab, x] : s) {
        for (const auto& [cd, y] : t) {
            Polynomial l = product(monomial(ab.first), monomial(cd.first), left);
            Polynomial r = product(monomial(ab.second), monomial(cd.second), right);
            TensorPolynomial lr = tensor(l, r);
            lr *= x * y;
            out += lr;
        }
    }
    return out;
}

bool is_primitive(const Polynomial& p, CoproductKind kind)
{
    return coproduct(p, kind) == tensor(p, one()) + tensor(one(), p);
}

Rational pairing(const Polynomial& p, const Polynomial& q)
{
    Rational s = 0;
    const Polynomial& small = p.size() <= q.size() ? p : q;
    const Polynomial& large = p.size() <= q.size() ? q : p;
    for (const auto& [w, c] : small)
        s += c * large.coefficient(w);
    return s;
}

Rational pairing(const TensorPolynomial& s, const TensorPolynomial& t)
{
    Rational r = 0;
    for (const auto& [k, c] : s)
        r += c * t.coefficient(k);
    return r;
}

Polynomial exp_trunc(const Polynomial& p, int n)
{
    if (counit(p) != 0)
        throw std::invalid_argument("exp_trunc needs a polynomial without constant term");
    Polynomial out = one();
    Polynomial term = one();
    for (int k = 1; k <= n; ++k) {
        term = truncate(term * p, n);
        term *= Rational(1, k);
        if (term.is_zero())
            break;
        out += term;
    }
    return out;
}

Polynomial log_trunc(const Polynomial& q, int n)
{
    if (counit(q) != 1)
        throw std::invalid_argument("log_trunc needs a polynomial with constant term 1");
    const Polynomial x = q - one();
    Polynomial out;
    Polynomial xk = one();
    for (int k = 1; k <= n; ++k) {
        xk = truncate(xk * x, n);
        if (xk.is_zero())
            break;
        out += Rational(k % 2 == 1 ? 1 : -1, k) * xk;
    }
    return out;
}

} // namespace qsh
