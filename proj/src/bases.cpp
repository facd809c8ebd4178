#include "qsh/bases.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsh/lyndon.hpp"

namespace qsh {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan over Q. The PBW matrices are unitriangular up to a
// permutation, so the first nonzero pivot is taken.
Matrix invert(Matrix a)
{
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::runtime_error("singular PBW transition matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);

        const Rational scale = 1 / a[col][col];
        if (scale != 1) {
            for (std::size_t j = 0; j < n; ++j) {
                a[col][j] *= scale;
                inv[col][j] *= scale;
            }
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            const Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (a[col][j] != 0)
                    a[row][j] -= f * a[col][j];
                if (inv[col][j] != 0)
                    inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Nonempty splittings a (x) b of Delta_stuffle(w), with multiplicity.
std::vector<std::pair<std::pair<Word, Word>, Rational>> proper_stuffle_splits(const Word& w)
{
    std::vector<std::pair<std::pair<Word, Word>, Rational>> out;
    for (const auto& [ab, c] : coproduct(monomial(w), CoproductKind::stuffle))
        if (!ab.first.empty() && !ab.second.empty())
            out.emplace_back(ab, c);
    return out;
}

// k-fold convolution power (f_+)^{*k}(w) = sum <w | u_1 * ... * u_k> f(u_1)...f(u_k)
// over nonempty u_i, where f_+ is f on nonempty words and 0 on 1_{Y*}.
class ConvolutionPowers {
public:
    template <class F>
    explicit ConvolutionPowers(F f) : f_(std::move(f))
    {
    }

    const Polynomial& operator()(int k, const Word& w)
    {
        auto key = std::make_pair(k, w);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Polynomial value;
        if (k == 0) {
            if (w.empty())
                value = one();
        } else if (!w.empty() && k <= w.weight()) {
            if (k == 1) {
                value = f_(w);
            } else {
                for (const auto& [ab, c] : splits(w))
                    value += c * ((*this)(k - 1, ab.first) * f_(ab.second));
            }
        }
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

private:
    const std::vector<std::pair<std::pair<Word, Word>, Rational>>& splits(const Word& w)
    {
        auto it = splits_.find(w);
        if (it == splits_.end())
            it = splits_.emplace(w, proper_stuffle_splits(w)).first;
        return it->second;
    }

    struct KeyLess {
        bool operator()(const std::pair<int, Word>& a, const std::pair<int, Word>& b) const
        {
            if (a.first != b.first)
                return a.first < b.first;
            return CanonicalLess{}(a.second, b.second);
        }
    };

    std::function<Polynomial(const Word&)> f_;
    std::map<std::pair<int, Word>, Polynomial, KeyLess> memo_;
    std::map<Word, std::vector<std::pair<std::pair<Word, Word>, Rational>>, CanonicalLess> splits_;
};

Polynomial primitive_generator(Generators g, int n)
{
    switch (g) {
    case Generators::letters:
        return monomial(letter(n));
    case Generators::pi1:
        return pi1(letter(n));
    case Generators::L:
        return L_elements(n)[static_cast<std::size_t>(n)];
    case Generators::R:
        return R_elements(n)[static_cast<std::size_t>(n)];
    }
    throw std::logic_error("unknown generator alphabet");
}

} // namespace

Polynomial pi1(const Word& w)
{
    if (w.empty())
        return Polynomial{};
    ConvolutionPowers powers([](const Word& u) { return monomial(u); });
    Polynomial out;
    for (int k = 1; k <= w.weight(); ++k) {
        const Polynomial& term = powers(k, w);
        out += Rational(k % 2 == 1 ? 1 : -1, k) * term;
    }
    return out;
}

Polynomial pi1(const Polynomial& p)
{
    Polynomial out;
    for (const auto& [w, c] : p)
        out += c * pi1(w);
    return out;
}

bool pi1_inverse_check(const Word& w)
{
    ConvolutionPowers powers([](const Word& u) { return pi1(u); });
    Polynomial rhs;
    for (int k = 0; k <= w.weight(); ++k) {
        Rational inv_fact(1);
        inv_fact /= Rational(factorial(static_cast<unsigned>(k)));
        rhs += inv_fact * powers(k, w);
    }
    return rhs == monomial(w);
}

std::vector<Polynomial> X_elements(int n)
{
    std::vector<Polynomial> x(static_cast<std::size_t>(std::max(n, 0)) + 1);
    x[0] = one();
    for (int m = 1; m <= n; ++m) {
        Polynomial acc;
        for (int i = 1; i <= m; ++i)
            acc -= monomial(letter(i)) * x[static_cast<std::size_t>(m - i)];
        x[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return x;
}

std::vector<Polynomial> L_elements(int n)
{
    const auto x = X_elements(n);
    std::vector<Polynomial> l(static_cast<std::size_t>(std::max(n, 0)) + 1);
    for (int m = 1; m <= n; ++m) {
        Polynomial acc;
        for (int i = 0; i < m; ++i)
            acc += Rational(i + 1) * (monomial(letter(i + 1)) * x[static_cast<std::size_t>(m - 1 - i)]);
        l[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return l;
}

std::vector<Polynomial> R_elements(int n)
{
    const auto x = X_elements(n);
    std::vector<Polynomial> r(static_cast<std::size_t>(std::max(n, 0)) + 1);
    for (int m = 1; m <= n; ++m) {
        Polynomial acc;
        for (int i = 0; i < m; ++i)
            acc += Rational(i + 1) * (x[static_cast<std::size_t>(m - 1 - i)] * monomial(letter(i + 1)));
        r[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return r;
}

bool y_in_R_expansion(int n, RExpansionWeight weighting)
{
    if (n < 1)
        throw std::invalid_argument("y_in_R_expansion needs n >= 1");
    const auto r = R_elements(n);
    Polynomial sum;
    for (const auto& j : compositions_of(n)) {
        Polynomial rj = one();
        for (int part : j)
            rj = rj * r[static_cast<std::size_t>(part)];
        const std::int64_t denom = weighting == RExpansionWeight::partial_sum_product ? partial_sum_product(j)
                                                                                     : parts_product(j);
        sum += make_rational(1, denom) * rj;
    }
    return sum == monomial(letter(n));
}

Polynomial PbwBasis::generator(int n) const
{
    if (n < 1)
        throw std::invalid_argument("letter index must be >= 1");
    std::lock_guard lock(mutex_);
    auto it = generator_cache_.find(n);
    if (it == generator_cache_.end())
        it = generator_cache_.emplace(n, primitive_generator(generators_, n)).first;
    return it->second;
}

Polynomial PbwBasis::primal_lyndon(const Word& l) const
{
    if (l.length() == 1)
        return generator(l[0]);
    std::lock_guard lock(mutex_);
    if (auto it = lyndon_cache_.find(l); it != lyndon_cache_.end())
        return it->second;
    auto [s, r] = standard_factorization(l);
    Polynomial value = bracket(primal_lyndon(s), primal_lyndon(r));
    return lyndon_cache_.emplace(l, std::move(value)).first->second;
}

Polynomial PbwBasis::primal(const Word& w) const
{
    if (w.empty())
        return one();
    Polynomial out = one();
    for (const auto& f : lyndon_factorization(w)) {
        const Polynomial pl = primal_lyndon(f.word);
        for (int i = 0; i < f.multiplicity; ++i)
            out = out * pl;
    }
    return out;
}

const std::map<Word, Polynomial, CanonicalLess>& PbwBasis::dual_component(int n) const
{
    std::lock_guard lock(mutex_);
    if (auto it = dual_cache_.find(n); it != dual_cache_.end())
        return it->second;

    const auto words = words_of_weight(n);
    const std::size_t m = words.size();
    Matrix a(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const Polynomial pu = primal(words[i]);
        if (!is_homogeneous(pu, n))
            throw std::logic_error("PBW element is not weight-homogeneous");
        for (std::size_t j = 0; j < m; ++j)
            a[i][j] = pu.coefficient(words[j]);
    }
    const Matrix inv = invert(std::move(a));

    std::map<Word, Polynomial, CanonicalLess> component;
    for (std::size_t v = 0; v < m; ++v) {
        Polynomial dual;
        for (std::size_t x = 0; x < m; ++x)
            dual.add(words[x], inv[x][v]);
        component.emplace(words[v], std::move(dual));
    }
    return dual_cache_.emplace(n, std::move(component)).first->second;
}

Polynomial PbwBasis::dual(const Word& w) const
{
    return dual_component(w.weight()).at(w);
}

Polynomial s_basis(const Word& w)
{
    if (w.empty())
        return one();
    if (w.length() == 1)
        return monomial(w);
    const auto factors = lyndon_factorization(w);
    if (factors.size() == 1 && factors.front().multiplicity == 1)
        return monomial(letter(w[0])) * s_basis(w.suffix(1));

    Polynomial out = one();
    Integer denom = 1;
    for (const auto& f : factors) {
        const Polynomial sl = s_basis(f.word);
        for (int i = 0; i < f.multiplicity; ++i)
            out = product(out, sl, ProductKind::shuffle);
        denom *= factorial(static_cast<unsigned>(f.multiplicity));
    }
    Rational scale(1);
    scale /= Rational(denom);
    return scale * out;
}

const PbwBasis& shared_basis(Generators g)
{
    static const PbwBasis letters(Generators::letters);
    static const PbwBasis pi(Generators::pi1);
    static const PbwBasis l(Generators::L);
    static const PbwBasis r(Generators::R);
    switch (g) {
    case Generators::letters:
        return letters;
    case Generators::pi1:
        return pi;
    case Generators::L:
        return l;
    case Generators::R:
        return r;
    }
    throw std::logic_error("unknown generator alphabet");
}

Polynomial p_basis(const Word& w)
{
    return shared_basis(Generators::letters).primal(w);
}

Polynomial Pi_basis(const Word& w)
{
    return shared_basis(Generators::pi1).primal(w);
}

Polynomial Sigma_basis(const Word& w)
{
    return shared_basis(Generators::pi1).dual(w);
}

Family parse_family(std::string_view name)
{
    static const std::pair<std::string_view, Family> table[] = {
        {"p", Family::p},       {"s", Family::s},           {"Pi", Family::Pi},   {"Sigma", Family::Sigma},
        {"PiL", Family::PiL},   {"SigmaL", Family::SigmaL}, {"PiR", Family::PiR}, {"SigmaR", Family::SigmaR},
    };
    for (const auto& [n, f] : table)
        if (n == name)
            return f;
    throw std::invalid_argument("unknown basis family '" + std::string(name) + "'");
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::p:
        return "p";
    case Family::s:
        return "s";
    case Family::Pi:
        return "Pi";
    case Family::Sigma:
        return "Sigma";
    case Family::PiL:
        return "PiL";
    case Family::SigmaL:
        return "SigmaL";
    case Family::PiR:
        return "PiR";
    case Family::SigmaR:
        return "SigmaR";
    }
    return "?";
}

Polynomial basis_element(Family f, const Word& w)
{
    switch (f) {
    case Family::p:
        return p_basis(w);
    case Family::s:
        return s_basis(w);
    case Family::Pi:
        return Pi_basis(w);
    case Family::Sigma:
        return Sigma_basis(w);
    case Family::PiL:
        return shared_basis(Generators::L).primal(w);
    case Family::SigmaL:
        return shared_basis(Generators::L).dual(w);
    case Family::PiR:
        return shared_basis(Generators::R).primal(w);
    case Family::SigmaR:
        return shared_basis(Generators::R).dual(w);
    }
    throw std::logic_error("unknown basis family");
}

} // namespace qsh
