#include "qsh/symqsym.hpp"

#include <string>

namespace qsh {

namespace {

int sign(std::int64_t exponent)
{
    return exponent % 2 == 0 ? 1 : -1;
}

Composition single(int n)
{
    return Composition({n});
}

CompositionCombination apply_linear(const CompositionCombination& x,
                                    CompositionCombination (*expand)(SymBasis, const Composition&), SymBasis b)
{
    CompositionCombination out;
    for (const auto& [c, coeff] : x) {
        CompositionCombination e = expand(b, c);
        e *= coeff;
        out += e;
    }
    return out;
}

CompositionCombination sym_to_S(const SymElement& x)
{
    if (x.basis() == SymBasis::S)
        return x.terms();
    return apply_linear(x.terms(), expand_in_S, x.basis());
}

CompositionCombination S_to_sym(const CompositionCombination& x, SymBasis target)
{
    if (target == SymBasis::S)
        return x;
    return apply_linear(x, expand_S_in, target);
}

// F_J = sum_{I finer than J} M_I
CompositionCombination F_in_M(const Composition& j)
{
    CompositionCombination out;
    for (const auto& r : refinements(j))
        out.add(r.finer, 1);
    return out;
}

// M_I = sum_{J finer than I} (-1)^{l(J)-l(I)} F_J
CompositionCombination M_in_F(const Composition& i)
{
    CompositionCombination out;
    for (const auto& r : refinements(i))
        out.add(r.finer, sign(static_cast<std::int64_t>(r.finer.length() - i.length())));
    return out;
}

CompositionCombination qsym_to_M(const QSymElement& x)
{
    if (x.basis() == QSymBasis::M)
        return x.terms();
    CompositionCombination out;
    for (const auto& [c, coeff] : x.terms()) {
        CompositionCombination e = F_in_M(c);
        e *= coeff;
        out += e;
    }
    return out;
}

CompositionTensor tensor_of(const CompositionCombination& a, const CompositionCombination& b)
{
    CompositionTensor out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            out.add({i, j}, x * y);
    return out;
}

CompositionTensor concat_tensors(const CompositionTensor& s, const CompositionTensor& t)
{
    CompositionTensor out;
    for (const auto& [ab, x] : s)
        for (const auto& [cd, y] : t)
            out.add({ab.first + cd.first, ab.second + cd.second}, x * y);
    return out;
}

} // namespace

SymBasis parse_sym_basis(std::string_view name)
{
    if (name == "S")
        return SymBasis::S;
    if (name == "Lambda")
        return SymBasis::Lambda;
    if (name == "Psi")
        return SymBasis::Psi;
    if (name == "Phi")
        return SymBasis::Phi;
    if (name == "Rib" || name == "Ribbon")
        return SymBasis::Ribbon;
    throw std::invalid_argument("unknown Sym basis '" + std::string(name) + "'");
}

QSymBasis parse_qsym_basis(std::string_view name)
{
    if (name == "M")
        return QSymBasis::M;
    if (name == "F")
        return QSymBasis::F;
    throw std::invalid_argument("unknown QSym basis '" + std::string(name) + "'");
}

std::string_view basis_name(SymBasis b)
{
    switch (b) {
    case SymBasis::S:
        return "S";
    case SymBasis::Lambda:
        return "Lambda";
    case SymBasis::Psi:
        return "Psi";
    case SymBasis::Phi:
        return "Phi";
    case SymBasis::Ribbon:
        return "Rib";
    }
    return "?";
}

std::string_view basis_name(QSymBasis b)
{
    return b == QSymBasis::M ? "M" : "F";
}

CompositionCombination expand_in_S(SymBasis from, const Composition& c)
{
    CompositionCombination out;
    const auto l_i = static_cast<std::int64_t>(c.length());
    switch (from) {
    case SymBasis::S:
        out.add(c, 1);
        break;
    case SymBasis::Lambda:
        // Lambda^I = sum_{J >= I} (-1)^{l(J)-w(I)} S^J
        for (const auto& r : refinements(c))
            out.add(r.finer, sign(static_cast<std::int64_t>(r.finer.length()) - c.weight()));
        break;
    case SymBasis::Psi:
        // Psi^I = sum_{J >= I} (-1)^{l(J)-l(I)} lp(J,I) S^J
        for (const auto& r : refinements(c)) {
            const auto rel = relative_stats(r.finer, c);
            out.add(r.finer, make_rational(sign(static_cast<std::int64_t>(r.finer.length()) - l_i) * rel.last_part));
        }
        break;
    case SymBasis::Phi:
        // Phi^I = sum_{J >= I} (-1)^{l(J)-l(I)} pi(I)/l(J,I) S^J
        for (const auto& r : refinements(c)) {
            const auto rel = relative_stats(r.finer, c);
            out.add(r.finer, make_rational(sign(static_cast<std::int64_t>(r.finer.length()) - l_i) * parts_product(c),
                                           rel.length));
        }
        break;
    case SymBasis::Ribbon:
        // Rib_I = sum_{J coarser than or equal to I} (-1)^{l(I)-l(J)} S^J
        for (const auto& j : coarsenings(c))
            out.add(j, sign(l_i - static_cast<std::int64_t>(j.length())));
        break;
    }
    return out;
}

CompositionCombination expand_S_in(SymBasis to, const Composition& c)
{
    CompositionCombination out;
    switch (to) {
    case SymBasis::S:
        out.add(c, 1);
        break;
    case SymBasis::Lambda:
        // S^I = sum_{J >= I} (-1)^{l(J)-w(I)} Lambda^J
        for (const auto& r : refinements(c))
            out.add(r.finer, sign(static_cast<std::int64_t>(r.finer.length()) - c.weight()));
        break;
    case SymBasis::Psi:
        // S^I = sum_{J >= I} Psi^J / pi_u(J,I)
        for (const auto& r : refinements(c))
            out.add(r.finer, make_rational(1, relative_stats(r.finer, c).partial_sum_product));
        break;
    case SymBasis::Phi:
        // S^I = sum_{J >= I} Phi^J / sp(J,I)
        for (const auto& r : refinements(c))
            out.add(r.finer, make_rational(1, relative_stats(r.finer, c).sp));
        break;
    case SymBasis::Ribbon:
        // S^I = sum_{J coarser than or equal to I} Rib_J
        for (const auto& j : coarsenings(c))
            out.add(j, 1);
        break;
    }
    return out;
}

SymElement convert(const SymElement& x, SymBasis target)
{
    if (x.basis() == target)
        return x;
    return SymElement(target, S_to_sym(sym_to_S(x), target));
}

QSymElement convert(const QSymElement& x, QSymBasis target)
{
    if (x.basis() == target)
        return x;
    if (target == QSymBasis::M)
        return QSymElement(QSymBasis::M, qsym_to_M(x));
    CompositionCombination out;
    for (const auto& [c, coeff] : x.terms()) {
        CompositionCombination e = M_in_F(c);
        e *= coeff;
        out += e;
    }
    return QSymElement(QSymBasis::F, std::move(out));
}

SymTensor convert(const SymTensor& t, SymBasis target)
{
    if (t.basis == target)
        return t;
    SymTensor out{target, {}};
    for (const auto& [ab, coeff] : t.terms) {
        auto left = convert(SymElement(t.basis, ab.first), target);
        auto right = convert(SymElement(t.basis, ab.second), target);
        CompositionTensor piece = tensor_of(left.terms(), right.terms());
        piece *= coeff;
        out.terms += piece;
    }
    return out;
}

QSymTensor convert(const QSymTensor& t, QSymBasis target)
{
    if (t.basis == target)
        return t;
    QSymTensor out{target, {}};
    for (const auto& [ab, coeff] : t.terms) {
        auto left = convert(QSymElement(t.basis, ab.first), target);
        auto right = convert(QSymElement(t.basis, ab.second), target);
        CompositionTensor piece = tensor_of(left.terms(), right.terms());
        piece *= coeff;
        out.terms += piece;
    }
    return out;
}

SymElement operator*(const SymElement& a, const SymElement& b)
{
    const auto sa = sym_to_S(a);
    const auto sb = sym_to_S(b);
    CompositionCombination out;
    for (const auto& [i, x] : sa)
        for (const auto& [j, y] : sb)
            out.add(i + j, x * y);
    return SymElement(SymBasis::S, std::move(out));
}

CompositionCombination quasi_shuffle_M(const Composition& a, const Composition& b)
{
    // table[i][j] = M_{a[i:]} * M_{b[j:]}
    const std::size_t m = a.length();
    const std::size_t n = b.length();
    auto tail = [](const Composition& c, std::size_t from) {
        return Composition(std::vector<int>(c.parts().begin() + static_cast<std::ptrdiff_t>(from), c.parts().end()));
    };
    auto prepend = [](int head, const CompositionCombination& x) {
        CompositionCombination out;
        for (const auto& [c, coeff] : x)
            out.add(single(head) + c, coeff);
        return out;
    };

    std::vector<std::vector<CompositionCombination>> table(m + 1, std::vector<CompositionCombination>(n + 1));
    for (std::size_t i = 0; i <= m; ++i)
        table[i][n] = CompositionCombination(tail(a, i));
    for (std::size_t j = 0; j <= n; ++j)
        table[m][j] = CompositionCombination(tail(b, j));
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = n; j-- > 0;) {
            CompositionCombination cell = prepend(a[i], table[i + 1][j]);
            cell += prepend(b[j], table[i][j + 1]);
            cell += prepend(a[i] + b[j], table[i + 1][j + 1]);
            table[i][j] = std::move(cell);
        }
    }
    return table[0][0];
}

QSymElement qsym_product(const QSymElement& a, const QSymElement& b)
{
    const auto ma = qsym_to_M(a);
    const auto mb = qsym_to_M(b);
    CompositionCombination out;
    for (const auto& [i, x] : ma) {
        for (const auto& [j, y] : mb) {
            CompositionCombination p = quasi_shuffle_M(i, j);
            p *= x * y;
            out += p;
        }
    }
    return QSymElement(QSymBasis::M, std::move(out));
}

SymTensor sym_coproduct(const SymElement& x)
{
    SymTensor out{SymBasis::S, {}};
    for (const auto& [c, coeff] : sym_to_S(x)) {
        CompositionTensor t;
        t.add({Composition{}, Composition{}}, 1);
        for (int n : c) {
            CompositionTensor delta;
            for (int i = 0; i <= n; ++i) {
                Composition left = i == 0 ? Composition{} : single(i);
                Composition right = i == n ? Composition{} : single(n - i);
                delta.add({left, right}, 1);
            }
            t = concat_tensors(t, delta);
        }
        t *= coeff;
        out.terms += t;
    }
    return out;
}

QSymTensor qsym_coproduct(const QSymElement& x)
{
    QSymTensor out{QSymBasis::M, {}};
    for (const auto& [c, coeff] : qsym_to_M(x)) {
        const auto& parts = c.parts();
        for (std::size_t k = 0; k <= parts.size(); ++k) {
            Composition left(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(k)));
            Composition right(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(k), parts.end()));
            out.terms.add({left, right}, coeff);
        }
    }
    return out;
}

Rational pairing_ext(const SymElement& x, const QSymElement& y)
{
    const auto s = sym_to_S(x);
    const auto m = qsym_to_M(y);
    Rational r = 0;
    for (const auto& [c, coeff] : s)
        r += coeff * m.coefficient(c);
    return r;
}

Rational pairing_ext(const SymTensor& x, const QSymTensor& y)
{
    const auto s = convert(x, SymBasis::S);
    const auto m = convert(y, QSymBasis::M);
    Rational r = 0;
    for (const auto& [k, coeff] : s.terms)
        r += coeff * m.terms.coefficient(k);
    return r;
}

SymElement encode_S(const Polynomial& p)
{
    CompositionCombination out;
    for (const auto& [w, c] : p)
        out.add(to_composition(w), c);
    return SymElement(SymBasis::S, std::move(out));
}

QSymElement encode_M(const Polynomial& p)
{
    CompositionCombination out;
    for (const auto& [w, c] : p)
        out.add(to_composition(w), c);
    return QSymElement(QSymBasis::M, std::move(out));
}

SymElement encode_S(const Word& w)
{
    return SymElement(SymBasis::S, to_composition(w));
}

QSymElement encode_M(const Word& w)
{
    return QSymElement(QSymBasis::M, to_composition(w));
}

Polynomial decode_S(const SymElement& x)
{
    Polynomial out;
    for (const auto& [c, coeff] : sym_to_S(x))
        out.add(to_word(c), coeff);
    return out;
}

Polynomial decode_M(const QSymElement& x)
{
    Polynomial out;
    for (const auto& [c, coeff] : qsym_to_M(x))
        out.add(to_word(c), coeff);
    return out;
}

QSeries::QSeries(int bound)
{
    if (bound < 1)
        throw std::invalid_argument("q-series bound must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(bound), Rational(0));
}

Rational QSeries::operator[](int e) const
{
    if (e < 0 || e >= bound())
        return 0;
    return coeffs_[static_cast<std::size_t>(e)];
}

void QSeries::add(int e, const Rational& c)
{
    if (e < 0)
        throw std::invalid_argument("negative q-exponent");
    if (e < bound())
        coeffs_[static_cast<std::size_t>(e)] += c;
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    if (o.bound() < bound())
        coeffs_.resize(o.coeffs_.size());
    for (int e = 0; e < bound(); ++e)
        coeffs_[static_cast<std::size_t>(e)] += o[e];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries out(std::min(a.bound(), b.bound()));
    for (int i = 0; i < out.bound(); ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j < out.bound(); ++j)
            if (b[j] != 0)
                out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return out;
}

namespace {

// Chooses n_p for p = last .. 0 with n_p > n_{p+1}; `lower` is n_{p+1} + 1.
void enumerate_exponents(const Composition& c, int p, int lower, int exponent, QSeries& out)
{
    if (p < 0) {
        out.add(exponent, 1);
        return;
    }
    const int part = c[static_cast<std::size_t>(p)];
    for (int n = lower; exponent + n * part < out.bound(); ++n)
        enumerate_exponents(c, p - 1, n + 1, exponent + n * part, out);
}

} // namespace

QSeries specialize_Mq(const Composition& c, int bound)
{
    QSeries out(bound);
    enumerate_exponents(c, static_cast<int>(c.length()) - 1, 0, 0, out);
    return out;
}

std::map<Composition, QSeries, CanonicalLess> hall_littlewood_expansion(int max_weight, int bound)
{
    using Expansion = std::map<Composition, QSeries, CanonicalLess>;
    Expansion result;
    {
        QSeries unit(bound);
        unit.add(0, 1);
        result.emplace(Composition{}, unit);
    }
    // Factor n contributes S_i q^{n i}; factors with n >= bound only add q^{>= bound}.
    for (int n = bound - 1; n >= 0; --n) {
        Expansion next;
        for (const auto& [c, series] : result) {
            for (int i = 0; c.weight() + i <= max_weight; ++i) {
                if (n * i >= bound)
                    break;
                QSeries factor(bound);
                factor.add(n * i, 1);
                Composition key = i == 0 ? c : c + single(i);
                auto it = next.try_emplace(key, QSeries(bound)).first;
                it->second += series * factor;
            }
        }
        result = std::move(next);
    }
    return result;
}

bool hall_littlewood_check(int max_weight, int bound)
{
    const auto expansion = hall_littlewood_expansion(max_weight, bound);
    for (int n = 0; n <= max_weight; ++n) {
        for (const auto& c : compositions_of(n)) {
            auto it = expansion.find(c);
            const QSeries lhs = it == expansion.end() ? QSeries(bound) : it->second;
            if (!(lhs == specialize_Mq(c, bound)))
                return false;
        }
    }
    return true;
}

CompositionTensor monomial_complete_diagonal(int n)
{
    CompositionTensor out;
    for (int k = 0; k <= n; ++k)
        for (const auto& c : compositions_of(k))
            out.add({c, c}, 1);
    return out;
}

CompositionTensor fundamental_ribbon_diagonal(int n)
{
    CompositionTensor out;
    for (int k = 0; k <= n; ++k)
        for (const auto& j : compositions_of(k))
            out += tensor_of(F_in_M(j), expand_in_S(SymBasis::Ribbon, j));
    return out;
}

} // namespace qsh
