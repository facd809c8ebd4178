#include "qsh/factorization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qsh/bases.hpp"
#include "qsh/lyndon.hpp"
#include "qsh/symqsym.hpp"
#include "qsh/text.hpp"

namespace qsh {

GradedTensorSeries::GradedTensorSeries(int bound, LeftProduct left) : bound_(bound), left_(left)
{
    if (bound < 0)
        throw std::invalid_argument("tensor series bound must be >= 0");
}

GradedTensorSeries GradedTensorSeries::unit(int bound, LeftProduct left)
{
    GradedTensorSeries s(bound, left);
    s.add(Word{}, Word{}, 1);
    return s;
}

void GradedTensorSeries::add(const Word& l, const Word& r, const Rational& c)
{
    if (l.weight() > bound_ || r.weight() > bound_)
        return;
    terms_.add({l, r}, c);
}

GradedTensorSeries& GradedTensorSeries::operator+=(const GradedTensorSeries& o)
{
    if (o.left_ != left_)
        throw std::invalid_argument("adding tensor series with different left products");
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, c);
    return *this;
}

GradedTensorSeries& GradedTensorSeries::operator*=(const Rational& s)
{
    terms_ *= s;
    return *this;
}

Polynomial left_multiply(const Word& u, const Word& v, LeftProduct left)
{
    switch (left) {
    case LeftProduct::shuffle:
        return shuffle(u, v);
    case LeftProduct::stuffle:
        return stuffle(u, v);
    case LeftProduct::quasi_symmetric: {
        Polynomial out;
        for (const auto& [c, coeff] : quasi_shuffle_M(to_composition(u), to_composition(v)))
            out.add(to_word(c), coeff);
        return out;
    }
    }
    throw std::logic_error("unknown left product");
}

GradedTensorSeries operator*(const GradedTensorSeries& a, const GradedTensorSeries& b)
{
    if (a.left_ != b.left_)
        throw std::invalid_argument("multiplying tensor series with different left products");
    GradedTensorSeries out(std::min(a.bound_, b.bound_), a.left_);
    for (const auto& [ab, x] : a.terms_) {
        for (const auto& [cd, y] : b.terms_) {
            // All three left products are weight-homogeneous.
            if (ab.first.weight() + cd.first.weight() > out.bound_ || ab.second.weight() + cd.second.weight() > out.bound_)
                continue;
            const Word right = ab.second + cd.second;
            const Rational xy = x * y;
            for (const auto& [l, c] : left_multiply(ab.first, cd.first, a.left_))
                out.terms_.add({l, right}, xy * c);
        }
    }
    return out;
}

GradedTensorSeries diagonal(int n, LeftProduct side)
{
    GradedTensorSeries d(n, side);
    for (const auto& w : words_up_to(n))
        d.add(w, w, 1);
    return d;
}

namespace {

GradedTensorSeries tensor_of(const Polynomial& a, const Polynomial& b, int bound, LeftProduct left)
{
    GradedTensorSeries t(bound, left);
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b)
            t.add(u, v, x * y);
    return t;
}

} // namespace

GradedTensorSeries exp_tensor(const Polynomial& dual, const Polynomial& primal, int bound, LeftProduct left)
{
    if (counit(dual) != 0 || counit(primal) != 0)
        throw std::invalid_argument("exp_tensor needs factors without constant term");
    const GradedTensorSeries x = tensor_of(dual, primal, bound, left);
    GradedTensorSeries out = GradedTensorSeries::unit(bound, left);
    GradedTensorSeries term = GradedTensorSeries::unit(bound, left);
    for (int k = 1; k <= bound; ++k) {
        term = term * x;
        term *= Rational(1, k);
        if (term.terms().is_zero())
            break;
        out += term;
    }
    return out;
}

GradedTensorSeries log_tensor(const GradedTensorSeries& s)
{
    if (s.terms().coefficient({Word{}, Word{}}) != 1)
        throw std::invalid_argument("log_tensor needs constant term 1");
    GradedTensorSeries x(s.bound(), s.left_product());
    for (const auto& [k, c] : s.terms()) {
        if (k.first.empty() && k.second.empty())
            continue;
        if (k.first.empty() || k.second.empty())
            throw std::invalid_argument("log_tensor: a term with exactly one empty side does not converge in the grading");
        x.add(k.first, k.second, c);
    }
    GradedTensorSeries out(s.bound(), s.left_product());
    GradedTensorSeries xk = GradedTensorSeries::unit(s.bound(), s.left_product());
    for (int k = 1; k <= s.bound(); ++k) {
        xk = xk * x;
        GradedTensorSeries term = xk;
        term *= Rational(k % 2 == 1 ? 1 : -1, k);
        out += term;
    }
    return out;
}

GradedTensorSeries ordered_exp_product(int bound, LeftProduct left, const WordMap& dual, const WordMap& primal)
{
    auto lyndon = lyndon_up_to(bound);
    // decreasing order, left to right
    std::sort(lyndon.begin(), lyndon.end(), [](const Word& a, const Word& b) { return word_less(b, a); });
    GradedTensorSeries out = GradedTensorSeries::unit(bound, left);
    for (const auto& l : lyndon)
        out = out * exp_tensor(dual(l), primal(l), bound, left);
    return out;
}

DualPair parse_dual_pair(const std::string& name)
{
    if (name == "shuffle")
        return DualPair::shuffle;
    if (name == "stuffle")
        return DualPair::stuffle;
    if (name == "L")
        return DualPair::L;
    if (name == "R")
        return DualPair::R;
    throw std::invalid_argument("unknown dual pair '" + name + "' (expected shuffle|stuffle|L|R)");
}

std::string dual_pair_name(DualPair p)
{
    switch (p) {
    case DualPair::shuffle:
        return "shuffle";
    case DualPair::stuffle:
        return "stuffle";
    case DualPair::L:
        return "L";
    case DualPair::R:
        return "R";
    }
    return "?";
}

LeftProduct pair_side(DualPair p)
{
    return p == DualPair::shuffle ? LeftProduct::shuffle : LeftProduct::stuffle;
}

namespace {

struct PairFamilies {
    Family dual;
    Family primal;
};

PairFamilies families_of(DualPair p)
{
    switch (p) {
    case DualPair::shuffle:
        return {Family::s, Family::p};
    case DualPair::stuffle:
        return {Family::Sigma, Family::Pi};
    case DualPair::L:
        return {Family::SigmaL, Family::PiL};
    case DualPair::R:
        return {Family::SigmaR, Family::PiR};
    }
    throw std::logic_error("unknown dual pair");
}

WordMap family_map(Family f)
{
    return [f](const Word& w) { return basis_element(f, w); };
}

// (a (x) b)(c (x) d) = (M_a * M_c) (x) S^{bd} in QSym (x) Sym, weights <= n.
CompositionTensor multiply_qsym_sym(const CompositionTensor& s, const CompositionTensor& t, int n)
{
    CompositionTensor out;
    for (const auto& [ab, x] : s) {
        for (const auto& [cd, y] : t) {
            if (ab.first.weight() + cd.first.weight() > n || ab.second.weight() + cd.second.weight() > n)
                continue;
            const SymElement right = SymElement(SymBasis::S, ab.second) * SymElement(SymBasis::S, cd.second);
            const QSymElement left = qsym_product(QSymElement(QSymBasis::M, ab.first), QSymElement(QSymBasis::M, cd.first));
            for (const auto& [i, a] : left.terms())
                for (const auto& [j, b] : right.terms())
                    out.add({i, j}, x * y * a * b);
        }
    }
    return out;
}

// prod over decreasing Lyndon l of exp(M(dual_l) S(primal_l)), truncated at weight n.
CompositionTensor qsym_sym_exp_product(int n, Family dual, Family primal)
{
    auto lyndon = lyndon_up_to(n);
    std::sort(lyndon.begin(), lyndon.end(), [](const Word& a, const Word& b) { return word_less(b, a); });
    CompositionTensor unit;
    unit.add({Composition{}, Composition{}}, 1);
    CompositionTensor out = unit;
    for (const auto& l : lyndon) {
        const QSymElement m = encode_M(basis_element(dual, l));
        const SymElement s = encode_S(basis_element(primal, l));
        CompositionTensor x;
        for (const auto& [i, a] : m.terms())
            for (const auto& [j, b] : s.terms())
                x.add({i, j}, a * b);
        CompositionTensor e = unit;
        CompositionTensor term = unit;
        for (int k = 1; k * l.weight() <= n; ++k) {
            term = multiply_qsym_sym(term, x, n);
            term *= Rational(1, k);
            e += term;
        }
        out = multiply_qsym_sym(out, e, n);
    }
    return out;
}

} // namespace

GradedTensorSeries factorized_product(int n, DualPair pair)
{
    const auto fam = families_of(pair);
    return ordered_exp_product(n, pair_side(pair), family_map(fam.dual), family_map(fam.primal));
}

GradedTensorSeries mismatched_product(int n, DualPair pair)
{
    const auto fam = families_of(pair);
    const Family wrong = pair == DualPair::shuffle ? Family::Pi : Family::p;
    return ordered_exp_product(n, pair_side(pair), family_map(fam.dual), family_map(wrong));
}

FactorizationReport compare_series(const GradedTensorSeries& expected, const GradedTensorSeries& actual,
                                   std::size_t limit)
{
    FactorizationReport r;
    TensorPolynomial diff = actual.terms() - expected.terms();
    for (const auto& [k, c] : diff) {
        ++r.mismatch_count;
        if (r.mismatches.size() < limit)
            r.mismatches.push_back({k.first, k.second, expected.terms().coefficient(k), actual.terms().coefficient(k)});
    }
    r.ok = r.mismatch_count == 0 && expected.bound() == actual.bound() &&
           expected.left_product() == actual.left_product();
    return r;
}

FactorizationReport verify_factorization(int n, DualPair pair, bool negative_control)
{
    const GradedTensorSeries product = negative_control ? mismatched_product(n, pair) : factorized_product(n, pair);
    return compare_series(diagonal(n, pair_side(pair)), product);
}

std::string describe(const FactorizationReport& r)
{
    std::ostringstream os;
    if (r.ok) {
        os << "all coefficients agree";
        return os.str();
    }
    os << r.mismatch_count << " differing coefficient(s)";
    for (const auto& m : r.mismatches)
        os << "\n  [" << format_word(m.left) << "] (x) [" << format_word(m.right) << "]: expected "
           << to_string(m.expected) << ", got " << to_string(m.actual);
    if (r.mismatch_count > r.mismatches.size())
        os << "\n  ... " << (r.mismatch_count - r.mismatches.size()) << " more";
    return os.str();
}

std::vector<CheckResult> character_checks(int n)
{
    std::vector<CheckResult> out;
    const auto words = words_up_to(n);

    {
        // M(u * v) = M(u) * M(v), stuffle on the left, QSym product on the right.
        std::size_t failures = 0;
        std::size_t pairs = 0;
        std::string first;
        for (const auto& u : words) {
            for (const auto& v : words) {
                ++pairs;
                const QSymElement lhs = encode_M(stuffle(u, v));
                const QSymElement rhs = qsym_product(encode_M(u), encode_M(v));
                if (!(lhs == rhs)) {
                    if (failures++ == 0)
                        first = "first failure at u=" + format_word(u) + ", v=" + format_word(v);
                }
            }
        }
        out.push_back({"character: M(u stuffle v) = M(u) * M(v)", failures == 0,
                       failures == 0 ? std::to_string(pairs) + " pairs" : first});
    }

    const GradedTensorSeries m_series = diagonal(n, LeftProduct::quasi_symmetric);

    {
        const auto product = ordered_exp_product(n, LeftProduct::quasi_symmetric, family_map(Family::Sigma),
                                                 family_map(Family::Pi));
        const auto r = compare_series(m_series, product);
        out.push_back({"M = prod exp(M(Sigma_l) Pi_l)", r.ok, describe(r)});
    }

    {
        GradedTensorSeries expected(n, LeftProduct::quasi_symmetric);
        for (const auto& w : words) {
            if (w.empty())
                continue;
            for (const auto& [v, c] : pi1(w))
                expected.add(w, v, c);
        }
        const auto r = compare_series(expected, log_tensor(m_series));
        out.push_back({"log M = sum M(w) pi1(w)", r.ok, describe(r)});
    }

    const std::pair<const char*, std::pair<Family, Family>> closing[] = {
        {"sum M_w S_w = prod exp(M_{Sigma_l} S_{Pi_l})", {Family::Sigma, Family::Pi}},
        {"sum M_w S_w = prod exp(M_{Sigma^L_l} S_{Pi^L_l})", {Family::SigmaL, Family::PiL}},
        {"sum M_w S_w = prod exp(M_{Sigma^R_l} S_{Pi^R_l})", {Family::SigmaR, Family::PiR}},
    };
    const CompositionTensor lhs = monomial_complete_diagonal(n);
    for (const auto& [name, fams] : closing) {
        const CompositionTensor rhs = qsym_sym_exp_product(n, fams.first, fams.second);
        const CompositionTensor diff = rhs - lhs;
        std::string detail = "all coefficients agree";
        if (!diff.is_zero()) {
            const auto& [k, c] = *diff.begin();
            detail = std::to_string(diff.size()) + " differing coefficient(s), first at M" + format_composition(k.first) +
                     " S" + format_composition(k.second);
        }
        out.push_back({name, diff.is_zero(), detail});
    }
    return out;
}

} // namespace qsh
