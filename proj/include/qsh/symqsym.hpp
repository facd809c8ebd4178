#pragma once

#include <map>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "qsh/linear.hpp"
#include "qsh/ncpoly.hpp"
#include "qsh/words.hpp"

namespace qsh {

/// Bases of Sym: complete S, elementary Lambda, power sums Psi (first kind)
/// and Phi (second kind), ribbon Schur functions.
enum class SymBasis { S, Lambda, Psi, Phi, Ribbon };
/// Bases of QSym: monomial M and fundamental (quasi-ribbon) F.
enum class QSymBasis { M, F };

SymBasis parse_sym_basis(std::string_view name);
QSymBasis parse_qsym_basis(std::string_view name);
std::string_view basis_name(SymBasis b);
std::string_view basis_name(QSymBasis b);

using CompositionCombination = LinearCombination<Composition, CanonicalLess>;

struct CompositionPairLess {
    bool operator()(const std::pair<Composition, Composition>& a, const std::pair<Composition, Composition>& b) const
    {
        CanonicalLess less;
        if (less(a.first, b.first))
            return true;
        if (less(b.first, a.first))
            return false;
        return less(a.second, b.second);
    }
};

using CompositionTensor = LinearCombination<std::pair<Composition, Composition>, CompositionPairLess>;

/// Composition-indexed combination tagged with the basis it is written in.
/// Arithmetic between elements requires matching bases; convert() first.
template <class Basis>
class BasedElement {
public:
    BasedElement() = default;
    explicit BasedElement(Basis b) : basis_(b) {}
    BasedElement(Basis b, CompositionCombination terms) : basis_(b), terms_(std::move(terms)) {}
    BasedElement(Basis b, const Composition& c, const Rational& coeff = Rational(1)) : basis_(b), terms_(c, coeff) {}

    Basis basis() const { return basis_; }
    const CompositionCombination& terms() const { return terms_; }
    CompositionCombination& terms() { return terms_; }
    Rational coefficient(const Composition& c) const { return terms_.coefficient(c); }
    bool is_zero() const { return terms_.is_zero(); }

    BasedElement& operator+=(const BasedElement& o)
    {
        require_same(o);
        terms_ += o.terms_;
        return *this;
    }
    BasedElement& operator-=(const BasedElement& o)
    {
        require_same(o);
        terms_ -= o.terms_;
        return *this;
    }
    BasedElement& operator*=(const Rational& s)
    {
        terms_ *= s;
        return *this;
    }

    friend BasedElement operator+(BasedElement a, const BasedElement& b) { return a += b; }
    friend BasedElement operator-(BasedElement a, const BasedElement& b) { return a -= b; }
    friend BasedElement operator*(const Rational& s, BasedElement a) { return a *= s; }
    friend bool operator==(const BasedElement& a, const BasedElement& b)
    {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    void require_same(const BasedElement& o) const
    {
        if (o.basis_ != basis_ && !o.terms_.is_zero() && !terms_.is_zero())
            throw std::invalid_argument("arithmetic between elements written in different bases");
    }

    Basis basis_{};
    CompositionCombination terms_;
};

using SymElement = BasedElement<SymBasis>;
using QSymElement = BasedElement<QSymBasis>;

/// Tensor square element, both factors written in the same basis.
template <class Basis>
struct BasedTensor {
    Basis basis{};
    CompositionTensor terms;

    friend bool operator==(const BasedTensor& a, const BasedTensor& b)
    {
        return a.basis == b.basis && a.terms == b.terms;
    }
};

using SymTensor = BasedTensor<SymBasis>;
using QSymTensor = BasedTensor<QSymBasis>;

/// Exact change of basis. Non-S targets are reached through S.
SymElement convert(const SymElement& x, SymBasis target);
QSymElement convert(const QSymElement& x, QSymBasis target);
SymTensor convert(const SymTensor& t, SymBasis target);
QSymTensor convert(const QSymTensor& t, QSymBasis target);

/// Expansion of a single basis element B^I in the S basis, and back.
CompositionCombination expand_in_S(SymBasis from, const Composition& c);
CompositionCombination expand_S_in(SymBasis to, const Composition& c);

/// Concatenation product S^I S^J = S^{IJ}; the result is in the S basis.
SymElement operator*(const SymElement& a, const SymElement& b);

/// M_I * M_J by the quasi-shuffle recursion on compositions.
CompositionCombination quasi_shuffle_M(const Composition& a, const Composition& b);
/// Commutative product of QSym; the result is in the M basis.
QSymElement qsym_product(const QSymElement& a, const QSymElement& b);

/// Delta_star, S_n -> sum_{i=0}^n S_i (x) S_{n-i}, extended multiplicatively.
/// The result is written in the S basis.
SymTensor sym_coproduct(const SymElement& x);
/// Delta_bullet by deconcatenation of compositions; the result is in the M basis.
QSymTensor qsym_coproduct(const QSymElement& x);

/// <S^I | M_J> = delta_{I,J}, extended bilinearly.
Rational pairing_ext(const SymElement& x, const QSymElement& y);
Rational pairing_ext(const SymTensor& x, const QSymTensor& y);

/// Word encodings y_{i_1}...y_{i_k} -> S^{(i_1,...,i_k)} and M_{(i_1,...,i_k)}.
SymElement encode_S(const Polynomial& p);
QSymElement encode_M(const Polynomial& p);
SymElement encode_S(const Word& w);
QSymElement encode_M(const Word& w);
Polynomial decode_S(const SymElement& x);
Polynomial decode_M(const QSymElement& x);

/// Truncated power series in q with rational coefficients: exponents 0..bound-1.
class QSeries {
public:
    explicit QSeries(int bound);

    int bound() const { return static_cast<int>(coeffs_.size()); }
    Rational operator[](int e) const;
    void add(int e, const Rational& c);

    QSeries& operator+=(const QSeries& o);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// M_I on the alphabet {1, q, q^2, ...}: sum over n_1 > ... > n_r >= 0 of
/// q^{n_1 i_1 + ... + n_r i_r}, modulo q^bound.
QSeries specialize_Mq(const Composition& c, int bound);

/// Ordered product sigma(A; q^{D-1}) ... sigma(A; q) sigma(A; 1), each factor
/// sum_i S_i q^{n i}, expanded in S and truncated at weight max_weight and q^bound.
std::map<Composition, QSeries, CanonicalLess> hall_littlewood_expansion(int max_weight, int bound);

/// Compares the expansion above with specialize_Mq for every I of weight <= max_weight.
bool hall_littlewood_check(int max_weight, int bound);

/// sum_{w(I)<=n} M_I (x) S^I in QSym (x) Sym (M on the left, S on the right).
CompositionTensor monomial_complete_diagonal(int n);
/// sum_{w(J)<=n} F_J (x) Rib_J, re-expanded in M (x) S.
CompositionTensor fundamental_ribbon_diagonal(int n);

} // namespace qsh
