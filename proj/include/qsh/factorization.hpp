#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qsh/ncpoly.hpp"

namespace qsh {

/// Product used on the left tensor factor. The right factor always multiplies
/// by concatenation. `quasi_symmetric` multiplies left words as compositions
/// indexing M_I with the QSym product, so a series with this left product is
/// an element of QSym (x) k<Y> (or QSym (x) Sym reading right words as S^I).
enum class LeftProduct { shuffle, stuffle, quasi_symmetric };

/// Element of k<Y> (x) k<Y> truncated so that both sides have weight <= bound.
class GradedTensorSeries {
public:
    GradedTensorSeries(int bound, LeftProduct left);

    static GradedTensorSeries unit(int bound, LeftProduct left);

    int bound() const { return bound_; }
    LeftProduct left_product() const { return left_; }
    const TensorPolynomial& terms() const { return terms_; }

    /// Adds c * (l (x) r) unless either side exceeds the bound.
    void add(const Word& l, const Word& r, const Rational& c);

    GradedTensorSeries& operator+=(const GradedTensorSeries& o);
    GradedTensorSeries& operator*=(const Rational& s);
    friend GradedTensorSeries operator*(const GradedTensorSeries& a, const GradedTensorSeries& b);
    friend bool operator==(const GradedTensorSeries& a, const GradedTensorSeries& b)
    {
        return a.bound_ == b.bound_ && a.left_ == b.left_ && a.terms_ == b.terms_;
    }

private:
    int bound_;
    LeftProduct left_;
    TensorPolynomial terms_;
};

/// Left product of two words as a polynomial.
Polynomial left_multiply(const Word& u, const Word& v, LeftProduct left);

/// sum_{w(w) <= n} w (x) w.
GradedTensorSeries diagonal(int n, LeftProduct side);

/// exp(dual (x) primal) = sum_k dual^k / k! (x) primal^k, truncated.
GradedTensorSeries exp_tensor(const Polynomial& dual, const Polynomial& primal, int bound, LeftProduct left);

/// log of a series whose (1, 1) coefficient is 1 and which has no other
/// term with an empty side.
GradedTensorSeries log_tensor(const GradedTensorSeries& s);

using WordMap = std::function<Polynomial(const Word&)>;

/// prod over Lyndon l with w(l) <= bound, in decreasing order left to right,
/// of exp(dual(l) (x) primal(l)).
GradedTensorSeries ordered_exp_product(int bound, LeftProduct left, const WordMap& dual, const WordMap& primal);

/// The four dual pairs: (s, p), (Sigma, Pi), (Sigma^L, Pi^L), (Sigma^R, Pi^R).
enum class DualPair { shuffle, stuffle, L, R };

DualPair parse_dual_pair(const std::string& name);
std::string dual_pair_name(DualPair p);

/// Left product the pair's dual family lives in.
LeftProduct pair_side(DualPair p);

GradedTensorSeries factorized_product(int n, DualPair pair);

/// Same product with a deliberately wrong primal family: p for the stuffle
/// pairs, Pi for the shuffle pair.
GradedTensorSeries mismatched_product(int n, DualPair pair);

struct Mismatch {
    Word left;
    Word right;
    Rational expected;
    Rational actual;
};

struct FactorizationReport {
    bool ok = true;
    std::size_t mismatch_count = 0;
    std::vector<Mismatch> mismatches; // first 20, in canonical order
};

FactorizationReport compare_series(const GradedTensorSeries& expected, const GradedTensorSeries& actual,
                                   std::size_t limit = 20);

/// diagonal(n) against factorized_product(n, pair), or against
/// mismatched_product(n, pair) when `negative_control` is set.
FactorizationReport verify_factorization(int n, DualPair pair, bool negative_control = false);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Character-series identities in QSym (x) k<Y> and QSym (x) Sym up to weight n:
/// the character property of M, M = prod exp(M(Sigma_l) Pi_l),
/// log M = sum M(w) pi1(w), and sum M_w S_w = prod exp(M_{Sigma_l} S_{Pi_l})
/// for the pi1, L and R families.
std::vector<CheckResult> character_checks(int n);

std::string describe(const FactorizationReport& r);

} // namespace qsh
