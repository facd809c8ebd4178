#pragma once

#include <vector>

#include "qsh/ncpoly.hpp"

namespace qsh {

/// Power series in a commuting variable t with coefficients in k<Y>, known
/// modulo t^{bound+1}. Products concatenate coefficients.
class TSeries {
public:
    explicit TSeries(int bound);

    int bound() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& operator[](int degree) const;
    void set(int degree, Polynomial p);
    void add(int degree, const Polynomial& p);

    TSeries truncated(int bound) const;
    TSeries derivative() const;

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    TSeries& operator*=(const Rational& s);

    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(const Rational& s, TSeries a) { return a *= s; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    friend bool operator==(const TSeries& a, const TSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Polynomial> coeffs_;
};

TSeries constant_series(const Polynomial& p, int bound);

/// Y(t) = 1 + sum_{n>=1} y_n t^n.
TSeries Y_series(int bound);
/// Y(t)^{-1} = 1 + sum X_n t^n.
TSeries Y_inverse_series(int bound);
/// L(t) = sum_{n>=1} L_n t^{n-1}; R(t) likewise.
TSeries L_series(int bound);
TSeries R_series(int bound);
/// k-th derivative of Y(t): sum_{n>=k} n(n-1)...(n-k+1) y_n t^{n-k}.
TSeries Y_derivative(int k, int bound);

/// log(S) for a series with constant coefficient 1.
TSeries log_series(const TSeries& s);

/// [a, b] = ab - ba.
TSeries bracket(const TSeries& a, const TSeries& b);

/// exp(ad_a)(b) = sum_n ad_a^n(b) / n!; a must have zero constant coefficient.
TSeries exp_ad(const TSeries& a, const TSeries& b);

struct HigherSeries {
    TSeries left;  // L_k (calligraphic), Y^{(k)} = left * Y
    TSeries right; // R_k (calligraphic), Y^{(k)} = Y * right
};

/// L_1 = L, L_k = dL_{k-1}/dt + L_{k-1} L;  R_1 = R, R_k = dR_{k-1}/dt + R R_{k-1}.
/// Both are returned modulo t^{bound+1}. The defining identities are checked
/// before returning; std::logic_error is thrown if they fail.
HigherSeries higher_series(int k, int bound);

} // namespace qsh
