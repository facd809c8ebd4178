#pragma once

#include <utility>

#include "qsh/linear.hpp"
#include "qsh/words.hpp"

namespace qsh {

/// Noncommutative polynomial in k<Y>, k = Q.
using Polynomial = LinearCombination<Word, CanonicalLess>;

struct WordPairLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const
    {
        CanonicalLess less;
        if (less(a.first, b.first))
            return true;
        if (less(b.first, a.first))
            return false;
        return less(a.second, b.second);
    }
};

/// Element of k<Y> (x) k<Y>.
using TensorPolynomial = LinearCombination<std::pair<Word, Word>, WordPairLess>;

enum class ProductKind { concat, shuffle, stuffle };
enum class CoproductKind { deconcat, shuffle, stuffle, plus };

Polynomial one();
Polynomial monomial(const Word& w, const Rational& c = Rational(1));

Rational counit(const Polynomial& p);
/// -1 for the zero polynomial.
int max_weight(const Polynomial& p);
/// True when every term has weight exactly n (the zero polynomial qualifies).
bool is_homogeneous(const Polynomial& p, int n);
/// Drops all terms of weight > n.
Polynomial truncate(const Polynomial& p, int n);

Polynomial shuffle(const Word& u, const Word& v);
Polynomial stuffle(const Word& u, const Word& v);

Polynomial product(const Polynomial& p, const Polynomial& q, ProductKind kind);
/// Concatenation product.
Polynomial operator*(const Polynomial& p, const Polynomial& q);
/// Lie bracket [p, q] = pq - qp.
Polynomial bracket(const Polynomial& p, const Polynomial& q);
/// p^k for the given product (p^0 = 1).
Polynomial power(const Polynomial& p, int k, ProductKind kind);

/// Delta_bullet, Delta_shuffle, Delta_stuffle, Delta_plus. Delta_plus is only
/// defined on single letters; it throws std::domain_error on any other word.
TensorPolynomial coproduct(const Polynomial& p, CoproductKind kind);

TensorPolynomial tensor(const Polynomial& a, const Polynomial& b);
/// (a (x) b)(c (x) d) = product(a, c, left) (x) product(b, d, right).
TensorPolynomial multiply(const TensorPolynomial& s, const TensorPolynomial& t, ProductKind left, ProductKind right);

/// True iff Delta(p) = p (x) 1 + 1 (x) p.
bool is_primitive(const Polynomial& p, CoproductKind kind);

/// <P | Q> = sum_w P(w) Q(w).
Rational pairing(const Polynomial& p, const Polynomial& q);
Rational pairing(const TensorPolynomial& s, const TensorPolynomial& t);

/// Concatenation exponential truncated at weight n. Requires e(p) = 0.
Polynomial exp_trunc(const Polynomial& p, int n);
/// Concatenation logarithm truncated at weight n. Requires e(q) = 1.
Polynomial log_trunc(const Polynomial& q, int n);

} // namespace qsh
