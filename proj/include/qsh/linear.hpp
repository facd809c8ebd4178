#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "qsh/rational.hpp"

namespace qsh {

/// Finite formal linear combination sum_k c_k [k] with exact rational
/// coefficients. Zero coefficients are never stored, so two combinations are
/// equal iff their term maps are equal. Iteration follows Less.
template <class Key, class Less>
class LinearCombination {
public:
    using key_type = Key;
    using Terms = std::map<Key, Rational, Less>;

    LinearCombination() = default;
    explicit LinearCombination(const Key& k, const Rational& c = Rational(1)) { add(k, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Rational coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Key& k, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LinearCombination& operator+=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }

    LinearCombination& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
    friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

    /// Keeps only the terms accepted by `keep`.
    template <class Pred>
    LinearCombination filtered(Pred keep) const
    {
        LinearCombination out;
        for (const auto& [k, c] : terms_)
            if (keep(k))
                out.terms_.emplace_hint(out.terms_.end(), k, c);
        return out;
    }

private:
    Terms terms_;
};

} // namespace qsh
