#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace qsh {

/// A word over the alphabet Y = {y_1, y_2, ...}. The letter y_n is stored as
/// its index n >= 1 and carries weight n. The empty word is the unit 1_{Y*}.
///
/// Letters are totally ordered by y_1 > y_2 > y_3 > ..., so a smaller index
/// is a greater letter. See word_less().
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    Word(std::initializer_list<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int weight() const { return weight_; }
    int operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word prefix(std::size_t n) const;
    Word suffix(std::size_t from) const;
    Word reversed() const;

    friend Word operator+(const Word& u, const Word& v);
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
    int weight_ = 0;
};

/// Single-letter word y_n.
Word letter(int n);

/// Word power u^k under concatenation.
Word power(const Word& u, int k);

/// Lexicographic order induced by y_1 > y_2 > ...; a proper prefix precedes
/// its extensions. This is the order used by all Lyndon machinery.
bool word_less(const Word& u, const Word& v);

/// A finite sequence of positive integers (i_1, ..., i_k).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return weight_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    Composition mirror() const;

    friend Composition operator+(const Composition& a, const Composition& b);
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Composition to_composition(const Word& w);
Word to_word(const Composition& c);

/// Storage order shared by every sparse container: weight first, then
/// lexicographic on the raw indices. Serialization follows this order.
struct CanonicalLess {
    bool operator()(const Word& u, const Word& v) const;
    bool operator()(const Composition& a, const Composition& b) const;
};

struct CompositionStats {
    std::int64_t length = 0;
    std::int64_t weight = 0;
    std::optional<std::int64_t> last_part; // absent for the empty composition
    std::int64_t parts_product = 1;        // pi
    std::int64_t partial_sum_product = 1;  // pi_u = i1 (i1+i2) ... (i1+...+ik)
    std::int64_t sp = 1;                   // pi * l!
    Composition mirror;
};

CompositionStats stats(const Composition& c);

std::int64_t parts_product(const Composition& c);
std::int64_t partial_sum_product(const Composition& c);
std::int64_t sp(const Composition& c);
/// Throws std::domain_error on the empty composition.
std::int64_t last_part(const Composition& c);

/// J together with its block decomposition J = (J_1, ..., J_k), w(J_p) = i_p.
struct Refinement {
    Composition finer;
    std::vector<Composition> blocks;
};

/// Every J finer than or equal to I, ordered by (length, lexicographic).
std::vector<Refinement> refinements(const Composition& c);

/// Every J coarser than or equal to I, ordered by (length, lexicographic).
std::vector<Composition> coarsenings(const Composition& c);

/// Block decomposition of `finer` relative to `coarse`, or nullopt when
/// `finer` does not refine `coarse`.
std::optional<std::vector<Composition>> block_decomposition(const Composition& finer, const Composition& coarse);

bool is_finer_or_equal(const Composition& finer, const Composition& coarse);

struct RelativeStats {
    std::int64_t length = 1;
    std::int64_t last_part = 1;
    std::int64_t partial_sum_product = 1;
    std::int64_t sp = 1;
};

/// l(J,I), lp(J,I), pi_u(J,I), sp(J,I). Throws std::invalid_argument when J
/// does not refine I.
RelativeStats relative_stats(const Composition& finer, const Composition& coarse);

/// All compositions of n in canonical order; 2^(n-1) of them for n >= 1.
std::vector<Composition> compositions_of(int n);

/// All words of weight exactly n in canonical order.
std::vector<Word> words_of_weight(int n);

/// All words of weight <= n in canonical order (including the empty word).
std::vector<Word> words_up_to(int n);

} // namespace qsh
