#include "qsh/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsh {

namespace {

int checked_weight(const std::vector<int>& xs, const char* what)
{
    int total = 0;
    for (int x : xs) {
        if (x < 1)
            throw std::invalid_argument(std::string(what) + " entries must be >= 1, got " + std::to_string(x));
        total += x;
    }
    return total;
}

bool canonical_less(const std::vector<int>& a, int wa, const std::vector<int>& b, int wb)
{
    if (wa != wb)
        return wa < wb;
    return a < b;
}

void compositions_rec(int n, std::vector<int>& prefix, std::vector<Composition>& out)
{
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        prefix.push_back(first);
        compositions_rec(n - first, prefix, out);
        prefix.pop_back();
    }
}

bool length_then_lex(const Composition& a, const Composition& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    return a.parts() < b.parts();
}

} // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)), weight_(checked_weight(letters_, "word"))
{
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters))
{
}

Word Word::prefix(std::size_t n) const
{
    return Word(std::vector<int>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, length()))));
}

Word Word::suffix(std::size_t from) const
{
    return Word(std::vector<int>(letters_.begin() + static_cast<std::ptrdiff_t>(std::min(from, length())), letters_.end()));
}

Word Word::reversed() const
{
    return Word(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

Word operator+(const Word& u, const Word& v)
{
    Word w;
    w.letters_ = u.letters_;
    w.letters_.insert(w.letters_.end(), v.letters_.begin(), v.letters_.end());
    w.weight_ = u.weight_ + v.weight_;
    return w;
}

Word letter(int n)
{
    return Word({n});
}

Word power(const Word& u, int k)
{
    Word w;
    for (int i = 0; i < k; ++i)
        w = w + u;
    return w;
}

bool word_less(const Word& u, const Word& v)
{
    std::size_t n = std::min(u.length(), v.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] != v[i])
            return u[i] > v[i]; // larger index = smaller letter
    }
    return u.length() < v.length();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), weight_(checked_weight(parts_, "composition"))
{
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts))
{
}

Composition Composition::mirror() const
{
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition operator+(const Composition& a, const Composition& b)
{
    std::vector<int> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return Composition(std::move(parts));
}

Composition to_composition(const Word& w)
{
    return Composition(w.letters());
}

Word to_word(const Composition& c)
{
    return Word(c.parts());
}

bool CanonicalLess::operator()(const Word& u, const Word& v) const
{
    return canonical_less(u.letters(), u.weight(), v.letters(), v.weight());
}

bool CanonicalLess::operator()(const Composition& a, const Composition& b) const
{
    return canonical_less(a.parts(), a.weight(), b.parts(), b.weight());
}

std::int64_t parts_product(const Composition& c)
{
    std::int64_t p = 1;
    for (int x : c)
        p *= x;
    return p;
}

std::int64_t partial_sum_product(const Composition& c)
{
    std::int64_t p = 1;
    std::int64_t partial = 0;
    for (int x : c) {
        partial += x;
        p *= partial;
    }
    return p;
}

std::int64_t sp(const Composition& c)
{
    std::int64_t f = 1;
    for (std::size_t k = 2; k <= c.length(); ++k)
        f *= static_cast<std::int64_t>(k);
    return parts_product(c) * f;
}

std::int64_t last_part(const Composition& c)
{
    if (c.empty())
        throw std::domain_error("last part of the empty composition is undefined");
    return c.parts().back();
}

CompositionStats stats(const Composition& c)
{
    CompositionStats s;
    s.length = static_cast<std::int64_t>(c.length());
    s.weight = c.weight();
    if (!c.empty())
        s.last_part = c.parts().back();
    s.parts_product = parts_product(c);
    s.partial_sum_product = partial_sum_product(c);
    s.sp = sp(c);
    s.mirror = c.mirror();
    return s;
}

std::vector<Composition> compositions_of(int n)
{
    std::vector<Composition> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    compositions_rec(n, prefix, out);
    return out;
}

std::vector<Word> words_of_weight(int n)
{
    std::vector<Word> out;
    for (const auto& c : compositions_of(n))
        out.push_back(to_word(c));
    return out;
}

std::vector<Word> words_up_to(int n)
{
    std::vector<Word> out;
    for (int k = 0; k <= n; ++k) {
        auto ws = words_of_weight(k);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

std::vector<Refinement> refinements(const Composition& c)
{
    std::vector<Refinement> out{Refinement{}};
    for (int part : c) {
        auto pieces = compositions_of(part);
        std::vector<Refinement> next;
        next.reserve(out.size() * pieces.size());
        for (const auto& r : out) {
            for (const auto& piece : pieces) {
                Refinement e = r;
                e.finer = e.finer + piece;
                e.blocks.push_back(piece);
                next.push_back(std::move(e));
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Refinement& a, const Refinement& b) {
        return length_then_lex(a.finer, b.finer);
    });
    return out;
}

std::vector<Composition> coarsenings(const Composition& c)
{
    std::vector<Composition> out;
    if (c.empty()) {
        out.emplace_back();
        return out;
    }
    // Each of the k-1 gaps between consecutive parts is either kept or merged.
    std::size_t gaps = c.length() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
        std::vector<int> parts{c[0]};
        for (std::size_t g = 0; g < gaps; ++g) {
            if (mask & (std::uint64_t{1} << g))
                parts.back() += c[g + 1];
            else
                parts.push_back(c[g + 1]);
        }
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), length_then_lex);
    return out;
}

std::optional<std::vector<Composition>> block_decomposition(const Composition& finer, const Composition& coarse)
{
    if (finer.weight() != coarse.weight())
        return std::nullopt;
    std::vector<Composition> blocks;
    std::size_t j = 0;
    for (int target : coarse) {
        std::vector<int> block;
        int sum = 0;
        while (sum < target && j < finer.length()) {
            sum += finer[j];
            block.push_back(finer[j]);
            ++j;
        }
        if (sum != target)
            return std::nullopt;
        blocks.emplace_back(std::move(block));
    }
    if (j != finer.length())
        return std::nullopt;
    return blocks;
}

bool is_finer_or_equal(const Composition& finer, const Composition& coarse)
{
    return block_decomposition(finer, coarse).has_value();
}

RelativeStats relative_stats(const Composition& finer, const Composition& coarse)
{
    auto blocks = block_decomposition(finer, coarse);
    if (!blocks)
        throw std::invalid_argument("relative statistics need J finer than or equal to I");
    RelativeStats r;
    for (const auto& b : *blocks) {
        r.length *= static_cast<std::int64_t>(b.length());
        r.last_part *= last_part(b);
        r.partial_sum_product *= partial_sum_product(b);
        r.sp *= sp(b);
    }
    return r;
}

} // namespace qsh
