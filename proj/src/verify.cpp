#include "qsh/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qsh/bases.hpp"
#include "qsh/lyndon.hpp"
#include "qsh/series.hpp"
#include "qsh/symqsym.hpp"
#include "qsh/text.hpp"

namespace qsh {

namespace {

// Counts cases and keeps the first failure message.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++cases_;
        if (!ok && failures_++ == 0)
            first_ = what();
    }
    CheckResult result(std::string name) const
    {
        if (failures_ == 0)
            return {std::move(name), true, std::to_string(cases_) + " cases"};
        return {std::move(name), false,
                std::to_string(failures_) + "/" + std::to_string(cases_) + " failed; first: " + first_};
    }

private:
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

using Check = std::function<CheckResult()>;

using Triple = std::tuple<Word, Word, Word>;

struct TripleLess {
    bool operator()(const Triple& a, const Triple& b) const
    {
        CanonicalLess less;
        if (less(std::get<0>(a), std::get<0>(b)) || less(std::get<0>(b), std::get<0>(a)))
            return less(std::get<0>(a), std::get<0>(b));
        if (less(std::get<1>(a), std::get<1>(b)) || less(std::get<1>(b), std::get<1>(a)))
            return less(std::get<1>(a), std::get<1>(b));
        return less(std::get<2>(a), std::get<2>(b));
    }
};

std::int64_t ipow2(int e) { return std::int64_t{1} << e; }

Polynomial letter_poly(int n) { return monomial(letter(n)); }

SymElement S_of(const CompositionCombination& c) { return SymElement(SymBasis::S, c); }

std::vector<std::tuple<Word, Word, Word>> random_triples(const std::vector<Word>& pool, std::uint64_t seed,
                                                         int count)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<std::tuple<Word, Word, Word>> out;
    for (int i = 0; i < count; ++i)
        out.emplace_back(pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]);
    return out;
}

// --- words -----------------------------------------------------------------

CheckResult words_counts(int n)
{
    Tally t;
    for (int k = 1; k <= n; ++k) {
        t.expect(static_cast<std::int64_t>(compositions_of(k).size()) == ipow2(k - 1),
                 [k] { return "compositions of " + std::to_string(k); });
        for (const auto& c : compositions_of(k)) {
            std::int64_t expected = 1;
            for (int part : c)
                expected *= ipow2(part - 1);
            t.expect(static_cast<std::int64_t>(refinements(c).size()) == expected,
                     [&] { return "refinements of " + format_composition(c); });
            t.expect(static_cast<std::int64_t>(coarsenings(c).size()) == ipow2(static_cast<int>(c.length()) - 1),
                     [&] { return "coarsenings of " + format_composition(c); });
        }
    }
    return t.result("words: composition, refinement and coarsening counts");
}

CheckResult words_mirror(int n)
{
    Tally t;
    for (int k = 0; k <= n; ++k)
        for (const auto& c : compositions_of(k)) {
            t.expect(c.mirror().mirror() == c, [&] { return format_composition(c); });
            t.expect(to_composition(to_word(c)) == c, [&] { return format_composition(c); });
            for (const auto& r : refinements(c))
                t.expect(is_finer_or_equal(r.finer, c) && is_finer_or_equal(r.finer.mirror(), c.mirror()),
                         [&] { return format_composition(r.finer) + " vs " + format_composition(c); });
        }
    return t.result("words: mirror involution and refinement compatibility");
}

// --- ncpoly ----------------------------------------------------------------

CheckResult product_laws(int n, std::uint64_t seed, ProductKind kind, const char* name)
{
    Tally t;
    const auto words = words_up_to(n);
    for (const auto& u : words)
        for (const auto& v : words)
            if (u.weight() + v.weight() <= n)
                t.expect(product(monomial(u), monomial(v), kind) == product(monomial(v), monomial(u), kind),
                         [&] { return "commutativity at " + format_word(u) + " | " + format_word(v); });
    for (const auto& [a, b, c] : random_triples(words_up_to(std::min(n, 4)), seed, 48)) {
        const Polynomial pa = monomial(a), pb = monomial(b), pc = monomial(c);
        t.expect(product(product(pa, pb, kind), pc, kind) == product(pa, product(pb, pc, kind), kind),
                 [&] { return "associativity at " + format_word(a) + " | " + format_word(b) + " | " + format_word(c); });
    }
    return t.result(std::string("ncpoly: ") + name + " commutative and associative");
}

CheckResult adjunction(int n, CoproductKind co, ProductKind pr, const char* name)
{
    Tally t;
    const auto words = words_up_to(n);
    for (const auto& w : words) {
        const TensorPolynomial d = coproduct(monomial(w), co);
        for (const auto& u : words)
            for (const auto& v : words) {
                if (u.weight() + v.weight() != w.weight())
                    continue;
                t.expect(pairing(d, tensor(monomial(u), monomial(v))) ==
                             pairing(monomial(w), product(monomial(u), monomial(v), pr)),
                         [&] { return format_word(w) + " against " + format_word(u) + " (x) " + format_word(v); });
            }
    }
    return t.result(std::string("ncpoly: adjunction ") + name);
}

CheckResult coalgebra_laws(int n)
{
    Tally t;
    const CoproductKind kinds[] = {CoproductKind::deconcat, CoproductKind::shuffle, CoproductKind::stuffle};
    for (const auto& w : words_up_to(n)) {
        for (CoproductKind k : kinds) {
            const TensorPolynomial d = coproduct(monomial(w), k);
            // (eps (x) id) D = id = (id (x) eps) D
            Polynomial left, right;
            for (const auto& [key, c] : d) {
                if (key.first.empty())
                    left.add(key.second, c);
                if (key.second.empty())
                    right.add(key.first, c);
            }
            t.expect(left == monomial(w) && right == monomial(w), [&] { return "counit at " + format_word(w); });
            // (D (x) id) D = (id (x) D) D, compared as three-fold tensors.
            LinearCombination<Triple, TripleLess> lhs, rhs;
            for (const auto& [key, c] : d) {
                for (const auto& [k2, c2] : coproduct(monomial(key.first), k))
                    lhs.add({k2.first, k2.second, key.second}, c * c2);
                for (const auto& [k2, c2] : coproduct(monomial(key.second), k))
                    rhs.add({key.first, k2.first, k2.second}, c * c2);
            }
            t.expect(lhs == rhs, [&] { return "coassociativity at " + format_word(w); });
        }
    }
    return t.result("ncpoly: counit and coassociativity");
}

CheckResult bialgebra_laws(int n)
{
    // Delta_shuffle and Delta_stuffle are concatenation morphisms; deconcatenation
    // is a morphism for both commutative products.
    Tally t;
    const auto words = words_up_to(n);
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.weight() + v.weight() > n)
                continue;
            const Polynomial pu = monomial(u), pv = monomial(v);
            for (CoproductKind k : {CoproductKind::shuffle, CoproductKind::stuffle})
                t.expect(coproduct(pu * pv, k) ==
                             multiply(coproduct(pu, k), coproduct(pv, k), ProductKind::concat, ProductKind::concat),
                         [&] { return "concat morphism at " + format_word(u) + " | " + format_word(v); });
            for (ProductKind p : {ProductKind::shuffle, ProductKind::stuffle})
                t.expect(coproduct(product(pu, pv, p), CoproductKind::deconcat) ==
                             multiply(coproduct(pu, CoproductKind::deconcat), coproduct(pv, CoproductKind::deconcat),
                                      p, p),
                         [&] { return "deconcat morphism at " + format_word(u) + " | " + format_word(v); });
        }
    return t.result("ncpoly: bialgebra compatibility");
}

CheckResult exp_log_inverse(int n)
{
    Tally t;
    for (int k = 1; k <= n; ++k)
        for (const auto& w : words_of_weight(k)) {
            const Polynomial x = monomial(w, make_rational(1, k)) + letter_poly(1);
            t.expect(log_trunc(exp_trunc(x, n), n) == truncate(x, n), [&] { return "log exp at " + format_word(w); });
        }
    return t.result("ncpoly: log(exp x) = x (truncated)");
}

// --- lyndon ----------------------------------------------------------------

std::int64_t mobius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            result = -result;
        }
    return n > 1 ? -result : result;
}

CheckResult lyndon_counts(int n)
{
    Tally t;
    for (int k = 1; k <= n; ++k) {
        std::int64_t sum = 0;
        for (int d = 1; d <= k; ++d)
            if (k % d == 0)
                sum += mobius(k / d) * (ipow2(d) - 1);
        const auto expected = sum / k;
        const auto count = static_cast<std::int64_t>(lyndon_of_weight(k).size());
        t.expect(count == expected, [&] {
            return "weight " + std::to_string(k) + ": " + std::to_string(count) + " vs " + std::to_string(expected);
        });
    }
    return t.result("lyndon: counts match the necklace formula");
}

CheckResult lyndon_factorizations(int n)
{
    Tally t;
    for (const auto& w : words_up_to(n)) {
        if (w.empty())
            continue;
        const auto f = lyndon_factorization(w);
        Word rebuilt;
        bool ok = true;
        for (std::size_t i = 0; i < f.size(); ++i) {
            ok = ok && is_lyndon(f[i].word) && f[i].multiplicity >= 1;
            if (i > 0)
                ok = ok && word_less(f[i].word, f[i - 1].word);
            rebuilt = rebuilt + power(f[i].word, f[i].multiplicity);
        }
        t.expect(ok && rebuilt == w, [&] { return "factorization of " + format_word(w); });
        if (is_lyndon(w) && w.length() >= 2) {
            const auto [s, r] = standard_factorization(w);
            t.expect(is_lyndon(s) && is_lyndon(r) && word_less(s, r) && s + r == w,
                     [&] { return "standard factorization of " + format_word(w); });
        }
    }
    return t.result("lyndon: factorizations reconstruct the word");
}

// --- bases -----------------------------------------------------------------

CheckResult duality(int n, Family primal, Family dual)
{
    Tally t;
    for (int k = 1; k <= n; ++k) {
        const auto words = words_of_weight(k);
        for (const auto& u : words) {
            const Polynomial pu = basis_element(primal, u);
            for (const auto& v : words)
                t.expect(pairing(pu, basis_element(dual, v)) == (u == v ? 1 : 0), [&] {
                    return "<" + std::string(family_name(primal)) + "_" + format_word(u) + ", " +
                           std::string(family_name(dual)) + "_" + format_word(v) + ">";
                });
        }
    }
    return t.result("bases: <" + std::string(family_name(primal)) + ", " + std::string(family_name(dual)) +
                    "> is the identity per weight");
}

CheckResult s_recursion(int n)
{
    Tally t;
    const PbwBasis& table = shared_basis(Generators::letters);
    for (const auto& w : words_up_to(n))
        if (!w.empty())
            t.expect(s_basis(w) == table.dual(w), [&] { return format_word(w); });
    return t.result("bases: explicit s recursion equals the duality solve");
}

CheckResult primitives(int n)
{
    Tally t;
    const auto L = L_elements(n);
    const auto R = R_elements(n);
    for (int k = 1; k <= n; ++k) {
        t.expect(is_primitive(pi1(letter(k)), CoproductKind::stuffle), [k] { return "pi1(y_" + std::to_string(k) + ")"; });
        t.expect(is_primitive(L[k], CoproductKind::stuffle), [k] { return "L_" + std::to_string(k); });
        t.expect(is_primitive(R[k], CoproductKind::stuffle), [k] { return "R_" + std::to_string(k); });
    }
    for (const auto& l : lyndon_up_to(n)) {
        t.expect(is_primitive(basis_element(Family::p, l), CoproductKind::shuffle),
                 [&] { return "p_" + format_word(l); });
        for (Family f : {Family::Pi, Family::PiL, Family::PiR})
            t.expect(is_primitive(basis_element(f, l), CoproductKind::stuffle),
                     [&] { return std::string(family_name(f)) + "_" + format_word(l); });
    }
    return t.result("bases: generators and Lyndon brackets are primitive");
}

CheckResult triangularity(int n)
{
    Tally t;
    for (const auto& w : words_up_to(n))
        for (Family f : {Family::p, Family::Pi}) {
            const Polynomial x = basis_element(f, w);
            t.expect(x.coefficient(w) == 1 && is_homogeneous(x, w.weight()),
                     [&] { return std::string(family_name(f)) + "_" + format_word(w); });
        }
    return t.result("bases: p_w and Pi_w are homogeneous with leading word w");
}

CheckResult pi1_projection(int n)
{
    Tally t;
    for (const auto& w : words_up_to(n)) {
        if (w.empty())
            continue;
        const Polynomial p = pi1(w);
        t.expect(pi1(p) == p, [&] { return "idempotence at " + format_word(w); });
        t.expect(pi1_inverse_check(w), [&] { return "exponential inverse at " + format_word(w); });
    }
    return t.result("bases: pi1 is an idempotent with exponential inverse");
}

CheckResult y_in_R(int n)
{
    Tally t;
    for (int k = 1; k <= n; ++k)
        t.expect(y_in_R_expansion(k), [k] { return "n = " + std::to_string(k); });
    return t.result("bases: y_n = sum R^J / pi_u(J)");
}

// --- series ----------------------------------------------------------------

CheckResult series_identities(int n)
{
    Tally t;
    const TSeries Y = Y_series(n);
    const TSeries one_series = constant_series(one(), n);
    t.expect(Y * Y_inverse_series(n) == one_series && Y_inverse_series(n) * Y == one_series,
             [] { return "Y Y^-1 = 1"; });

    const auto L = L_elements(n);
    const auto R = R_elements(n);
    for (int m = 1; m <= n; ++m) {
        Polynomial viaL, viaR;
        for (int i = 0; i <= m - 1; ++i) {
            const Polynomial y = (m - 1 - i == 0) ? one() : letter_poly(m - 1 - i);
            viaL += L[i + 1] * y;
            viaR += y * R[i + 1];
        }
        const Polynomial lhs = Rational(m) * letter_poly(m);
        t.expect(viaL == lhs, [m] { return "n y_n via L at n = " + std::to_string(m); });
        t.expect(viaR == lhs, [m] { return "n y_n via R at n = " + std::to_string(m); });
    }

    const TSeries logY = log_series(Y);
    for (int k = 1; k <= 3; ++k) {
        HigherSeries h{TSeries(n), TSeries(n)};
        try {
            h = higher_series(k, n);
        } catch (const std::logic_error& e) {
            t.expect(false, [&] { return std::string(e.what()); });
            continue;
        }
        const TSeries dk = Y_derivative(k, n);
        t.expect((h.left * Y).truncated(n - k) == dk.truncated(n - k),
                 [k] { return "L_k Y = Y^(k) at k = " + std::to_string(k); });
        t.expect((Y * h.right).truncated(n - k) == dk.truncated(n - k),
                 [k] { return "Y R_k = Y^(k) at k = " + std::to_string(k); });
        t.expect(exp_ad(logY, h.right) == h.left, [k] { return "exp(ad log Y) R_k = L_k at k = " + std::to_string(k); });
    }
    return t.result("series: Y inverse, n y_n expansions, higher L_k and R_k");
}

CheckResult series_structure(int n)
{
    Tally t;
    auto y = [](int k) { return k == 0 ? one() : letter_poly(k); };
    for (int m = 1; m <= n; ++m) {
        TensorPolynomial expected;
        for (int s = 0; s <= m; ++s)
            expected += tensor(y(s), y(m - s));
        t.expect(coproduct(y(m), CoproductKind::stuffle) == expected,
                 [m] { return "Y group-like at degree " + std::to_string(m); });
    }
    const TSeries logY = log_series(Y_series(n));
    for (int m = 1; m <= n; ++m)
        t.expect(logY[m] == pi1(letter(m)), [m] { return "log Y at degree " + std::to_string(m); });
    const auto X = X_elements(n);
    for (int m = 1; m <= n; ++m) {
        Polynomial left, right;
        for (int i = 0; i <= m; ++i) {
            left += y(i) * X[m - i];
            right += X[i] * y(m - i);
        }
        t.expect(left.is_zero() && right.is_zero(), [m] { return "X relations at n = " + std::to_string(m); });
    }
    return t.result("series: Y group-like, log Y = sum pi1(y_n) t^n, X relations");
}

// --- symqsym ---------------------------------------------------------------

CheckResult sym_round_trips(int n)
{
    Tally t;
    for (int k = 0; k <= n; ++k)
        for (const auto& c : compositions_of(k))
            for (SymBasis b : {SymBasis::Lambda, SymBasis::Psi, SymBasis::Phi, SymBasis::Ribbon}) {
                const SymElement s(SymBasis::S, c);
                const SymElement x(b, c);
                t.expect(convert(convert(s, b), SymBasis::S) == s && convert(convert(x, SymBasis::S), b) == x,
                         [&] { return std::string(basis_name(b)) + " at " + format_composition(c); });
            }
    for (int k = 0; k <= n; ++k)
        for (const auto& c : compositions_of(k)) {
            const QSymElement m(QSymBasis::M, c);
            t.expect(convert(convert(m, QSymBasis::F), QSymBasis::M) == m, [&] { return "F at " + format_composition(c); });
        }
    return t.result("symqsym: basis changes are inverse to each other");
}

CheckResult sym_spot_values()
{
    Tally t;
    const SymElement S11(SymBasis::S, Composition{1, 1});
    const SymElement S2(SymBasis::S, Composition{2});
    t.expect(convert(SymElement(SymBasis::Psi, Composition{2}), SymBasis::S) == Rational(2) * S2 - S11,
             [] { return "Psi_2 = 2 S_2 - S_1 S_1"; });
    t.expect(convert(SymElement(SymBasis::Lambda, Composition{2}), SymBasis::S) == S11 - S2,
             [] { return "Lambda_2 = S_1 S_1 - S_2"; });
    const SymElement phi = make_rational(1, 2) * SymElement(SymBasis::Phi, Composition{2}) +
                           make_rational(1, 2) * SymElement(SymBasis::Phi, Composition{1, 1});
    t.expect(convert(phi, SymBasis::S) == S2, [] { return "S_2 = Phi_2/2 + Phi_1 Phi_1/2"; });
    return t.result("symqsym: weight-two spot values");
}

CheckResult sym_word_images(int n)
{
    Tally t;
    const auto R = R_elements(n);
    for (int k = 1; k <= n; ++k)
        for (const auto& c : compositions_of(k)) {
            Polynomial r = one(), p = one();
            for (int part : c) {
                r = r * R[part];
                p = p * pi1(letter(part));
            }
            t.expect(encode_S(r) == convert(SymElement(SymBasis::Psi, c), SymBasis::S),
                     [&] { return "S(R_w) = Psi at " + format_composition(c); });
            const SymElement phi = make_rational(1, parts_product(c)) * SymElement(SymBasis::Phi, c);
            t.expect(encode_S(p) == convert(phi, SymBasis::S),
                     [&] { return "S(pi1 product) = Phi/pi at " + format_composition(c); });
        }
    return t.result("symqsym: R words map to Psi, pi1 words to Phi/pi");
}

CheckResult sym_primitives(int n)
{
    Tally t;
    for (int k = 1; k <= n; ++k)
        for (SymBasis b : {SymBasis::Psi, SymBasis::Phi}) {
            const CompositionCombination x = expand_in_S(b, Composition{k});
            CompositionTensor expected;
            for (const auto& [c, coeff] : x) {
                expected.add({c, Composition{}}, coeff);
                expected.add({Composition{}, c}, coeff);
            }
            t.expect(sym_coproduct(S_of(x)).terms == expected,
                     [&] { return std::string(basis_name(b)) + "_" + std::to_string(k); });
        }
    return t.result("symqsym: Psi_n and Phi_n are primitive");
}

CheckResult sym_adjunction(int n)
{
    Tally t;
    for (int k = 0; k <= n; ++k)
        for (const auto& K : compositions_of(k)) {
            const SymTensor d = sym_coproduct(SymElement(SymBasis::S, K));
            for (int i = 0; i <= k; ++i)
                for (const auto& I : compositions_of(i))
                    for (const auto& J : compositions_of(k - i)) {
                        QSymTensor mm{QSymBasis::M, CompositionTensor({I, J})};
                        t.expect(pairing_ext(d, mm) ==
                                     pairing_ext(SymElement(SymBasis::S, K),
                                                 qsym_product(QSymElement(QSymBasis::M, I), QSymElement(QSymBasis::M, J))),
                                 [&] {
                                     return "S" + format_composition(K) + " against M" + format_composition(I) + " (x) M" +
                                            format_composition(J);
                                 });
                    }
        }
    return t.result("symqsym: <Delta S^K, M_I (x) M_J> = <S^K, M_I M_J>");
}

CheckResult qsym_coalgebra(int n)
{
    Tally t;
    for (int k = 0; k <= n; ++k)
        for (const auto& I : compositions_of(k)) {
            // Deconcatenation of M dualizes concatenation of S.
            const QSymTensor d = qsym_coproduct(QSymElement(QSymBasis::M, I));
            for (int i = 0; i <= k; ++i)
                for (const auto& A : compositions_of(i))
                    for (const auto& B : compositions_of(k - i)) {
                        SymTensor ss{SymBasis::S, CompositionTensor({A, B})};
                        t.expect(pairing_ext(ss, d) == pairing_ext(SymElement(SymBasis::S, A) * SymElement(SymBasis::S, B),
                                                                   QSymElement(QSymBasis::M, I)),
                                 [&] { return "M" + format_composition(I); });
                    }
        }
    return t.result("symqsym: <S^A S^B, M_I> = <S^A (x) S^B, Delta M_I>");
}

CheckResult cauchy(int n)
{
    Tally t;
    t.expect(monomial_complete_diagonal(n) == fundamental_ribbon_diagonal(n), [] { return "tensors differ"; });
    return t.result("symqsym: sum M_I (x) S^I = sum F_J (x) Rib_J");
}

CheckResult hall_littlewood(int n, int q_degree)
{
    Tally t;
    for (int k = 1; k <= n; ++k)
        t.expect(hall_littlewood_check(k, q_degree), [k] { return "weight " + std::to_string(k); });
    return t.result("symqsym: ordered sigma product matches M_I(1, q, q^2, ...) mod q^" + std::to_string(q_degree));
}

// --- factorization ---------------------------------------------------------

CheckResult factorization(int n, DualPair pair)
{
    const auto r = verify_factorization(n, pair);
    return {"factorization: " + dual_pair_name(pair) + " pair", r.ok, describe(r)};
}

} // namespace

std::vector<CheckResult> run_verify(const VerifyConfig& cfg)
{
    const int n = cfg.max_weight;
    if (n < 1)
        throw std::invalid_argument("max_weight must be >= 1");
    if (cfg.q_degree < 1)
        throw std::invalid_argument("q_degree must be >= 1");
    const int sym_n = std::min(n, 6);
    const int char_n = std::min(n, 4);

    std::vector<Check> checks = {
        [=] { return words_counts(n); },
        [=] { return words_mirror(n); },
        [=] { return product_laws(n, cfg.seed, ProductKind::shuffle, "shuffle"); },
        [=] { return product_laws(n, cfg.seed + 1, ProductKind::stuffle, "stuffle"); },
        [=] { return adjunction(n, CoproductKind::shuffle, ProductKind::shuffle, "shuffle"); },
        [=] { return adjunction(n, CoproductKind::stuffle, ProductKind::stuffle, "stuffle"); },
        [=] { return adjunction(n, CoproductKind::deconcat, ProductKind::concat, "concatenation"); },
        [=] { return coalgebra_laws(n); },
        [=] { return bialgebra_laws(n); },
        [=] { return exp_log_inverse(n); },
        [=] { return lyndon_counts(n); },
        [=] { return lyndon_factorizations(n); },
        [=] { return duality(n, Family::p, Family::s); },
        [=] { return duality(n, Family::Pi, Family::Sigma); },
        [=] { return duality(n, Family::PiL, Family::SigmaL); },
        [=] { return duality(n, Family::PiR, Family::SigmaR); },
        [=] { return s_recursion(n); },
        [=] { return primitives(n); },
        [=] { return triangularity(n); },
        [=] { return pi1_projection(n); },
        [=] { return y_in_R(n); },
        [=] { return series_identities(n); },
        [=] { return series_structure(n); },
        [=] { return sym_round_trips(sym_n); },
        [] { return sym_spot_values(); },
        [=] { return sym_word_images(n); },
        [=] { return sym_primitives(sym_n); },
        [=] { return sym_adjunction(n); },
        [=] { return qsym_coalgebra(n); },
        [=] { return cauchy(n); },
        [=] { return hall_littlewood(n, cfg.q_degree); },
        [=] { return factorization(n, DualPair::shuffle); },
        [=] { return factorization(n, DualPair::stuffle); },
        [=] { return factorization(n, DualPair::L); },
        [=] { return factorization(n, DualPair::R); },
    };

    std::vector<std::future<CheckResult>> futures;
    futures.reserve(checks.size() + 1);
    for (auto& c : checks)
        futures.push_back(std::async(std::launch::async, [c] {
            try {
                return c();
            } catch (const std::exception& e) {
                return CheckResult{"(exception)", false, e.what()};
            }
        }));
    auto character = std::async(std::launch::async, [char_n] { return character_checks(char_n); });

    std::vector<CheckResult> out;
    for (auto& f : futures)
        out.push_back(f.get());
    try {
        for (auto& r : character.get()) {
            r.name = "factorization: " + r.name;
            out.push_back(std::move(r));
        }
    } catch (const std::exception& e) {
        out.push_back({"factorization: character identities", false, e.what()});
    }
    return out;
}

} // namespace qsh
