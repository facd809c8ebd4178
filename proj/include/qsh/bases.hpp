#pragma once

#include <map>
#include <mutex>
#include <string_view>
#include <vector>

#include "qsh/ncpoly.hpp"

namespace qsh {

/// Projection onto the primitive elements of the stuffle bialgebra:
/// pi1(w) = w + sum_{k>=2} (-1)^{k-1}/k sum_{u_i nonempty} <w | u_1 * ... * u_k> u_1...u_k
/// where * is the stuffle. Extended linearly.
Polynomial pi1(const Word& w);
Polynomial pi1(const Polynomial& p);

/// Expands sum_k 1/k! sum <w | u_1 * ... * u_k> pi1(u_1)...pi1(u_k) and
/// reports whether it gives back w.
bool pi1_inverse_check(const Word& w);

/// X_0 = 1, X_n = -sum_{i=1}^n y_i X_{n-i}: coefficients of Y(t)^{-1}. Index 0..n.
std::vector<Polynomial> X_elements(int n);
/// L_n = sum_{i=0}^{n-1} (i+1) y_{i+1} X_{n-1-i}. Index 1..n (entry 0 is zero).
std::vector<Polynomial> L_elements(int n);
/// R_n = sum_{i=0}^{n-1} (i+1) X_{n-1-i} y_{i+1}. Index 1..n (entry 0 is zero).
std::vector<Polynomial> R_elements(int n);

/// How y_n is weighted in the expansion of y_n over products of the R_k.
enum class RExpansionWeight {
    partial_sum_product, // 1/pi_u(J)
    parts_product,       // 1/pi(J); fails from n = 2 on
};

/// Checks y_n = sum_{w(J)=n} R_{j_1}...R_{j_k} / weight(J).
bool y_in_R_expansion(int n, RExpansionWeight weighting = RExpansionWeight::partial_sum_product);

/// Images of the letters that seed a PBW-Lyndon basis.
enum class Generators {
    letters, // y_n          -> (p, s)
    pi1,     // pi1(y_n)     -> (Pi, Sigma)
    L,       // L_n          -> (Pi^L, Sigma^L)
    R,       // R_n          -> (Pi^R, Sigma^R)
};

/// PBW-Lyndon basis built from a primitive alphabet, together with its dual
/// basis obtained by solving <primal_u | dual_v> = delta_{u,v} on each weight
/// component. Components are computed lazily and cached; the cache is
/// write-once and guarded, so a shared instance may be used concurrently.
class PbwBasis {
public:
    explicit PbwBasis(Generators g) : generators_(g) {}

    Generators generators() const { return generators_; }

    /// Image of the letter y_n.
    Polynomial generator(int n) const;

    /// y -> generator, Lyndon l = (s, r) -> [primal_s, primal_r],
    /// w = l_1^{i_1}...l_k^{i_k} -> primal_{l_1}^{i_1} ... primal_{l_k}^{i_k}.
    Polynomial primal(const Word& w) const;

    /// Dual element, from the graded duality solve.
    Polynomial dual(const Word& w) const;

    /// Dual elements of all words of weight n, keyed by index word.
    const std::map<Word, Polynomial, CanonicalLess>& dual_component(int n) const;

private:
    Polynomial primal_lyndon(const Word& l) const;

    Generators generators_;
    mutable std::recursive_mutex mutex_;
    mutable std::map<int, Polynomial> generator_cache_;
    mutable std::map<Word, Polynomial, CanonicalLess> lyndon_cache_;
    mutable std::map<int, std::map<Word, Polynomial, CanonicalLess>> dual_cache_;
};

/// Explicit recursion for the dual of the shuffle PBW basis:
/// s_y = y, s_{yu} = y s_u for Lyndon yu,
/// s_w = 1/(i_1!...i_k!) s_{l_1}^{sh i_1} sh ... sh s_{l_k}^{sh i_k}.
Polynomial s_basis(const Word& w);
Polynomial p_basis(const Word& w);
Polynomial Pi_basis(const Word& w);
Polynomial Sigma_basis(const Word& w);

enum class Family { p, s, Pi, Sigma, PiL, SigmaL, PiR, SigmaR };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// One basis element of any family. Uses process-wide shared PbwBasis tables.
Polynomial basis_element(Family f, const Word& w);

/// Shared, lazily filled table for a generator alphabet.
const PbwBasis& shared_basis(Generators g);

} // namespace qsh
