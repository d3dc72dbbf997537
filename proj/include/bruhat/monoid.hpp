#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bruhat/korder.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/word.hpp"

namespace bruhat {

/// The monoid has a zero; nullopt models it. Every nonzero element is a
/// permutation (the value of the operator word at the identity).
using MaybePerm = std::optional<Permutation>;

/// Rank of z in the universal order. Evaluates both the closed four-term
/// inversion formula and the length difference across the standard interval
/// and insists they agree.
int universal_length(const Permutation& z);

/// The standard interval [z^-1 w, w]_k realizing z: w lists up(z) in
/// increasing order, then the complement in increasing order; k = |up(z)|.
MarkedInterval standard_interval(const Permutation& z);

/// The operator of a generator: h -> (alpha beta) h when the result covers
/// h in the universal order, zero otherwise. Zero is absorbing.
MaybePerm apply_generator(const Generator& g, const MaybePerm& h);

/// Left fold of apply_generator over the word, starting at the identity.
/// A word is u-reduced exactly when this is nonzero.
MaybePerm evaluate_word(const Word& x);

/// eta is below zeta in the universal order. Decided on the standard
/// interval of zeta: u <=_k eta u <=_k zeta u with (u, zeta u, k) standard.
bool leq_universal(const Permutation& eta, const Permutation& zeta);

/// Experimental direct predicate: value comparisons on the up/dw preimages
/// of zeta, pair order taken along the window of the standard interval.
/// Necessary for leq_universal but not sufficient when eta moves a fixed
/// point of zeta; kept for cross-checks.
bool leq_universal_conditions(const Permutation& eta, const Permutation& zeta);

/// All u-reduced words evaluating to z, in lexicographic order; these are
/// the maximal chains of [1,z] in the universal order.
std::vector<Word> reduced_words(const Permutation& z,
                                std::int64_t max_chains = kDefaultChainCap);

/// All words one relation away from x. The three nonzero defining relations,
/// on factors adjacent in application order (earliest first):
///   (1) (a,c)(c,d)(b,c) == (b,c)(a,b)(b,d)   for a < b < c < d,
///   (2) (b,c)(c,d)(a,c) == (b,d)(a,b)(b,c)   for a < b < c < d,
///   (3) two factors commute when their letter intervals are disjoint or
///       strictly nested.
/// Requires evaluate_word(x) nonzero; every neighbor evaluates identically.
std::vector<Word> rewrite_neighbors(const Word& x);

/// BFS closure of x under rewrite_neighbors, sorted; equals the full set of
/// u-reduced words of evaluate_word(x).
std::vector<Word> rewrite_closure(const Word& x);

/// Does either zero relation match anywhere in x?
///   (4) adjacent interleaved letter intervals, shared endpoints included;
///   (5) (a,b)(b,c)(a,b) or (b,c)(a,b)(b,c) for a < b < c.
/// Never true for a u-reduced word.
bool has_zero_pattern(const Word& x);

/// Hasse diagram of [1,z] in the universal order, edges labeled by the
/// generator of each cover.
HasseGraph hasse_interval(const Permutation& z);

/// Moebius function value mu(1, z) of the interval [1,z].
std::int64_t mobius(const Permutation& z);

/// Polynomial with integer coefficients in t.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size()))
                   ? coeffs_[static_cast<size_t>(i)]
                   : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// e.g. "1 + 15t + 70t^2".
    std::string str() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// P_n(t) = sum over S_n of t^(universal rank). Throws resource_error when
/// n exceeds max_n.
IntPolynomial rank_polynomial(int n, int max_n = 9);

} // namespace bruhat
