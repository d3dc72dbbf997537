#pragma once

#include <cstdint>
#include <vector>

#include "bruhat/monoid.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/word.hpp"

namespace bruhat {

/// Does x weakly fit p: sum(p) = |x|, every p_i >= 0, and the first letters
/// alpha strictly increase inside each consecutive block of sizes p_1..p_r
/// (blocks taken in application order).
bool weakly_fits(const Word& x, const Composition& p);

/// Block conditions of the three chain classes.
enum class BlockOrder { increasing_alpha, decreasing_alpha, decreasing_beta };

/// Filter an already-enumerated word set by the block condition.
std::vector<Word> filter_words(const std::vector<Word>& words, const Composition& p,
                               BlockOrder order);

/// The words of z whose alpha letters increase within blocks of p.
std::vector<Word> h_set(const Permutation& z, const Composition& p);
/// Decreasing-alpha analogue.
std::vector<Word> e_set(const Permutation& z, const Composition& p);
/// Decreasing-beta analogue.
std::vector<Word> e_prime_set(const Permutation& z, const Composition& p);

/// lambda_sigma(i) = lambda_{sigma(i)} + i - sigma(i), over r parts
/// (lambda zero-padded as needed); entries may be negative.
Composition lambda_sigma(const Partition& lambda, const Permutation& sigma, int r);

/// The structure constant c_lambda^zeta as the signed sum over sigma in S_r
/// of |H_{lambda_sigma}(zeta)|; zero when |lambda| differs from the rank of
/// zeta. Always nonnegative; a negative sum raises internal_error.
std::int64_t c_constant(const Permutation& z, const Partition& lambda);
std::int64_t c_constant(const std::vector<Word>& words, const Partition& lambda);

/// Same constant through the decreasing-alpha and decreasing-beta classes
/// applied to the conjugate partition; both routes must agree.
std::int64_t c_constant_dual(const Permutation& z, const Partition& lambda);

/// Coefficient of the w-indexed basis element in the product of the
/// u-indexed one with the Grassmannian v(lambda,k): zero unless u <=_k w,
/// else c_lambda^{w u^-1}.
std::int64_t schubert_coeff(const Permutation& u, const Partition& lambda, int k,
                            const Permutation& w);

/// Number of standard Young tableaux of shape lambda (hook lengths).
std::int64_t f_lambda(const Partition& lambda);

/// All constants of z and the chain-count identity
/// |R(z)| = sum_lambda f^lambda c_lambda^z.
struct ConstantsReport {
    Permutation zeta;
    int lu = 0;
    std::int64_t total_chains = 0;
    std::vector<std::pair<Partition, std::int64_t>> entries;  // every lambda |- lu
    bool identity_ok = false;
};
ConstantsReport verify_identity(const Permutation& z,
                                std::int64_t max_chains = kDefaultChainCap);

/// Vertical symmetry: (alpha,beta) -> (m+1-beta, m+1-alpha) letterwise;
/// carries words of zeta to words of w0 zeta w0. Throws if m is below some
/// letter.
Word psi_v(const Word& x, int m);
/// Horizontal symmetry: reverse the factors; carries words of zeta to words
/// of zeta^-1.
Word psi_h(const Word& x);
/// Letterwise shift embedding at pos; carries words of zeta to words of
/// phi_star(zeta, pos).
Word phi_star_word(const Word& x, int pos);

/// Letters used by the words of z (the same set for every word of z).
std::vector<int> letter_support(const Permutation& z);

/// Do eta and zeta have letter-disjoint words with nonzero concatenation?
bool u_disjoint(const Permutation& eta, const Permutation& zeta);

/// All constants agree between zeta and its conjugate by the n-cycle
/// (1 2 ... n). Requires zeta in S_n.
bool check_cyclic(const Permutation& z, int n);

/// Littlewood-Richardson coefficient c_{nu,mu}^lambda by direct enumeration
/// of lattice-word skew tableaux; independent of the chain machinery.
std::int64_t lr_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda);

/// For u-disjoint eta, zeta: does
/// c_lambda^{zeta eta} = sum_{nu,mu} c_{nu,mu}^lambda c_nu^zeta c_mu^eta
/// hold for every lambda of the right size? Throws domain_error when the
/// pair is not u-disjoint.
bool check_disjoint(const Permutation& eta, const Permutation& zeta);

/// A word counted once for each sigma whose block shape it fits, signed by
/// the sign of sigma.
struct SignedWordOccurrence {
    Word word;
    Permutation sigma;
    int sign = 1;

    friend bool operator==(const SignedWordOccurrence&, const SignedWordOccurrence&) = default;
};

/// The signed multiset D_lambda(zeta); its signed sum is c_lambda^zeta.
std::vector<SignedWordOccurrence> d_lambda(const Permutation& z, const Partition& lambda);

} // namespace bruhat
