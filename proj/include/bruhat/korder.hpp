#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "bruhat/perm.hpp"
#include "bruhat/word.hpp"

namespace bruhat {

inline constexpr std::int64_t kDefaultChainCap = 1000000;

/// u <=_k w in the k-Bruhat order:
///   (1) u(i) <= w(i) for i <= k,
///   (2) u(i) >= w(i) for i > k,
///   (3) u(i) < u(j) implies w(i) < w(j), for i < j <= k or k < i < j.
bool leq_k(const Permutation& u, const Permutation& w, int k);

/// A nonempty interval [u,w]_k. k = 0 is allowed and forces u = w.
struct MarkedInterval {
    Permutation u;
    Permutation w;
    int k = 0;

    /// Validates u <=_k w; throws domain_error otherwise.
    static MarkedInterval make(Permutation u, Permutation w, int k);

    /// Common support bound: max of both windows and k.
    int support_bound() const;

    friend bool operator==(const MarkedInterval&, const MarkedInterval&) = default;
};

/// A saturated chain u = perms[0] <_k perms[1] <_k ... <_k perms[n] = w.
/// Step i (1-based) swaps positions (a_i, b_i), a_i <= k < b_i, and as a
/// left multiplication is the transposition of the values
/// (alpha_i, beta_i) = (perms[i-1](a_i), perms[i-1](b_i)).
struct Chain {
    std::vector<Permutation> perms;

    int length() const { return static_cast<int>(perms.size()) - 1; }
    const Permutation& bottom() const { return perms.front(); }
    const Permutation& top() const { return perms.back(); }

    /// Positions (a_i, b_i) of step i in 1..length().
    std::pair<int, int> step_positions(int i) const;
    /// Letters (alpha_i, beta_i) of step i.
    Generator step_generator(int i) const;

    friend bool operator==(const Chain&, const Chain&) = default;
};

struct CoverEdge {
    Permutation target;
    Generator gen;

    friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

/// All covers u <_k u(a b) that stay <=_k ceiling, sorted by generator.
/// Requires u <=_k ceiling.
std::vector<CoverEdge> covers_k(const Permutation& u, int k, const Permutation& ceiling);

/// The canonical maximal chain of [u,w]_k, selected at every step by
///   I:  w(a) = max{ w(j) : j <= k, u(j) < w(j) },
///   II: u(b) > u(a) >= w(b) and w(b) = min{ w(j) : j > k, u(j) > u(a) >= w(j) }.
/// It is the unique maximal chain without inversions.
Chain cm_chain(const MarkedInterval& iv);

/// The dual canonical chain, selected by
///   I':  u(b) > w(b) and w(b) = min{ w(j) : j > k, u(j) > w(j) },
///   II': u(a) < u(b) <= w(a) and w(a) = max{ w(j) : j <= k, u(j) < u(b) <= w(j) }.
Chain dcm_chain(const MarkedInterval& iv);

/// Same chain computed as the Omega_m image of the CM-chain of the
/// conjugated interval [w0 u w0, w0 w w0]_{m-k}; oracle for dcm_chain.
Chain dcm_chain_via_omega(const MarkedInterval& iv);

/// Inversions of a maximal chain ending at w: pairs of 1-based step indices
/// (i,j), i < j, with w(a_i) < w(a_j), or w(a_i) = w(a_j) and w(b_i) > w(b_j).
std::set<std::pair<int, int>> chain_inversions(const Chain& c, const Permutation& w);

/// Every maximal chain of [u,w]_k, in lexicographic order of their generator
/// sequences. Throws resource_error beyond max_chains.
std::vector<Chain> all_chains(const MarkedInterval& iv,
                              std::int64_t max_chains = kDefaultChainCap);

/// Number of maximal chains of [u,w]_k, by memoized recursion over covers;
/// equals all_chains(iv).size() without materializing the chains.
std::int64_t count_chains(const MarkedInterval& iv);

/// The generators (alpha_i, beta_i) of a chain, in application order.
Word chain_to_word(const Chain& c);

/// Rebuilds the chain from u following the word; throws domain_error if a
/// step is not a <=_k cover.
Chain word_to_chain(const Word& x, const Permutation& u, int k);

/// Nodes and labeled cover edges of [u,w]_k. Nodes are sorted by rank and
/// then by window; edges carry the letters (alpha, beta) of the cover.
struct HasseGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        Generator gen;
    };
    std::vector<Permutation> nodes;
    std::vector<Edge> edges;
};

HasseGraph interval_graph(const MarkedInterval& iv);

} // namespace bruhat
