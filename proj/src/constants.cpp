#include "bruhat/constants.hpp"

#include <algorithm>
#include <set>

namespace bruhat {

namespace {

bool fits_with_order(const Word& x, const Composition& p, BlockOrder order) {
    int total = 0;
    for (int pi : p.parts()) {
        if (pi < 0) return false;
        total += pi;
    }
    if (total != x.length()) return false;
    const auto letter = [order](const Generator& g) {
        return order == BlockOrder::decreasing_beta ? g.beta : g.alpha;
    };
    const bool increasing = order == BlockOrder::increasing_alpha;
    int at = 0;
    for (int pi : p.parts()) {
        for (int j = 1; j < pi; ++j) {
            const int prev = letter(x.gens[static_cast<size_t>(at + j - 1)]);
            const int cur = letter(x.gens[static_cast<size_t>(at + j)]);
            if (increasing ? prev >= cur : prev <= cur) return false;
        }
        at += pi;
    }
    return true;
}

} // namespace

bool weakly_fits(const Word& x, const Composition& p) {
    return fits_with_order(x, p, BlockOrder::increasing_alpha);
}

std::vector<Word> filter_words(const std::vector<Word>& words, const Composition& p,
                               BlockOrder order) {
    std::vector<Word> out;
    for (const Word& x : words)
        if (fits_with_order(x, p, order)) out.push_back(x);
    return out;
}

std::vector<Word> h_set(const Permutation& z, const Composition& p) {
    return filter_words(reduced_words(z), p, BlockOrder::increasing_alpha);
}

std::vector<Word> e_set(const Permutation& z, const Composition& p) {
    return filter_words(reduced_words(z), p, BlockOrder::decreasing_alpha);
}

std::vector<Word> e_prime_set(const Permutation& z, const Composition& p) {
    return filter_words(reduced_words(z), p, BlockOrder::decreasing_beta);
}

Composition lambda_sigma(const Partition& lambda, const Permutation& sigma, int r) {
    if (sigma.size() > r)
        throw domain_error("lambda_sigma: sigma moves a point beyond r");
    std::vector<int> parts(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i)
        parts[static_cast<size_t>(i) - 1] = lambda.part(sigma(i)) + i - sigma(i);
    return Composition(std::move(parts));
}

namespace {

bool has_negative(const Composition& p) {
    for (int v : p.parts())
        if (v < 0) return true;
    return false;
}

std::int64_t signed_block_sum(const std::vector<Word>& words, const Partition& lambda,
                              int r, BlockOrder order, bool reverse_blocks) {
    std::int64_t sum = 0;
    for (const Permutation& sigma : symmetric_group(r)) {
        Composition p = lambda_sigma(lambda, sigma, r);
        if (has_negative(p)) continue;
        if (reverse_blocks) {
            std::vector<int> rev(p.parts().rbegin(), p.parts().rend());
            p = Composition(std::move(rev));
        }
        std::int64_t count = 0;
        for (const Word& x : words)
            if (fits_with_order(x, p, order)) ++count;
        sum += sign(sigma) * count;
    }
    return sum;
}

} // namespace

std::int64_t c_constant(const std::vector<Word>& words, const Partition& lambda) {
    if (!words.empty() && words[0].length() != lambda.sum()) return 0;
    if (words.empty() && lambda.sum() != 0) return 0;
    const int r = std::max(lambda.size(), 1);
    const std::int64_t c =
        signed_block_sum(words, lambda, r, BlockOrder::increasing_alpha, false);
    if (c < 0) throw internal_error("c_constant: negative structure constant");
    return c;
}

std::int64_t c_constant(const Permutation& z, const Partition& lambda) {
    if (lambda.sum() != universal_length(z)) return 0;
    return c_constant(reduced_words(z), lambda);
}

std::int64_t c_constant_dual(const Permutation& z, const Partition& lambda) {
    if (lambda.sum() != universal_length(z)) return 0;
    const std::vector<Word> words = reduced_words(z);
    const Partition conj = lambda.conjugate();
    const int r = std::max(conj.size(), 1);
    const std::int64_t via_e =
        signed_block_sum(words, conj, r, BlockOrder::decreasing_alpha, true);
    const std::int64_t via_e_prime =
        signed_block_sum(words, conj, r, BlockOrder::decreasing_beta, false);
    if (via_e != via_e_prime)
        throw internal_error("c_constant_dual: the two dual routes disagree");
    if (via_e < 0) throw internal_error("c_constant_dual: negative structure constant");
    return via_e;
}

std::int64_t schubert_coeff(const Permutation& u, const Partition& lambda, int k,
                            const Permutation& w) {
    if (!leq_k(u, w, k)) return 0;
    return c_constant(compose(w, inverse(u)), lambda);
}

std::int64_t f_lambda(const Partition& lambda) {
    const int n = lambda.sum();
    if (n == 0) return 1;
    const Partition conj = lambda.conjugate();
    std::int64_t num = 1, den = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    for (int i = 1; i <= lambda.size(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            den *= lambda.part(i) - j + conj.part(j) - i + 1;  // hook length at (i,j)
    if (den == 0 || num % den != 0)
        throw internal_error("f_lambda: hook product does not divide n!");
    return num / den;
}

ConstantsReport verify_identity(const Permutation& z, std::int64_t max_chains) {
    ConstantsReport rep;
    rep.zeta = z;
    rep.lu = universal_length(z);
    const std::vector<Word> words = reduced_words(z, max_chains);
    rep.total_chains = static_cast<std::int64_t>(words.size());
    std::int64_t sum = 0;
    for (const Partition& lambda : partitions_of(rep.lu)) {
        const std::int64_t c = c_constant(words, lambda);
        sum += f_lambda(lambda) * c;
        rep.entries.emplace_back(lambda, c);
    }
    rep.identity_ok = sum == rep.total_chains;
    if (!rep.identity_ok)
        throw internal_error("verify_identity: chain count does not match the f-weighted sum");
    return rep;
}

Word psi_v(const Word& x, int m) {
    Word out;
    out.gens.reserve(x.gens.size());
    for (const Generator& g : x.gens) {
        if (g.beta > m) throw domain_error("psi_v: m is below a letter of the word");
        out.gens.emplace_back(m + 1 - g.beta, m + 1 - g.alpha);
    }
    return out;
}

Word psi_h(const Word& x) {
    Word out;
    out.gens.assign(x.gens.rbegin(), x.gens.rend());
    return out;
}

Word phi_star_word(const Word& x, int pos) {
    if (pos < 1) throw domain_error("phi_star_word needs pos >= 1");
    const auto shift = [pos](int v) { return v < pos ? v : v + 1; };
    Word out;
    out.gens.reserve(x.gens.size());
    for (const Generator& g : x.gens)
        out.gens.emplace_back(shift(g.alpha), shift(g.beta));
    return out;
}

std::vector<int> letter_support(const Permutation& z) {
    const MarkedInterval iv = standard_interval(z);
    const Word x = chain_to_word(cm_chain(iv));
    std::set<int> letters;
    for (const Generator& g : x.gens) {
        letters.insert(g.alpha);
        letters.insert(g.beta);
    }
    return std::vector<int>(letters.begin(), letters.end());
}

bool u_disjoint(const Permutation& eta, const Permutation& zeta) {
    const std::vector<int> a = letter_support(eta);
    const std::vector<int> b = letter_support(zeta);
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (!both.empty()) return false;
    const MarkedInterval ive = standard_interval(eta);
    const MarkedInterval ivz = standard_interval(zeta);
    Word concat = chain_to_word(cm_chain(ive));
    const Word tail = chain_to_word(cm_chain(ivz));
    concat.gens.insert(concat.gens.end(), tail.gens.begin(), tail.gens.end());
    return evaluate_word(concat).has_value();
}

bool check_cyclic(const Permutation& z, int n) {
    if (z.size() > n) throw domain_error("check_cyclic: z is not in S_n");
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i) cyc[static_cast<size_t>(i) - 1] = i + 1;
    cyc[static_cast<size_t>(n) - 1] = 1;
    const Permutation gamma = Permutation::from_window(std::move(cyc));
    const Permutation conj = compose(gamma, compose(z, inverse(gamma)));
    const int lu = universal_length(z);
    if (universal_length(conj) != lu) return false;
    const std::vector<Word> words_z = reduced_words(z);
    const std::vector<Word> words_c = reduced_words(conj);
    for (const Partition& lambda : partitions_of(lu))
        if (c_constant(words_z, lambda) != c_constant(words_c, lambda)) return false;
    return true;
}

namespace {

// Lattice-word skew tableaux of shape lambda/nu and content mu, counted by
// filling cells in reverse reading order (rows top to bottom, right to left).
struct LrCounter {
    const Partition& nu;
    const Partition& mu;
    const Partition& lambda;
    std::vector<std::vector<int>> cells;  // cells[r][c] value, 0-based, full lambda grid
    std::vector<int> used;                // used[v] = occurrences of value v+1 so far
    std::int64_t count = 0;

    bool cell_in_skew(int r, int c) const {
        return r < lambda.size() && c >= nu.part(r + 1) && c < lambda.part(r + 1);
    }

    void fill(int r, int c) {
        if (r == lambda.size()) {
            ++count;
            return;
        }
        const int row_lo = nu.part(r + 1), row_hi = lambda.part(r + 1);
        if (c < row_lo) {
            fill(r + 1, lambda.part(r + 2) - 1);
            return;
        }
        if (c >= row_hi) {
            fill(r, row_hi - 1);
            return;
        }
        for (int v = 1; v <= mu.size(); ++v) {
            if (used[static_cast<size_t>(v) - 1] >= mu.part(v)) continue;
            // lattice: strictly fewer v's than (v-1)'s before this placement
            if (v > 1 && used[static_cast<size_t>(v) - 1] >= used[static_cast<size_t>(v) - 2])
                continue;
            // weakly increasing along the row: right neighbor already placed
            if (c + 1 < row_hi && cells[static_cast<size_t>(r)][static_cast<size_t>(c) + 1] < v)
                continue;
            // strictly increasing down the column: cell above already placed
            if (r > 0 && cell_in_skew(r - 1, c) &&
                cells[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] >= v)
                continue;
            cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++used[static_cast<size_t>(v) - 1];
            fill(r, c - 1);
            --used[static_cast<size_t>(v) - 1];
        }
    }
};

bool contains_shape(const Partition& nu, const Partition& lambda) {
    for (int i = 1; i <= nu.size(); ++i)
        if (nu.part(i) > lambda.part(i)) return false;
    return true;
}

} // namespace

std::int64_t lr_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda) {
    if (!contains_shape(nu, lambda)) return 0;
    if (nu.sum() + mu.sum() != lambda.sum()) return 0;
    if (mu.empty()) return 1;
    LrCounter counter{nu, mu, lambda, {}, {}, 0};
    counter.cells.assign(static_cast<size_t>(lambda.size()),
                         std::vector<int>(static_cast<size_t>(lambda.part(1)), 0));
    counter.used.assign(static_cast<size_t>(mu.size()), 0);
    counter.fill(0, lambda.part(1) - 1);
    return counter.count;
}

bool check_disjoint(const Permutation& eta, const Permutation& zeta) {
    if (!u_disjoint(eta, zeta))
        throw domain_error("check_disjoint: permutations are not u-disjoint");
    const Permutation product = compose(zeta, eta);
    const int total = universal_length(product);
    const int le = universal_length(eta);
    const int lz = universal_length(zeta);
    if (total != le + lz) return false;
    const std::vector<Word> words_p = reduced_words(product);
    const std::vector<Word> words_e = reduced_words(eta);
    const std::vector<Word> words_z = reduced_words(zeta);
    for (const Partition& lambda : partitions_of(total)) {
        const std::int64_t lhs = c_constant(words_p, lambda);
        std::int64_t rhs = 0;
        for (const Partition& nuP : partitions_of(lz))
            for (const Partition& muP : partitions_of(le))
                rhs += lr_coefficient(nuP, muP, lambda) * c_constant(words_z, nuP) *
                       c_constant(words_e, muP);
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<SignedWordOccurrence> d_lambda(const Permutation& z, const Partition& lambda) {
    std::vector<SignedWordOccurrence> out;
    if (lambda.sum() != universal_length(z)) return out;
    const std::vector<Word> words = reduced_words(z);
    const int r = std::max(lambda.size(), 1);
    for (const Permutation& sigma : symmetric_group(r)) {
        const Composition p = lambda_sigma(lambda, sigma, r);
        if (has_negative(p)) continue;
        for (const Word& x : words)
            if (weakly_fits(x, p))
                out.push_back(SignedWordOccurrence{x, sigma, sign(sigma)});
    }
    return out;
}

} // namespace bruhat
