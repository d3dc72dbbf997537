#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bruhat/constants.hpp"

using namespace bruhat;

namespace {

Permutation P(std::vector<int> w) { return Permutation::from_window(std::move(w)); }

Word W(std::vector<std::pair<int, int>> gens) {
    Word x;
    for (auto [a, b] : gens) x.gens.emplace_back(a, b);
    return x;
}

const Permutation kZeta = P({2, 5, 4, 1, 6, 3});

// H_{(2,2,1)}(kZeta), from its two listed elements (application order)
std::vector<Word> h221() {
    return {W({{3, 4}, {5, 6}, {2, 3}, {3, 5}, {1, 2}}),
            W({{2, 4}, {5, 6}, {1, 2}, {4, 5}, {3, 4}})};
}

// brute-force standard Young tableaux count: peel corner cells recursively
std::int64_t syt_count(std::vector<int> shape) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    std::int64_t total = 0;
    for (size_t r = 0; r < shape.size(); ++r) {
        const bool corner =
            shape[r] > 0 && (r + 1 == shape.size() || shape[r + 1] < shape[r]);
        if (!corner) continue;
        auto smaller = shape;
        --smaller[r];
        total += syt_count(std::move(smaller));
    }
    return total;
}

// all distinct rearrangements of the parts of lambda
std::vector<Composition> rearrangements(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

} // namespace

TEST_CASE("weakly_fits") {
    CHECK(weakly_fits(Word{}, Composition{}));
    CHECK(weakly_fits(h221()[0], Composition({2, 2, 1})));
    CHECK(weakly_fits(h221()[1], Composition({2, 2, 1})));
    CHECK_FALSE(weakly_fits(h221()[0], Composition({3, 2})));
    CHECK_FALSE(weakly_fits(h221()[0], Composition({2, -1, 4})));
    CHECK_FALSE(weakly_fits(h221()[0], Composition({2, 2})));  // wrong total
    // zero-size blocks are vacuous
    CHECK(weakly_fits(W({{1, 2}}), Composition({0, 1, 0})));
}

TEST_CASE("h_set on the fourteen-chain example") {
    auto expected = h221();
    std::sort(expected.begin(), expected.end());
    CHECK(h_set(kZeta, Composition({2, 2, 1})) == expected);

    CHECK(h_set(kZeta, Composition({1, 3, 1})).empty());
    CHECK(h_set(kZeta, Composition({2, 0, 3})).empty());
    CHECK(h_set(kZeta, Composition({2, 1, 1, 1})).size() == 5);
    CHECK(h_set(kZeta, Composition({2, 1, 0, 2})).size() == 2);
    CHECK(h_set(kZeta, Composition({2, 0, 2, 1})).size() == 2);
    CHECK(h_set(kZeta, Composition({2, 0, 0, 3})).empty());
    CHECK(h_set(kZeta, Composition({0, 3, 1, 1})).empty());
    CHECK(h_set(kZeta, Composition({0, 3, 0, 2})).empty());
    CHECK(h_set(kZeta, Composition({0, 0, 4, 1})).empty());
    CHECK(h_set(kZeta, Composition({0, 0, 0, 5})).empty());
}

TEST_CASE("lambda_sigma") {
    const Partition lambda({2, 1, 1, 1});
    CHECK(lambda_sigma(lambda, Permutation::identity(), 4) == Composition({2, 1, 1, 1}));

    std::set<Composition> nonneg;
    for (const auto& sigma : symmetric_group(4)) {
        const Composition p = lambda_sigma(lambda, sigma, 4);
        if (std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v >= 0; }))
            nonneg.insert(p);
    }
    const std::set<Composition> expected{
        Composition({2, 1, 1, 1}), Composition({2, 1, 0, 2}), Composition({2, 0, 2, 1}),
        Composition({2, 0, 0, 3}), Composition({0, 3, 1, 1}), Composition({0, 3, 0, 2}),
        Composition({0, 0, 4, 1}), Composition({0, 0, 0, 5})};
    CHECK(nonneg == expected);

    CHECK(lambda_sigma(Partition({2, 2, 1}), Permutation::transposition(1, 2), 3) ==
          Composition({1, 3, 1}));
}

TEST_CASE("structure constants of the fourteen-chain example") {
    CHECK(c_constant(Permutation::identity(), Partition{}) == 1);
    CHECK(c_constant(kZeta, Partition({2, 2, 1})) == 2);
    CHECK(c_constant(kZeta, Partition({2, 1, 1, 1})) == 1);
    for (const Partition& lambda : partitions_of(5)) {
        const std::int64_t c = c_constant(kZeta, lambda);
        if (lambda == Partition({2, 2, 1}) || lambda == Partition({2, 1, 1, 1}))
            continue;
        CHECK(c == 0);
    }
    // wrong degree gives zero
    CHECK(c_constant(kZeta, Partition({2, 2})) == 0);
}

TEST_CASE("dual routes agree with the primal one") {
    CHECK(c_constant_dual(Permutation::identity(), Partition{}) == 1);
    CHECK(c_constant_dual(kZeta, Partition({2, 2, 1})) == 2);
    CHECK(c_constant_dual(kZeta, Partition({2, 1, 1, 1})) == 1);
    for (const auto& zeta : symmetric_group(4)) {
        const int lu = universal_length(zeta);
        for (const Partition& lambda : partitions_of(lu))
            CHECK(c_constant(zeta, lambda) == c_constant_dual(zeta, lambda));
    }
}

TEST_CASE("schubert coefficients") {
    const Permutation u = P({3, 1, 2, 5, 6, 4});
    const Permutation w = P({4, 2, 5, 6, 3, 1});
    CHECK(schubert_coeff(u, Partition{}, 4, u) == 1);
    CHECK(schubert_coeff(u, Partition({1}), 4, u) == 0);
    CHECK(schubert_coeff(u, Partition({2, 2, 1}), 4, w) == 2);
    // the same constant from the standard representative
    CHECK(schubert_coeff(P({1, 3, 2, 5, 4, 6}), Partition({2, 2, 1}), 4,
                         P({2, 4, 5, 6, 1, 3})) == 2);
    // vanishing when u is not below w
    CHECK(schubert_coeff(P({2, 1, 4, 3, 5}), Partition({2, 2}), 3,
                         P({4, 5, 1, 2, 3})) == 0);
}

TEST_CASE("standard tableaux counts") {
    CHECK(f_lambda(Partition{}) == 1);
    CHECK(f_lambda(Partition({2, 2, 1})) == 5);
    CHECK(f_lambda(Partition({2, 1, 1, 1})) == 4);
    CHECK(f_lambda(Partition({7})) == 1);
    CHECK(f_lambda(Partition({1, 1, 1, 1})) == 1);
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            CHECK(f_lambda(lambda) == syt_count(lambda.parts()));
}

TEST_CASE("chain-count identity") {
    const auto trivial = verify_identity(Permutation::identity());
    CHECK(trivial.total_chains == 1);
    CHECK(trivial.identity_ok);

    const auto rep = verify_identity(kZeta);
    CHECK(rep.lu == 5);
    CHECK(rep.total_chains == 14);
    CHECK(rep.identity_ok);
    std::map<Partition, std::int64_t> values(rep.entries.begin(), rep.entries.end());
    CHECK(values[Partition({2, 2, 1})] == 2);
    CHECK(values[Partition({2, 1, 1, 1})] == 1);

    CHECK(verify_identity(P({5, 4, 2, 1, 3})).total_chains == 5);

    // the identity holds across all of S_5, with every constant nonnegative
    for (const auto& zeta : symmetric_group(5)) {
        const auto r = verify_identity(zeta);
        CHECK(r.identity_ok);
        for (const auto& [lambda, value] : r.entries) {
            (void)lambda;
            CHECK(value >= 0);
        }
    }
}

TEST_CASE("chain-count identity at rank ten") {
    // the element of S_7 with the most chains; the identity resolves as
    // 462 = 210 + 252, the tableaux counts of two conjugate shapes
    const auto rep = verify_identity(P({3, 5, 6, 1, 7, 2, 4}));
    CHECK(rep.lu == 10);
    CHECK(rep.total_chains == 462);
    CHECK(rep.identity_ok);
    std::map<Partition, std::int64_t> values(rep.entries.begin(), rep.entries.end());
    CHECK(values[Partition({3, 3, 3, 1})] == 1);
    CHECK(values[Partition({3, 3, 2, 2})] == 1);
    CHECK(f_lambda(Partition({3, 3, 3, 1})) == 210);
    CHECK(f_lambda(Partition({3, 3, 2, 2})) == 252);
    std::int64_t nonzero = 0;
    for (const auto& [lambda, value] : rep.entries) {
        (void)lambda;
        if (value != 0) ++nonzero;
    }
    CHECK(nonzero == 2);
}

TEST_CASE("word symmetries") {
    CHECK(psi_h(W({{2, 5}})) == W({{2, 5}}));
    CHECK(psi_v(W({{1, 2}}), 2) == W({{1, 2}}));
    CHECK_THROWS_AS(psi_v(W({{1, 4}}), 3), domain_error);
    CHECK(phi_star_word(W({{1, 3}, {2, 3}}), 2) == W({{1, 4}, {3, 4}}));

    // Psi_h maps H_p(zeta) onto E_{reverse(p)}(zeta^-1), and Psi_v maps
    // H_p(zeta) onto E'_p(w0 zeta w0), as set bijections over S_4
    for (const auto& zeta : symmetric_group(4)) {
        if (zeta.is_identity()) continue;
        const auto words = reduced_words(zeta);
        const int n = universal_length(zeta);
        for (const Partition& lambda : partitions_of(n)) {
            for (const Composition& p : rearrangements(lambda)) {
                const auto h = filter_words(words, p, BlockOrder::increasing_alpha);

                std::vector<int> rev(p.parts().rbegin(), p.parts().rend());
                std::vector<Word> h_mirrored;
                for (const Word& x : h) h_mirrored.push_back(psi_h(x));
                std::sort(h_mirrored.begin(), h_mirrored.end());
                CHECK(h_mirrored == e_set(inverse(zeta), Composition(rev)));

                std::vector<Word> h_flipped;
                for (const Word& x : h) h_flipped.push_back(psi_v(x, 4));
                std::sort(h_flipped.begin(), h_flipped.end());
                CHECK(h_flipped == e_prime_set(omega_conjugate(zeta, 4), p));
            }
        }
    }
}

TEST_CASE("upper bound by any rearrangement") {
    for (const auto& zeta : symmetric_group(4)) {
        const auto words = reduced_words(zeta);
        const int n = universal_length(zeta);
        for (const Partition& lambda : partitions_of(n)) {
            const std::int64_t c = c_constant(words, lambda);
            for (const Composition& p : rearrangements(lambda))
                CHECK(c <= static_cast<std::int64_t>(
                          filter_words(words, p, BlockOrder::increasing_alpha).size()));
        }
    }
}

TEST_CASE("padding lambda with zero parts changes nothing") {
    const auto padded_constant = [](const Permutation& z, const Partition& lambda,
                                    int r) {
        const auto words = reduced_words(z);
        std::int64_t sum = 0;
        for (const auto& sigma : symmetric_group(r)) {
            const Composition p = lambda_sigma(lambda, sigma, r);
            if (std::any_of(p.parts().begin(), p.parts().end(),
                            [](int v) { return v < 0; }))
                continue;
            sum += sign(sigma) * static_cast<std::int64_t>(
                                     filter_words(words, p, BlockOrder::increasing_alpha)
                                         .size());
        }
        return sum;
    };
    CHECK(padded_constant(kZeta, Partition({2, 2, 1}), 4) == 2);
    CHECK(padded_constant(kZeta, Partition({2, 2, 1}), 5) == 2);
    CHECK(padded_constant(P({5, 4, 2, 1, 3}), Partition({2, 1, 1}), 5) ==
          c_constant(P({5, 4, 2, 1, 3}), Partition({2, 1, 1})));
}

TEST_CASE("cyclic conjugation invariance") {
    CHECK(check_cyclic(Permutation::identity(), 4));
    CHECK(check_cyclic(P({2, 4, 1, 3}), 4));
    for (const auto& zeta : symmetric_group(4)) CHECK(check_cyclic(zeta, 4));
}

TEST_CASE("littlewood-richardson oracle") {
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({2, 2})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({2, 1}), Partition({2, 2})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
    CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({2, 1})) == 0);
    CHECK(lr_coefficient(Partition{}, Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition{}, Partition({2, 1})) == 1);
    // Pieri row rule: adding a horizontal strip of size 2 to (2,1)
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2}), Partition({4, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2}), Partition({3, 2})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2}), Partition({2, 2, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2}), Partition({3, 1, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2}), Partition({2, 1, 1, 1})) == 0);
    // symmetry in the two added shapes
    for (const Partition& lambda : partitions_of(6))
        for (const Partition& nu : partitions_of(3))
            for (const Partition& mu : partitions_of(3))
                CHECK(lr_coefficient(nu, mu, lambda) == lr_coefficient(mu, nu, lambda));
}

TEST_CASE("disjoint supports multiply") {
    const Permutation eta = P({2, 1});
    const Permutation zeta = P({1, 2, 4, 3});
    CHECK(u_disjoint(eta, zeta));
    CHECK(check_disjoint(eta, zeta));
    CHECK_FALSE(u_disjoint(P({2, 1}), P({2, 1, 4, 3})));
    CHECK_THROWS_AS(check_disjoint(P({2, 1}), P({2, 1, 4, 3})), domain_error);

    const Permutation big = P({1, 3, 4, 2});  // letters {2,3,4}
    CHECK_FALSE(u_disjoint(P({2, 1}), big));
    CHECK(u_disjoint(P({2, 1}), P({1, 2, 3, 5, 4})));
    CHECK(check_disjoint(P({2, 1}), P({1, 2, 3, 5, 4})));
    CHECK(check_disjoint(P({2, 1}), P({1, 2, 4, 5, 3})));
    CHECK(check_disjoint(P({2, 3, 1}), P({1, 2, 3, 5, 6, 4})));
}

TEST_CASE("signed chain classes") {
    const auto trivial = d_lambda(Permutation::identity(), Partition{});
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].sign == 1);

    const auto occurrences = d_lambda(kZeta, Partition({2, 1, 1, 1}));
    CHECK(occurrences.size() == 9);
    std::int64_t sum = 0;
    for (const auto& occ : occurrences) sum += occ.sign;
    CHECK(sum == 1);

    // the signed sum always reproduces the constant
    for (const auto& zeta : symmetric_group(4)) {
        const int lu = universal_length(zeta);
        for (const Partition& lambda : partitions_of(lu)) {
            std::int64_t total = 0;
            for (const auto& occ : d_lambda(zeta, lambda)) total += occ.sign;
            CHECK(total == c_constant(zeta, lambda));
        }
    }
}

TEST_CASE("letter support") {
    CHECK(letter_support(Permutation::identity()).empty());
    CHECK(letter_support(P({2, 1})) == std::vector<int>{1, 2});
    CHECK(letter_support(kZeta) == std::vector<int>{1, 2, 3, 4, 5, 6});
}
