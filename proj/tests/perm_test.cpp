#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bruhat/perm.hpp"

using namespace bruhat;

namespace {

Permutation P(std::vector<int> w) { return Permutation::from_window(std::move(w)); }

// code(v)(i) = #{j > i : v(j) < v(i)}
std::vector<int> lehmer_code(const Permutation& v, int m) {
    std::vector<int> code(static_cast<size_t>(m), 0);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (v(j) < v(i)) ++code[static_cast<size_t>(i) - 1];
    return code;
}

} // namespace

TEST_CASE("windows canonicalize and validate") {
    CHECK(P({}) == Permutation::identity());
    CHECK(P({1, 2, 3}) == Permutation::identity());
    CHECK(P({2, 1, 3}) == P({2, 1}));
    CHECK(P({2, 1}).size() == 2);
    CHECK(P({2, 1})(1) == 2);
    CHECK(P({2, 1})(7) == 7);
    CHECK_THROWS_AS(P({2, 2}), domain_error);
    CHECK_THROWS_AS(P({0, 1}), domain_error);
    CHECK_THROWS_AS(P({3, 1}), domain_error);
}

TEST_CASE("compose") {
    CHECK(compose(P({}), P({})) == Permutation::identity());
    CHECK(compose(P({2, 1}), P({2, 1})) == Permutation::identity());
    CHECK(compose(P({2, 5, 4, 1, 6, 3}), P({3, 1, 2, 5, 6, 4})) == P({4, 2, 5, 6, 3, 1}));
    // different supports extend automatically
    CHECK(compose(P({2, 1}), P({1, 3, 2})) == P({2, 3, 1}));
}

TEST_CASE("inverse") {
    CHECK(inverse(P({})) == Permutation::identity());
    CHECK(inverse(P({2, 3, 1})) == P({3, 1, 2}));
    CHECK(inverse(P({2, 5, 4, 1, 6, 3})) == P({4, 1, 6, 3, 2, 5}));
}

TEST_CASE("length and sign") {
    CHECK(length(P({})) == 0);
    CHECK(length(P({2, 1})) == 1);
    CHECK(length(P({4, 5, 6, 1, 2, 3})) == 9);
    CHECK(sign(P({})) == 1);
    CHECK(sign(P({2, 1})) == -1);
    CHECK(sign(P({2, 3, 1})) == 1);
}

TEST_CASE("group axioms on S_4, lengths under inverse on S_6 sample") {
    const auto s4 = symmetric_group(4);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<size_t> pick(0, s4.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = s4[pick(rng)];
        const auto& b = s4[pick(rng)];
        const auto& c = s4[pick(rng)];
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, inverse(a)) == Permutation::identity());
        CHECK(compose(inverse(a), a) == Permutation::identity());
    }
    const auto s6 = symmetric_group(6);
    std::uniform_int_distribution<size_t> pick6(0, s6.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& a = s6[pick6(rng)];
        CHECK(length(a) == length(inverse(a)));
        for (int i = 1; i <= 5; ++i) {
            const int diff = length(compose(a, Permutation::transposition(i, i + 1))) - length(a);
            CHECK((diff == 1 || diff == -1));
        }
    }
}

TEST_CASE("up/dw/fix") {
    const auto empty = up_dw_fix(Permutation::identity());
    CHECK(empty.up.empty());
    CHECK(empty.dw.empty());

    const auto sets = up_dw_fix(P({2, 5, 4, 1, 6, 3}));
    CHECK(sets.up == std::vector<int>{2, 4, 5, 6});
    CHECK(sets.dw == std::vector<int>{1, 3});
    CHECK(sets.fix.empty());

    const auto swap12 = up_dw_fix(P({2, 1}));
    CHECK(swap12.up == std::vector<int>{2});
    CHECK(swap12.dw == std::vector<int>{1});

    // |up| and |dw| differ in general
    const auto cyc = up_dw_fix(P({2, 3, 1}));
    CHECK(cyc.up == std::vector<int>{2, 3});
    CHECK(cyc.dw == std::vector<int>{1});

    // the three sets partition 1..m
    for (const auto& z : symmetric_group(5)) {
        const auto r = up_dw_fix(z);
        std::vector<int> all;
        all.insert(all.end(), r.up.begin(), r.up.end());
        all.insert(all.end(), r.dw.begin(), r.dw.end());
        all.insert(all.end(), r.fix.begin(), r.fix.end());
        std::sort(all.begin(), all.end());
        std::vector<int> expect(static_cast<size_t>(z.size()));
        std::iota(expect.begin(), expect.end(), 1);
        CHECK(all == expect);
    }
}

TEST_CASE("grassmannian") {
    CHECK(grassmannian(Partition{}, 1) == Permutation::identity());
    CHECK(grassmannian(Partition{}, 4) == Permutation::identity());
    CHECK(grassmannian(Partition({1}), 1) == P({2, 1}));
    CHECK(grassmannian(Partition({2, 1}), 2) == P({2, 4, 1, 3}));
    CHECK_THROWS_AS(grassmannian(Partition({1, 1}), 1), domain_error);

    // oracle: for lambda inside a 3x3 box and k = 3, the code of v read
    // backwards over the first k entries is lambda, and the only descent is k
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
                const Partition lambda({a, b, c});
                const Permutation v = grassmannian(lambda, 3);
                const int m = std::max(v.size(), 3 + a);
                const auto code = lehmer_code(v, m);
                std::vector<int> read;
                for (int i = 3; i >= 1; --i)
                    read.push_back(code[static_cast<size_t>(i) - 1]);
                CHECK(Partition(read) == lambda);
                for (int i = 1; i < m; ++i) {
                    const bool descent = v(i) > v(i + 1);
                    CHECK(descent == (i == 3 && !lambda.empty()));
                }
            }
}

TEST_CASE("omega conjugation") {
    CHECK(omega_conjugate(Permutation::identity(), 5) == Permutation::identity());
    CHECK(omega_conjugate(P({2, 1, 6, 4, 3, 5}), 6) == P({2, 4, 3, 1, 6, 5}));
    CHECK_THROWS_AS(omega_conjugate(P({2, 1, 6, 4, 3, 5}), 5), domain_error);
    for (const auto& a : symmetric_group(5))
        CHECK(omega_conjugate(omega_conjugate(a, 5), 5) == a);
}

TEST_CASE("phi_star") {
    CHECK(phi_star(Permutation::identity(), 3) == Permutation::identity());
    CHECK(phi_star(P({2, 1}), 1) == P({1, 3, 2}));
    CHECK(phi_star(P({2, 1}), 3) == P({2, 1}));
    // group monomorphism on pairs from S_5
    const auto s5 = symmetric_group(5);
    std::mt19937 rng(987123);
    std::uniform_int_distribution<size_t> pick(0, s5.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = s5[pick(rng)];
        const auto& b = s5[pick(rng)];
        for (int pos = 1; pos <= 6; ++pos) {
            CHECK(phi_star(compose(a, b), pos) ==
                  compose(phi_star(a, pos), phi_star(b, pos)));
        }
    }
    // injective on S_4
    const auto s4 = symmetric_group(4);
    for (const auto& a : s4)
        for (const auto& b : s4)
            if (a != b) CHECK(phi_star(a, 2) != phi_star(b, 2));
}

TEST_CASE("partitions") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition({2, 2, 1}).sum() == 5);
    CHECK(Partition({3, 0, 0}) == Partition({3}));
    CHECK_THROWS_AS(Partition({1, 2}), domain_error);
    CHECK_THROWS_AS(Partition({2, -1}), domain_error);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(9).size() == 30);
    // compositions may hold negatives
    CHECK(Composition({2, -1, 3}).sum() == 4);
}

TEST_CASE("symmetric group enumeration") {
    CHECK(symmetric_group(0).size() == 1);
    CHECK(symmetric_group(3).size() == 6);
    CHECK(symmetric_group(5).size() == 120);
    // canonical: the identity window collapses
    CHECK(symmetric_group(3).front() == Permutation::identity());
}
