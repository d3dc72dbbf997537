#pragma once

#include <compare>
#include <vector>

#include "bruhat/errors.hpp"

namespace bruhat {

/// Monoid generator u_{alpha,beta}, 0 < alpha < beta.
struct Generator {
    int alpha = 0;
    int beta = 0;

    Generator() = default;
    Generator(int a, int b) : alpha(a), beta(b) {
        if (!(0 < a && a < b))
            throw domain_error("generator needs 0 < alpha < beta");
    }

    friend bool operator==(const Generator&, const Generator&) = default;
    friend std::strong_ordering operator<=>(const Generator&, const Generator&) = default;
};

/// A product of generators, stored in application order: gens[0] acts first.
/// The written (paper) order is the reverse of the stored order.
struct Word {
    std::vector<Generator> gens;

    Word() = default;
    explicit Word(std::vector<Generator> g) : gens(std::move(g)) {}

    int length() const { return static_cast<int>(gens.size()); }
    bool empty() const { return gens.empty(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;
};

} // namespace bruhat
