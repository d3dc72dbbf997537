#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "bruhat/errors.hpp"

namespace bruhat {

/// A finitely-supported permutation of {1,2,3,...}, stored as the window
/// (p(1),...,p(m)) with every i > m fixed. The window is kept canonical:
/// trailing fixed points are trimmed, so the identity has an empty window
/// and equality of values is equality of windows.
class Permutation {
public:
    /// Identity.
    Permutation() = default;

    /// Validates that `window` is a rearrangement of 1..m and canonicalizes.
    static Permutation from_window(std::vector<int> window);

    /// The transposition (a b), a != b, both >= 1.
    static Permutation transposition(int a, int b);

    /// Longest element (m, m-1, ..., 1) of S_m.
    static Permutation longest_element(int m);

    static Permutation identity() { return Permutation(); }

    /// Image of i (i >= 1); identity beyond the window.
    int operator()(int i) const {
        return i <= static_cast<int>(window_.size()) ? window_[i - 1] : i;
    }

    /// Canonical window length m (0 for the identity).
    int size() const { return static_cast<int>(window_.size()); }

    bool is_identity() const { return window_.empty(); }

    const std::vector<int>& window() const { return window_; }

    /// Window padded with fixed points up to length m >= size().
    std::vector<int> window(int m) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.window_ <=> b.window_;
    }

private:
    struct unchecked_t {};
    Permutation(std::vector<int> w, unchecked_t);
    std::vector<int> window_;
};

/// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

/// Coxeter length: number of inversions of the window.
int length(const Permutation& a);

/// (-1)^length(a).
int sign(const Permutation& a);

/// The partition {1..m} = up + dw + fix, where m = z.size(),
/// up(z) = {j : z^-1(j) < j}, dw(z) = {j : z^-1(j) > j}, the rest fixed.
/// All integers > m are implicitly in fix.
struct UpDwFix {
    std::vector<int> up;
    std::vector<int> dw;
    std::vector<int> fix;
};
UpDwFix up_dw_fix(const Permutation& z);

/// Integer partition: weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const {  // 1-based, 0 beyond the last part
        return (i >= 1 && i <= size()) ? parts_[i - 1] : 0;
    }
    int size() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Finite integer sequence; negative entries permitted.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int sum() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// The Grassmannian permutation v(lambda,k): v(i) = lambda_{k+1-i} + i for
/// i <= k, remaining values in increasing order; its only descent is at k.
/// Throws domain_error if lambda has more than k parts.
Permutation grassmannian(const Partition& lambda, int k);

/// omega_0 * a * omega_0 with omega_0 = (m,...,1); an involution on S_m.
/// Throws domain_error if a moves a point > m.
Permutation omega_conjugate(const Permutation& a, int m);

/// The shift embedding at `pos` (>= 1): the unique permutation fixing pos
/// whose action on the remaining points, renumbered around pos, is `a`.
Permutation phi_star(const Permutation& a, int pos);

/// All elements of S_n as windows of length <= n, in lexicographic window order.
std::vector<Permutation> symmetric_group(int n);

/// All partitions of n, in lexicographically decreasing order of parts.
std::vector<Partition> partitions_of(int n);

} // namespace bruhat
