#include "bruhat/perm.hpp"

#include <algorithm>
#include <numeric>

namespace bruhat {

namespace {

void trim_trailing_fixed(std::vector<int>& w) {
    while (!w.empty() && w.back() == static_cast<int>(w.size()))
        w.pop_back();
}

} // namespace

Permutation::Permutation(std::vector<int> w, unchecked_t) : window_(std::move(w)) {
    trim_trailing_fixed(window_);
}

Permutation Permutation::from_window(std::vector<int> window) {
    const int m = static_cast<int>(window.size());
    std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
    for (int v : window) {
        if (v < 1 || v > m || seen[static_cast<size_t>(v)])
            throw domain_error("window is not a rearrangement of 1..m");
        seen[static_cast<size_t>(v)] = 1;
    }
    return Permutation(std::move(window), unchecked_t{});
}

Permutation Permutation::transposition(int a, int b) {
    if (a < 1 || b < 1 || a == b)
        throw domain_error("transposition needs two distinct positive integers");
    if (a > b) std::swap(a, b);
    std::vector<int> w(static_cast<size_t>(b));
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[static_cast<size_t>(a) - 1], w[static_cast<size_t>(b) - 1]);
    return Permutation(std::move(w), unchecked_t{});
}

Permutation Permutation::longest_element(int m) {
    if (m < 1) throw domain_error("longest_element needs m >= 1");
    std::vector<int> w(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) w[static_cast<size_t>(i)] = m - i;
    return Permutation(std::move(w), unchecked_t{});
}

std::vector<int> Permutation::window(int m) const {
    if (m < size()) throw domain_error("requested window shorter than support");
    std::vector<int> w = window_;
    w.reserve(static_cast<size_t>(m));
    for (int i = size() + 1; i <= m; ++i) w.push_back(i);
    return w;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    const int m = std::max(a.size(), b.size());
    std::vector<int> w(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) w[static_cast<size_t>(i) - 1] = a(b(i));
    return Permutation::from_window(std::move(w));
}

Permutation inverse(const Permutation& a) {
    const int m = a.size();
    std::vector<int> w(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) w[static_cast<size_t>(a(i)) - 1] = i;
    return Permutation::from_window(std::move(w));
}

int length(const Permutation& a) {
    const auto& w = a.window();
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

int sign(const Permutation& a) { return length(a) % 2 == 0 ? 1 : -1; }

UpDwFix up_dw_fix(const Permutation& z) {
    UpDwFix r;
    const Permutation zinv = inverse(z);
    for (int j = 1; j <= z.size(); ++j) {
        const int pre = zinv(j);
        if (pre < j)
            r.up.push_back(j);
        else if (pre > j)
            r.dw.push_back(j);
        else
            r.fix.push_back(j);
    }
    return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw domain_error("partition parts must be weakly decreasing and nonnegative");
    }
}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> t;
    if (!parts_.empty()) {
        t.resize(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c) ++t[static_cast<size_t>(c)];
    }
    return Partition(std::move(t));
}

int Composition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Permutation grassmannian(const Partition& lambda, int k) {
    if (k < 1) throw domain_error("grassmannian needs k >= 1");
    if (lambda.size() > k)
        throw domain_error("partition does not fit in k rows");
    std::vector<int> w(static_cast<size_t>(k));
    std::vector<char> used(static_cast<size_t>(k + lambda.part(1)) + 1, 0);
    for (int i = 1; i <= k; ++i) {
        w[static_cast<size_t>(i) - 1] = lambda.part(k + 1 - i) + i;
        used[static_cast<size_t>(w[static_cast<size_t>(i) - 1])] = 1;
    }
    for (int v = 1; v < static_cast<int>(used.size()); ++v)
        if (!used[static_cast<size_t>(v)]) w.push_back(v);
    return Permutation::from_window(std::move(w));
}

Permutation omega_conjugate(const Permutation& a, int m) {
    if (m < a.size())
        throw domain_error("omega_conjugate: m is smaller than the support bound");
    std::vector<int> w(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        w[static_cast<size_t>(i) - 1] = m + 1 - a(m + 1 - i);
    return Permutation::from_window(std::move(w));
}

Permutation phi_star(const Permutation& a, int pos) {
    if (pos < 1) throw domain_error("phi_star needs pos >= 1");
    const auto shift = [pos](int x) { return x < pos ? x : x + 1; };
    const int m = std::max(a.size() + 1, pos);
    std::vector<int> w(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        if (j == pos)
            w[static_cast<size_t>(j) - 1] = pos;
        else if (j < pos)
            w[static_cast<size_t>(j) - 1] = shift(a(j));
        else
            w[static_cast<size_t>(j) - 1] = shift(a(j - 1));
    }
    return Permutation::from_window(std::move(w));
}

std::vector<Permutation> symmetric_group(int n) {
    if (n < 0) throw domain_error("symmetric_group needs n >= 0");
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_window(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions_of needs n >= 0");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    return out;
}

} // namespace bruhat
