#include "bruhat/monoid.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "bruhat/parallel.hpp"

namespace bruhat {

namespace {

int universal_length_closed(const Permutation& z) {
    const UpDwFix sets = up_dw_fix(z);
    const Permutation zinv = inverse(z);
    std::vector<int> pre_up, pre_dw;
    for (int j : sets.up) pre_up.push_back(zinv(j));
    for (int j : sets.dw) pre_dw.push_back(zinv(j));
    std::sort(pre_up.begin(), pre_up.end());
    std::sort(pre_dw.begin(), pre_dw.end());

    int crossings = 0;
    for (int i : sets.up)
        for (int j : sets.dw)
            if (i > j) ++crossings;
    int pre_crossings = 0;
    for (int i : pre_up)
        for (int j : pre_dw)
            if (i > j) ++pre_crossings;
    const auto inversions_within = [&z](const std::vector<int>& pos) {
        int inv = 0;
        for (size_t i = 0; i < pos.size(); ++i)
            for (size_t j = i + 1; j < pos.size(); ++j)
                if (z(pos[i]) > z(pos[j])) ++inv;
        return inv;
    };
    return crossings - pre_crossings - inversions_within(pre_up) - inversions_within(pre_dw);
}

} // namespace

MarkedInterval standard_interval(const Permutation& z) {
    const UpDwFix sets = up_dw_fix(z);
    const int m = z.size();
    std::vector<int> w;
    w.reserve(static_cast<size_t>(m));
    w.insert(w.end(), sets.up.begin(), sets.up.end());
    std::vector<char> in_up(static_cast<size_t>(m) + 1, 0);
    for (int j : sets.up) in_up[static_cast<size_t>(j)] = 1;
    for (int j = 1; j <= m; ++j)
        if (!in_up[static_cast<size_t>(j)]) w.push_back(j);
    const Permutation top = Permutation::from_window(std::move(w));
    Permutation bottom = compose(inverse(z), top);
    const int k = static_cast<int>(sets.up.size());
    if (!leq_k(bottom, top, k))
        throw internal_error("standard_interval: constructed interval is empty");
    return MarkedInterval{std::move(bottom), top, k};
}

int universal_length(const Permutation& z) {
    const int closed = universal_length_closed(z);
    const MarkedInterval iv = standard_interval(z);
    const int via_interval = length(iv.w) - length(iv.u);
    if (closed != via_interval)
        throw internal_error("universal_length: closed form disagrees with the interval route");
    return closed;
}

MaybePerm apply_generator(const Generator& g, const MaybePerm& h) {
    if (!h) return std::nullopt;
    Permutation moved = compose(Permutation::transposition(g.alpha, g.beta), *h);
    // raising the rank by one is necessary but not sufficient: the result
    // must also lie above h in the order (rank + comparability = cover)
    if (universal_length(moved) != universal_length(*h) + 1) return std::nullopt;
    if (!leq_universal(*h, moved)) return std::nullopt;
    return moved;
}

MaybePerm evaluate_word(const Word& x) {
    MaybePerm cur = Permutation::identity();
    for (const Generator& g : x.gens) {
        cur = apply_generator(g, cur);
        if (!cur) return std::nullopt;
    }
    return cur;
}

bool leq_universal(const Permutation& eta, const Permutation& zeta) {
    const MarkedInterval iv = standard_interval(zeta);
    const Permutation mid = compose(eta, iv.u);
    return leq_k(iv.u, mid, iv.k) && leq_k(mid, iv.w, iv.k);
}

bool leq_universal_conditions(const Permutation& eta, const Permutation& zeta) {
    const UpDwFix sets = up_dw_fix(zeta);
    const Permutation zinv = inverse(zeta);
    // preimages listed in window order of the standard interval, i.e. by
    // increasing zeta value
    std::vector<int> pre_up, pre_dw;
    for (int j : sets.up) pre_up.push_back(zinv(j));
    for (int j : sets.dw) pre_dw.push_back(zinv(j));
    for (int a : pre_up)
        if (!(a <= eta(a) && eta(a) <= zeta(a))) return false;
    for (int a : pre_dw)
        if (!(a >= eta(a) && eta(a) >= zeta(a))) return false;
    const auto relative_order_kept = [&](const std::vector<int>& pre) {
        for (size_t i = 0; i < pre.size(); ++i)
            for (size_t j = i + 1; j < pre.size(); ++j)
                if (pre[i] < pre[j] && eta(pre[i]) > eta(pre[j])) return false;
        return true;
    };
    return relative_order_kept(pre_up) && relative_order_kept(pre_dw);
}

std::vector<Word> reduced_words(const Permutation& z, std::int64_t max_chains) {
    const MarkedInterval iv = standard_interval(z);
    std::vector<Word> words;
    for (const Chain& c : all_chains(iv, max_chains))
        words.push_back(chain_to_word(c));
    std::sort(words.begin(), words.end());
    return words;
}

namespace {

bool intervals_commute(const Generator& g, const Generator& h) {
    // disjoint or strictly nested letter intervals
    if (g.beta < h.alpha || h.beta < g.alpha) return true;
    if (g.alpha < h.alpha && h.beta < g.beta) return true;
    if (h.alpha < g.alpha && g.beta < h.beta) return true;
    return false;
}

bool interleaved(const Generator& g, const Generator& h) {
    // relation (4): one naming (alpha,gamma), (beta,delta) with
    // alpha <= beta < gamma <= delta
    if (g.alpha <= h.alpha && h.alpha < g.beta && g.beta <= h.beta) return true;
    if (h.alpha <= g.alpha && g.alpha < h.beta && h.beta <= g.beta) return true;
    return false;
}

// Relations (1) and (2) on an application-order triple (t1 acts first).
// Returns all rewrites of the triple.
void triple_rewrites(const Generator& t1, const Generator& t2, const Generator& t3,
                     std::vector<std::array<Generator, 3>>& out) {
    // (1) forward: (a,c)(c,d)(b,c) -> (b,c)(a,b)(b,d), a < b < c < d
    if (t1.beta == t2.alpha && t3.beta == t1.beta && t1.alpha < t3.alpha) {
        const int a = t1.alpha, b = t3.alpha, c = t1.beta, d = t2.beta;
        out.push_back({Generator(b, c), Generator(a, b), Generator(b, d)});
    }
    // (1) backward: (b,c)(a,b)(b,d) -> (a,c)(c,d)(b,c), a < b < c < d
    if (t2.beta == t1.alpha && t3.alpha == t1.alpha && t1.beta < t3.beta) {
        const int a = t2.alpha, b = t1.alpha, c = t1.beta, d = t3.beta;
        out.push_back({Generator(a, c), Generator(c, d), Generator(b, c)});
    }
    // (2) forward: (b,c)(c,d)(a,c) -> (b,d)(a,b)(b,c), a < b < c < d
    if (t1.beta == t2.alpha && t3.beta == t1.beta && t3.alpha < t1.alpha) {
        const int a = t3.alpha, b = t1.alpha, c = t1.beta, d = t2.beta;
        out.push_back({Generator(b, d), Generator(a, b), Generator(b, c)});
    }
    // (2) backward: (b,d)(a,b)(b,c) -> (b,c)(c,d)(a,c), a < b < c < d
    if (t2.beta == t1.alpha && t3.alpha == t1.alpha && t3.beta < t1.beta) {
        const int a = t2.alpha, b = t1.alpha, c = t3.beta, d = t1.beta;
        out.push_back({Generator(b, c), Generator(c, d), Generator(a, c)});
    }
}

} // namespace

bool has_zero_pattern(const Word& x) {
    const auto& g = x.gens;
    for (size_t i = 0; i + 1 < g.size(); ++i)
        if (interleaved(g[i], g[i + 1])) return true;
    for (size_t i = 0; i + 2 < g.size(); ++i) {
        if (g[i] == g[i + 2] &&
            (g[i + 1].beta == g[i].alpha || g[i + 1].alpha == g[i].beta))
            return true;
    }
    return false;
}

std::vector<Word> rewrite_neighbors(const Word& x) {
    const MaybePerm value = evaluate_word(x);
    if (!value)
        throw domain_error("rewrite_neighbors: word evaluates to zero");
    if (has_zero_pattern(x))
        throw internal_error("rewrite_neighbors: zero relation matches a u-reduced word");

    std::set<Word> found;
    const auto& g = x.gens;
    for (size_t i = 0; i + 1 < g.size(); ++i) {
        if (intervals_commute(g[i], g[i + 1])) {
            Word y = x;
            std::swap(y.gens[i], y.gens[i + 1]);
            found.insert(std::move(y));
        }
    }
    std::vector<std::array<Generator, 3>> triples;
    for (size_t i = 0; i + 2 < g.size(); ++i) {
        triples.clear();
        triple_rewrites(g[i], g[i + 1], g[i + 2], triples);
        for (const auto& t : triples) {
            Word y = x;
            y.gens[i] = t[0];
            y.gens[i + 1] = t[1];
            y.gens[i + 2] = t[2];
            found.insert(std::move(y));
        }
    }
    for (const Word& y : found)
        if (evaluate_word(y) != value)
            throw internal_error("rewrite_neighbors: relation changed the evaluation");
    return std::vector<Word>(found.begin(), found.end());
}

std::vector<Word> rewrite_closure(const Word& x) {
    std::set<Word> seen{x};
    std::vector<Word> queue{x};
    while (!queue.empty()) {
        Word cur = std::move(queue.back());
        queue.pop_back();
        for (Word& y : rewrite_neighbors(cur))
            if (seen.insert(y).second) queue.push_back(std::move(y));
    }
    return std::vector<Word>(seen.begin(), seen.end());
}

HasseGraph hasse_interval(const Permutation& z) {
    const MarkedInterval iv = standard_interval(z);
    const Permutation uinv = inverse(iv.u);
    HasseGraph g = interval_graph(iv);
    for (Permutation& node : g.nodes) node = compose(node, uinv);
    return g;
}

std::int64_t mobius(const Permutation& z) {
    const MarkedInterval iv = standard_interval(z);
    const HasseGraph g = interval_graph(iv);
    const size_t n = g.nodes.size();
    // nodes are sorted by rank, so each mu value only needs earlier ones
    std::vector<std::int64_t> mu(n, 0);
    for (size_t x = 0; x < n; ++x) {
        if (x == 0) {
            mu[0] = 1;
            continue;
        }
        std::int64_t acc = 0;
        for (size_t y = 0; y < x; ++y)
            if (leq_k(g.nodes[y], g.nodes[x], iv.k)) acc += mu[y];
        mu[x] = -acc;
    }
    return mu[n - 1];
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const std::int64_t a = c > 0 ? c : -c;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a;
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial rank_polynomial(int n, int max_n) {
    if (n < 1) throw domain_error("rank_polynomial needs n >= 1");
    if (n > max_n) throw resource_error("rank_polynomial: n exceeds the configured bound");
    const std::vector<Permutation> group = symmetric_group(n);
    const auto ranks = parallel_map<int>(
        static_cast<std::int64_t>(group.size()),
        [&group](std::int64_t i) { return universal_length(group[static_cast<size_t>(i)]); });
    std::vector<std::int64_t> coeffs;
    for (int r : ranks) {
        if (r >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(r) + 1, 0);
        ++coeffs[static_cast<size_t>(r)];
    }
    return IntPolynomial(std::move(coeffs));
}

} // namespace bruhat
