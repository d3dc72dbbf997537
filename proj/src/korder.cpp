#include "bruhat/korder.hpp"

#include <algorithm>
#include <map>

namespace bruhat {

bool leq_k(const Permutation& u, const Permutation& w, int k) {
    if (k < 0) throw domain_error("leq_k needs k >= 0");
    const int m = std::max({u.size(), w.size(), k});
    for (int i = 1; i <= m; ++i) {
        if (i <= k) {
            if (u(i) > w(i)) return false;
        } else {
            if (u(i) < w(i)) return false;
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            if (j <= k || i > k) {
                if (u(i) < u(j) && w(i) > w(j)) return false;
            }
        }
    }
    return true;
}

MarkedInterval MarkedInterval::make(Permutation u, Permutation w, int k) {
    if (!leq_k(u, w, k))
        throw domain_error("u is not below w in the k-Bruhat order");
    return MarkedInterval{std::move(u), std::move(w), k};
}

int MarkedInterval::support_bound() const {
    return std::max({u.size(), w.size(), k});
}

std::pair<int, int> Chain::step_positions(int i) const {
    if (i < 1 || i > length()) throw domain_error("chain step index out of range");
    const Permutation& p = perms[static_cast<size_t>(i) - 1];
    const Permutation& q = perms[static_cast<size_t>(i)];
    const int m = std::max(p.size(), q.size());
    int a = 0, b = 0;
    for (int pos = 1; pos <= m; ++pos) {
        if (p(pos) != q(pos)) {
            if (a == 0)
                a = pos;
            else if (b == 0)
                b = pos;
            else
                throw internal_error("chain step moves more than two positions");
        }
    }
    if (a == 0 || b == 0) throw internal_error("chain step is not a transposition");
    return {a, b};
}

Generator Chain::step_generator(int i) const {
    const auto [a, b] = step_positions(i);
    const Permutation& p = perms[static_cast<size_t>(i) - 1];
    const int x = p(a), y = p(b);
    return Generator(std::min(x, y), std::max(x, y));
}

namespace {

Permutation swap_positions(const Permutation& u, int a, int b) {
    return compose(u, Permutation::transposition(a, b));
}

} // namespace

std::vector<CoverEdge> covers_k(const Permutation& u, int k, const Permutation& ceiling) {
    if (!leq_k(u, ceiling, k))
        throw domain_error("covers_k: u is not below the ceiling");
    const int m = std::max({u.size(), ceiling.size(), k});
    std::vector<CoverEdge> out;
    for (int a = 1; a <= k; ++a) {
        for (int b = k + 1; b <= m; ++b) {
            if (u(a) >= u(b)) continue;
            bool cover = true;  // Monk: no value between u(a) and u(b) sits between a and b
            for (int c = a + 1; c < b && cover; ++c)
                if (u(a) < u(c) && u(c) < u(b)) cover = false;
            if (!cover) continue;
            Permutation v = swap_positions(u, a, b);
            if (!leq_k(v, ceiling, k)) continue;
            out.push_back(CoverEdge{std::move(v), Generator(u(a), u(b))});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CoverEdge& x, const CoverEdge& y) { return x.gen < y.gen; });
    return out;
}

Chain cm_chain(const MarkedInterval& iv) {
    Chain c;
    c.perms.push_back(iv.u);
    Permutation u = iv.u;
    const Permutation& w = iv.w;
    const int k = iv.k;
    const int m = iv.support_bound();
    while (u != w) {
        int a = 0;
        for (int j = 1; j <= k; ++j)
            if (u(j) < w(j) && (a == 0 || w(j) > w(a))) a = j;
        if (a == 0) throw internal_error("cm_chain: no position satisfies condition I");
        int b = 0;
        for (int j = k + 1; j <= m; ++j)
            if (u(j) > u(a) && u(a) >= w(j) && (b == 0 || w(j) < w(b))) b = j;
        if (b == 0) throw internal_error("cm_chain: no position satisfies condition II");
        Permutation next = swap_positions(u, a, b);
        if (length(next) != length(u) + 1 || !leq_k(next, w, k))
            throw internal_error("cm_chain: selected step is not a cover in the interval");
        c.perms.push_back(next);
        u = std::move(next);
    }
    return c;
}

Chain dcm_chain(const MarkedInterval& iv) {
    Chain c;
    c.perms.push_back(iv.u);
    Permutation u = iv.u;
    const Permutation& w = iv.w;
    const int k = iv.k;
    const int m = iv.support_bound();
    while (u != w) {
        int b = 0;
        for (int j = k + 1; j <= m; ++j)
            if (u(j) > w(j) && (b == 0 || w(j) < w(b))) b = j;
        if (b == 0) throw internal_error("dcm_chain: no position satisfies condition I'");
        int a = 0;
        for (int j = 1; j <= k; ++j)
            if (u(j) < u(b) && u(b) <= w(j) && (a == 0 || w(j) > w(a))) a = j;
        if (a == 0) throw internal_error("dcm_chain: no position satisfies condition II'");
        Permutation next = swap_positions(u, a, b);
        if (length(next) != length(u) + 1 || !leq_k(next, w, k))
            throw internal_error("dcm_chain: selected step is not a cover in the interval");
        c.perms.push_back(next);
        u = std::move(next);
    }
    return c;
}

Chain dcm_chain_via_omega(const MarkedInterval& iv) {
    const int m = iv.support_bound();
    const MarkedInterval mirror = MarkedInterval::make(
        omega_conjugate(iv.u, m), omega_conjugate(iv.w, m), m - iv.k);
    Chain cm = cm_chain(mirror);
    Chain out;
    out.perms.reserve(cm.perms.size());
    for (const Permutation& p : cm.perms)
        out.perms.push_back(omega_conjugate(p, m));
    return out;
}

std::set<std::pair<int, int>> chain_inversions(const Chain& c, const Permutation& w) {
    if (c.perms.empty() || c.top() != w)
        throw domain_error("chain_inversions: chain does not end at w");
    const int n = c.length();
    std::vector<int> wa(static_cast<size_t>(n) + 1), wb(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        const auto [a, b] = c.step_positions(i);
        wa[static_cast<size_t>(i)] = w(a);
        wb[static_cast<size_t>(i)] = w(b);
    }
    std::set<std::pair<int, int>> inv;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (wa[static_cast<size_t>(i)] < wa[static_cast<size_t>(j)] ||
                (wa[static_cast<size_t>(i)] == wa[static_cast<size_t>(j)] &&
                 wb[static_cast<size_t>(i)] > wb[static_cast<size_t>(j)]))
                inv.emplace(i, j);
    return inv;
}

namespace {

void chains_dfs(const Permutation& u, const MarkedInterval& iv, Chain& partial,
                std::vector<Chain>& out, std::int64_t max_chains) {
    if (u == iv.w) {
        if (static_cast<std::int64_t>(out.size()) >= max_chains)
            throw resource_error("all_chains: chain cap exceeded");
        out.push_back(partial);
        return;
    }
    for (const CoverEdge& e : covers_k(u, iv.k, iv.w)) {
        partial.perms.push_back(e.target);
        chains_dfs(e.target, iv, partial, out, max_chains);
        partial.perms.pop_back();
    }
}

} // namespace

std::vector<Chain> all_chains(const MarkedInterval& iv, std::int64_t max_chains) {
    // counting first keeps a too-large enumeration from building up memory
    if (count_chains(iv) > max_chains)
        throw resource_error("all_chains: chain cap exceeded");
    std::vector<Chain> out;
    Chain partial;
    partial.perms.push_back(iv.u);
    chains_dfs(iv.u, iv, partial, out, max_chains);
    return out;
}

namespace {

std::int64_t count_rec(const Permutation& u, const MarkedInterval& iv,
                       std::map<Permutation, std::int64_t>& memo) {
    if (u == iv.w) return 1;
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (const CoverEdge& e : covers_k(u, iv.k, iv.w))
        total += count_rec(e.target, iv, memo);
    memo.emplace(u, total);
    return total;
}

} // namespace

std::int64_t count_chains(const MarkedInterval& iv) {
    std::map<Permutation, std::int64_t> memo;
    return count_rec(iv.u, iv, memo);
}

Word chain_to_word(const Chain& c) {
    Word x;
    x.gens.reserve(static_cast<size_t>(c.length()));
    for (int i = 1; i <= c.length(); ++i) x.gens.push_back(c.step_generator(i));
    return x;
}

Chain word_to_chain(const Word& x, const Permutation& u, int k) {
    Chain c;
    c.perms.push_back(u);
    Permutation cur = u;
    for (const Generator& g : x.gens) {
        const Permutation next = compose(Permutation::transposition(g.alpha, g.beta), cur);
        const int a = inverse(cur)(g.alpha);
        const int b = inverse(cur)(g.beta);
        const bool positions_ok = std::min(a, b) <= k && k < std::max(a, b);
        if (!positions_ok || length(next) != length(cur) + 1)
            throw domain_error("word_to_chain: step is not a k-Bruhat cover");
        c.perms.push_back(next);
        cur = next;
    }
    return c;
}

HasseGraph interval_graph(const MarkedInterval& iv) {
    // BFS from u over covers below w, then sort nodes by (rank, window).
    std::vector<Permutation> nodes{iv.u};
    std::map<Permutation, int> index{{iv.u, 0}};
    std::vector<std::pair<std::pair<int, int>, Generator>> raw_edges;
    for (size_t head = 0; head < nodes.size(); ++head) {
        const Permutation from = nodes[head];
        for (const CoverEdge& e : covers_k(from, iv.k, iv.w)) {
            auto [it, inserted] = index.try_emplace(e.target, static_cast<int>(nodes.size()));
            if (inserted) nodes.push_back(e.target);
            raw_edges.push_back({{index[from], it->second}, e.gen});
        }
    }
    std::vector<int> order(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int la = length(nodes[static_cast<size_t>(a)]);
        const int lb = length(nodes[static_cast<size_t>(b)]);
        if (la != lb) return la < lb;
        return nodes[static_cast<size_t>(a)] < nodes[static_cast<size_t>(b)];
    });
    std::vector<int> rank(nodes.size());
    for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);

    HasseGraph g;
    g.nodes.reserve(nodes.size());
    for (int idx : order) g.nodes.push_back(nodes[static_cast<size_t>(idx)]);
    for (const auto& [ft, gen] : raw_edges)
        g.edges.push_back(HasseGraph::Edge{rank[static_cast<size_t>(ft.first)],
                                           rank[static_cast<size_t>(ft.second)], gen});
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.gen < b.gen;
    });
    return g;
}

} // namespace bruhat
