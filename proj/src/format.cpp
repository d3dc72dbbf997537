#include "bruhat/format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bruhat::io {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
    std::string buf;
    for (char ch : text)
        if (ch != ' ') buf.push_back(ch);
    std::vector<int> out;
    size_t start = 0;
    while (start < buf.size()) {
        size_t comma = buf.find(',', start);
        if (comma == std::string::npos) comma = buf.size();
        int value = 0;
        const auto [ptr, ec] =
            std::from_chars(buf.data() + start, buf.data() + comma, value);
        if (ec != std::errc() || ptr != buf.data() + comma)
            throw domain_error("expected a comma-separated list of integers");
        out.push_back(value);
        start = comma + 1;
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

} // namespace

Permutation parse_permutation(std::string_view text) {
    return Permutation::from_window(parse_int_list(text));
}

std::string format_permutation(const Permutation& p) {
    if (p.is_identity()) return "1";
    return join_ints(p.window());
}

Partition parse_partition(std::string_view text) {
    return Partition(parse_int_list(text));
}

std::string format_partition(const Partition& p) {
    return join_ints(p.parts());
}

Composition parse_composition(std::string_view text) {
    return Composition(parse_int_list(text));
}

std::string format_composition(const Composition& p) {
    return join_ints(p.parts());
}

Word parse_word(std::string_view text, WordOrder order) {
    std::vector<Generator> gens;
    size_t at = 0;
    const auto skip_space = [&] {
        while (at < text.size() && (text[at] == ' ' || text[at] == '\t')) ++at;
    };
    skip_space();
    while (at < text.size()) {
        if (text[at] != 'u' || at + 1 >= text.size() || text[at + 1] != '[')
            throw domain_error("expected a factor of the form u[a,b]");
        at += 2;
        const size_t close = text.find(']', at);
        if (close == std::string_view::npos)
            throw domain_error("unterminated factor in word");
        const std::vector<int> pair = parse_int_list(text.substr(at, close - at));
        if (pair.size() != 2) throw domain_error("a factor needs two letters");
        gens.emplace_back(pair[0], pair[1]);
        at = close + 1;
        skip_space();
    }
    if (order == WordOrder::paper) std::reverse(gens.begin(), gens.end());
    return Word(std::move(gens));
}

std::string format_word(const Word& x, WordOrder order) {
    std::ostringstream os;
    const int n = x.length();
    for (int i = 0; i < n; ++i) {
        const Generator& g = order == WordOrder::paper
                                 ? x.gens[static_cast<size_t>(n - 1 - i)]
                                 : x.gens[static_cast<size_t>(i)];
        if (i) os << " ";
        os << "u[" << g.alpha << "," << g.beta << "]";
    }
    return os.str();
}

json word_to_json(const Word& x, WordOrder order) {
    json gens = json::array();
    const int n = x.length();
    for (int i = 0; i < n; ++i) {
        const Generator& g = order == WordOrder::paper
                                 ? x.gens[static_cast<size_t>(n - 1 - i)]
                                 : x.gens[static_cast<size_t>(i)];
        gens.push_back(json::array({g.alpha, g.beta}));
    }
    return json{{"gens", std::move(gens)},
                {"order", order == WordOrder::paper ? "paper" : "application"}};
}

Word word_from_json(const json& j) {
    std::vector<Generator> gens;
    for (const auto& pair : j.at("gens"))
        gens.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    if (j.value("order", "application") == "paper")
        std::reverse(gens.begin(), gens.end());
    return Word(std::move(gens));
}

json chain_to_json(const Chain& c, int k) {
    int m = k;
    for (const auto& p : c.perms) m = std::max(m, p.size());
    json steps = json::array();
    for (int i = 1; i <= c.length(); ++i) {
        const Generator g = c.step_generator(i);
        steps.push_back(json{{"perm", c.perms[static_cast<size_t>(i)].window(m)},
                             {"gen", json::array({g.alpha, g.beta})}});
    }
    return json{{"u", c.bottom().window(m)},
                {"w", c.top().window(m)},
                {"k", k},
                {"steps", std::move(steps)}};
}

Chain chain_from_json(const json& j, int* k_out) {
    Chain c;
    c.perms.push_back(Permutation::from_window(j.at("u").get<std::vector<int>>()));
    Word x;
    for (const auto& step : j.at("steps")) {
        const auto& gen = step.at("gen");
        x.gens.emplace_back(gen.at(0).get<int>(), gen.at(1).get<int>());
    }
    const int k = j.at("k").get<int>();
    if (k_out) *k_out = k;
    Chain rebuilt = word_to_chain(x, c.bottom(), k);
    const auto w = Permutation::from_window(j.at("w").get<std::vector<int>>());
    if (rebuilt.top() != w)
        throw domain_error("chain does not end at the recorded top");
    for (size_t i = 1; i < rebuilt.perms.size(); ++i) {
        const auto recorded = j.at("steps")[i - 1].at("perm").get<std::vector<int>>();
        if (Permutation::from_window(recorded) != rebuilt.perms[i])
            throw domain_error("chain step disagrees with its generator");
    }
    return rebuilt;
}

json report_to_json(const ConstantsReport& r) {
    json entries = json::array();
    for (const auto& [lambda, value] : r.entries)
        entries.push_back(json{{"lambda", lambda.parts()}, {"value", value}});
    return json{{"zeta", r.zeta.window()},
                {"lu", r.lu},
                {"chains", r.total_chains},
                {"c", std::move(entries)},
                {"identity_ok", r.identity_ok}};
}

ConstantsReport report_from_json(const json& j) {
    ConstantsReport r;
    r.zeta = Permutation::from_window(j.at("zeta").get<std::vector<int>>());
    r.lu = j.at("lu").get<int>();
    r.total_chains = j.at("chains").get<std::int64_t>();
    for (const auto& entry : j.at("c"))
        r.entries.emplace_back(Partition(entry.at("lambda").get<std::vector<int>>()),
                               entry.at("value").get<std::int64_t>());
    r.identity_ok = j.at("identity_ok").get<bool>();
    return r;
}

namespace {

std::string node_name(const Permutation& p, int m) {
    if (m == 0) return "1";
    const std::vector<int> w = p.window(m);
    if (m > 9) return join_ints(w);
    std::string s;
    for (int v : w) s.push_back(static_cast<char>('0' + v));
    return s;
}

} // namespace

std::string to_dot(const HasseGraph& g) {
    int m = 0;
    for (const Permutation& p : g.nodes) m = std::max(m, p.size());
    std::ostringstream os;
    os << "digraph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (const Permutation& p : g.nodes)
        os << "  \"" << node_name(p, m) << "\";\n";
    for (const auto& e : g.edges)
        os << "  \"" << node_name(g.nodes[static_cast<size_t>(e.from)], m) << "\" -> \""
           << node_name(g.nodes[static_cast<size_t>(e.to)], m) << "\" [label=\""
           << e.gen.alpha << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace bruhat::io
