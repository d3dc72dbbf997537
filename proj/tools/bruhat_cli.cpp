// Command-line front end: every engine capability behind one binary.
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal invariant.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bruhat/constants.hpp"
#include "bruhat/format.hpp"
#include "bruhat/insertion.hpp"
#include "bruhat/korder.hpp"
#include "bruhat/monoid.hpp"
#include "bruhat/parallel.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/verify.hpp"

namespace {

using namespace bruhat;
namespace io = bruhat::io;

struct Options {
    std::string u, w, z, lambda, word;
    int k = 0;
    int n = 0;
    std::string eta;
    bool json = false;
    bool dot = false;
    std::string order;  // empty = the format's own default
    // resource guards
    int max_n = 9;
    std::int64_t max_chains = 1000000;
    int threads = 0;
};

// text reads best in paper order, json defaults to application order
io::WordOrder word_order(const Options& opt, io::WordOrder fallback) {
    if (opt.order.empty()) return fallback;
    if (opt.order == "paper") return io::WordOrder::paper;
    if (opt.order == "application") return io::WordOrder::application;
    throw domain_error("--order must be paper or application");
}

MarkedInterval interval_from(const Options& opt) {
    return MarkedInterval::make(io::parse_permutation(opt.u),
                                io::parse_permutation(opt.w), opt.k);
}

void print_chain_text(const Chain& c) {
    int m = 0;
    for (const auto& p : c.perms) m = std::max(m, p.size());
    for (const auto& p : c.perms) {
        const std::vector<int> w = p.window(m);
        for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
        std::cout << "\n";
    }
    std::cout << "word: " << io::format_word(chain_to_word(c)) << "\n";
}

int run_chain(const std::string& kind, const Options& opt) {
    const MarkedInterval iv = interval_from(opt);
    if (kind == "all") {
        const auto chains = all_chains(iv, opt.max_chains);
        if (opt.dot) {
            std::cout << io::to_dot(interval_graph(iv));
        } else if (opt.json) {
            io::json j;
            j["count"] = chains.size();
            j["chains"] = io::json::array();
            for (const auto& c : chains) j["chains"].push_back(io::chain_to_json(c, iv.k));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << chains.size() << "\n";
            for (const auto& c : chains)
                std::cout << io::format_word(chain_to_word(c)) << "\n";
        }
        return 0;
    }
    const Chain c = kind == "cm" ? cm_chain(iv) : dcm_chain(iv);
    if (opt.dot)
        std::cout << io::to_dot(interval_graph(iv));
    else if (opt.json)
        std::cout << io::chain_to_json(c, iv.k).dump(2) << "\n";
    else
        print_chain_text(c);
    return 0;
}

int run_universal(const std::string& kind, const Options& opt) {
    const Permutation zeta = io::parse_permutation(opt.z);
    if (kind == "length") {
        std::cout << universal_length(zeta) << "\n";
    } else if (kind == "interval") {
        const MarkedInterval iv = standard_interval(zeta);
        if (opt.dot) {
            std::cout << io::to_dot(hasse_interval(zeta));
        } else {
            const int m = iv.support_bound();
            const auto padded = [m](const Permutation& p) {
                std::string s;
                for (int v : p.window(m)) s += (s.empty() ? "" : ",") + std::to_string(v);
                return s.empty() ? std::string("1") : s;
            };
            std::cout << "u=" << padded(iv.u) << "\n"
                      << "w=" << padded(iv.w) << "\n"
                      << "k=" << iv.k << "\n";
        }
    } else if (kind == "words") {
        const auto words = reduced_words(zeta, opt.max_chains);
        if (opt.json) {
            io::json j = io::json::array();
            const io::WordOrder ord = word_order(opt, io::WordOrder::application);
            for (const Word& x : words) j.push_back(io::word_to_json(x, ord));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << words.size() << "\n";
            for (const Word& x : words)
                std::cout << io::format_word(x, word_order(opt, io::WordOrder::paper)) << "\n";
        }
    } else {  // mobius
        std::cout << mobius(zeta) << "\n";
    }
    return 0;
}

int run_const(const std::string& kind, const Options& opt) {
    if (kind == "c") {
        const Permutation zeta = io::parse_permutation(opt.z);
        const Partition lambda = io::parse_partition(opt.lambda);
        if (lambda.sum() != universal_length(zeta)) {
            std::cout << 0 << "\n";
            return 0;
        }
        std::cout << c_constant(reduced_words(zeta, opt.max_chains), lambda) << "\n";
    } else if (kind == "table") {
        const ConstantsReport rep =
            verify_identity(io::parse_permutation(opt.z), opt.max_chains);
        if (opt.json) {
            std::cout << io::report_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "zeta=" << io::format_permutation(rep.zeta) << " rank=" << rep.lu
                      << " chains=" << rep.total_chains << "\n";
            for (const auto& [lambda, value] : rep.entries)
                std::cout << "c[" << io::format_partition(lambda) << "] = " << value
                          << "\n";
            std::cout << (rep.identity_ok ? "identity ok" : "identity FAILED") << "\n";
        }
    } else {  // schubert
        std::cout << schubert_coeff(io::parse_permutation(opt.u),
                                    io::parse_partition(opt.lambda), opt.k,
                                    io::parse_permutation(opt.w))
                  << "\n";
    }
    return 0;
}

int run_insert(const Options& opt) {
    const Word x = io::parse_word(opt.word, word_order(opt, io::WordOrder::paper));
    std::vector<RuleApplication> trace;
    const Word y = insert(x, &trace);
    for (const auto& step : trace)
        std::cout << "pos=" << step.pos << " rule=" << rule_name(step.rule)
                  << " before=" << io::format_word(step.before, word_order(opt, io::WordOrder::paper))
                  << " after=" << io::format_word(step.after, word_order(opt, io::WordOrder::paper)) << "\n";
    std::cout << io::format_word(y, word_order(opt, io::WordOrder::paper)) << "\n";
    return 0;
}

int run_check(const std::string& kind, const Options& opt) {
    if (kind == "symmetries") {
        if (opt.n > opt.max_n)
            throw resource_error("n exceeds --max-n");
        for (const auto& zeta : symmetric_group(opt.n)) {
            const int rank = universal_length(zeta);
            const auto words = reduced_words(zeta, opt.max_chains);
            const auto words_inv = reduced_words(inverse(zeta), opt.max_chains);
            const auto words_conj =
                reduced_words(omega_conjugate(zeta, opt.n), opt.max_chains);
            std::vector<std::vector<Word>> shifted;
            for (int a = 1; a <= opt.n + 1; ++a)
                shifted.push_back(reduced_words(phi_star(zeta, a), opt.max_chains));
            for (const Partition& lambda : partitions_of(rank)) {
                const std::int64_t c = c_constant(words, lambda);
                if (c != c_constant(words_inv, lambda.conjugate()) ||
                    c != c_constant(words_conj, lambda.conjugate())) {
                    std::cout << "symmetry failed at zeta="
                              << io::format_permutation(zeta) << "\n";
                    return 1;
                }
                for (size_t a = 0; a < shifted.size(); ++a) {
                    if (c != c_constant(shifted[a], lambda)) {
                        std::cout << "shift symmetry failed at zeta="
                                  << io::format_permutation(zeta) << " a=" << a + 1
                                  << "\n";
                        return 1;
                    }
                }
            }
        }
        std::cout << "ok\n";
    } else if (kind == "cyclic") {
        if (opt.n > opt.max_n)
            throw resource_error("n exceeds --max-n");
        for (const auto& zeta : symmetric_group(opt.n)) {
            if (!check_cyclic(zeta, opt.n)) {
                std::cout << "cyclic invariance failed at zeta="
                          << io::format_permutation(zeta) << "\n";
                return 1;
            }
        }
        std::cout << "ok\n";
    } else {  // disjoint
        const Permutation eta = io::parse_permutation(opt.eta);
        const Permutation zeta = io::parse_permutation(opt.z);
        const bool ok = check_disjoint(eta, zeta);
        const Permutation product = compose(zeta, eta);
        const auto words = reduced_words(product, opt.max_chains);
        for (const Partition& lambda : partitions_of(universal_length(product)))
            std::cout << "c[" << io::format_partition(lambda)
                      << "] = " << c_constant(words, lambda) << "\n";
        std::cout << (ok ? "ok" : "identity FAILED") << "\n";
        return ok ? 0 : 1;
    }
    return 0;
}

int run_verify_paper() {
    const auto results = bruhat::verify::run_all();
    for (const auto& r : results) {
        std::printf("%s  %-48s %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    }
    return bruhat::verify::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics engine for k-Bruhat orders, chain enumeration and "
                 "Schubert-times-Schur structure constants"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--max-n", opt.max_n, "largest symmetric group swept")
        ->capture_default_str();
    app.add_option("--max-chains", opt.max_chains, "cap on enumerated chains")
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker cap (default BRUHAT_THREADS or 1)");

    auto* order = app.add_subcommand("order", "order comparisons");
    auto* leqk = order->add_subcommand("leq-k", "is u below w in the k-Bruhat order");
    leqk->add_option("-u", opt.u, "lower permutation")->required();
    leqk->add_option("-w", opt.w, "upper permutation")->required();
    leqk->add_option("-k", opt.k, "column bound")->required();

    auto* chain = app.add_subcommand("chain", "chains of an interval [u,w]_k");
    for (const char* kind : {"cm", "dcm", "all"}) {
        auto* sub = chain->add_subcommand(kind);
        sub->add_option("-u", opt.u)->required();
        sub->add_option("-w", opt.w)->required();
        sub->add_option("-k", opt.k)->required();
        sub->add_flag("--json", opt.json);
        sub->add_flag("--dot", opt.dot);
    }

    auto* universal = app.add_subcommand("universal", "the universal order");
    for (const char* kind : {"length", "interval", "words", "mobius"}) {
        auto* sub = universal->add_subcommand(kind);
        sub->add_option("zeta", opt.z)->required();
        if (std::string(kind) == "interval") sub->add_flag("--dot", opt.dot);
        if (std::string(kind) == "words") {
            sub->add_flag("--json", opt.json);
            sub->add_option("--order", opt.order, "paper or application");
        }
    }

    auto* cons = app.add_subcommand("const", "structure constants");
    auto* cc = cons->add_subcommand("c", "one constant c_lambda^zeta");
    cc->add_option("-z", opt.z)->required();
    cc->add_option("-l", opt.lambda)->required();
    auto* table = cons->add_subcommand("table", "all constants and the chain identity");
    table->add_option("-z", opt.z)->required();
    table->add_flag("--json", opt.json);
    auto* schubert = cons->add_subcommand("schubert", "coefficient c_{u,v(lambda,k)}^w");
    schubert->add_option("-u", opt.u)->required();
    schubert->add_option("-l", opt.lambda)->required();
    schubert->add_option("-k", opt.k)->required();
    schubert->add_option("-w", opt.w)->required();

    auto* poly = app.add_subcommand("poly", "rank generating polynomial of S_n");
    poly->add_option("-n", opt.n)->required();

    auto* ins = app.add_subcommand("insert", "insertion from the (1,n) class");
    ins->add_option("-x", opt.word, "word, e.g. \"u[3,4] u[2,3] u[4,5] u[1,4]\"")
        ->required();
    ins->add_option("--order", opt.order, "paper or application");

    auto* check = app.add_subcommand("check", "exhaustive identity sweeps");
    auto* sym = check->add_subcommand("symmetries");
    sym->add_option("-n", opt.n)->required();
    auto* cyc = check->add_subcommand("cyclic");
    cyc->add_option("-n", opt.n)->required();
    auto* dis = check->add_subcommand("disjoint");
    dis->add_option("-e", opt.eta, "first factor")->required();
    dis->add_option("-z", opt.z, "second factor")->required();

    app.add_subcommand("verify-paper", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (opt.threads > 0) set_max_threads(opt.threads);

    try {
        if (order->parsed()) {
            std::cout << (leq_k(io::parse_permutation(opt.u), io::parse_permutation(opt.w),
                                opt.k)
                              ? "true"
                              : "false")
                      << "\n";
            return 0;
        }
        if (chain->parsed())
            return run_chain(chain->get_subcommands().at(0)->get_name(), opt);
        if (universal->parsed())
            return run_universal(universal->get_subcommands().at(0)->get_name(), opt);
        if (cons->parsed())
            return run_const(cons->get_subcommands().at(0)->get_name(), opt);
        if (poly->parsed()) {
            std::cout << rank_polynomial(opt.n, opt.max_n).str() << "\n";
            return 0;
        }
        if (ins->parsed()) return run_insert(opt);
        if (check->parsed())
            return run_check(check->get_subcommands().at(0)->get_name(), opt);
        return run_verify_paper();
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.get_name() << "\n";
        return 2;
    }
}
