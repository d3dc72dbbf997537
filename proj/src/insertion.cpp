#include "bruhat/insertion.hpp"

#include "bruhat/constants.hpp"
#include "bruhat/monoid.hpp"

namespace bruhat {

char rule_name(RuleTag tag) {
    switch (tag) {
        case RuleTag::A: return 'A';
        case RuleTag::B: return 'B';
        case RuleTag::C: return 'C';
        case RuleTag::D: return 'D';
        case RuleTag::E: return 'E';
        case RuleTag::F: return 'F';
    }
    return '?';
}

namespace {

using Triple = std::optional<std::array<Generator, 3>>;

bool disjoint(const Generator& g, const Generator& h) {
    return g.alpha != h.alpha && g.alpha != h.beta && g.beta != h.alpha &&
           g.beta != h.beta;
}

// (c,g)(a,x)(b,y) -> (a,x)(c,g)(b,y), a < b < c
Triple match_a(const Generator& f1, const Generator& f2, const Generator& f3) {
    if (disjoint(f2, f1) && f2.alpha < f3.alpha && f3.alpha < f1.alpha)
        return std::array<Generator, 3>{f2, f1, f3};
    return std::nullopt;
}

// (b,c)(a,b)(b,d) -> (a,c)(c,d)(b,c), a < b < c < d
Triple match_b(const Generator& f1, const Generator& f2, const Generator& f3) {
    if (f1.alpha == f2.beta && f3.alpha == f2.beta && f1.beta < f3.beta) {
        const int a = f2.alpha, b = f2.beta, c = f1.beta, d = f3.beta;
        return std::array<Generator, 3>{Generator(a, c), Generator(c, d),
                                        Generator(b, c)};
    }
    return std::nullopt;
}

// (b,d)(a,b)(b,c) -> (b,c)(c,d)(a,c), a < b < c < d
Triple match_c(const Generator& f1, const Generator& f2, const Generator& f3) {
    if (f1.alpha == f2.beta && f3.alpha == f2.beta && f3.beta < f1.beta) {
        const int a = f2.alpha, b = f2.beta, c = f3.beta, d = f1.beta;
        return std::array<Generator, 3>{Generator(b, c), Generator(c, d),
                                        Generator(a, c)};
    }
    return std::nullopt;
}

// (c,g)(a,c)(b,y) -> (b,y)(c,g)(a,c), a < b < c
Triple match_d(const Generator& f1, const Generator& f2, const Generator& f3) {
    if (f2.beta == f1.alpha && disjoint(f3, f1) && disjoint(f3, f2) &&
        f2.alpha < f3.alpha && f3.alpha < f1.alpha)
        return std::array<Generator, 3>{f3, f1, f2};
    return std::nullopt;
}

// (b,y)(a,c)(c,g) -> (a,c)(c,g)(b,y), a < b < c
Triple match_e(const Generator& f1, const Generator& f2, const Generator& f3) {
    if (f2.beta == f3.alpha && disjoint(f1, f2) && disjoint(f1, f3) &&
        f2.alpha < f1.alpha && f1.alpha < f3.alpha)
        return std::array<Generator, 3>{f2, f3, f1};
    return std::nullopt;
}

// (b,y)(a,x)(c,g) -> (b,y)(c,g)(a,x), a < b < c
Triple match_f(const Generator& f1, const Generator& f2, const Generator& f3) {
    if (disjoint(f2, f3) && f2.alpha < f1.alpha && f1.alpha < f3.alpha)
        return std::array<Generator, 3>{f1, f3, f2};
    return std::nullopt;
}

constexpr TransformRule kRules[] = {
    {RuleTag::A, match_a}, {RuleTag::B, match_b}, {RuleTag::C, match_c},
    {RuleTag::D, match_d}, {RuleTag::E, match_e}, {RuleTag::F, match_f},
};

} // namespace

std::span<const TransformRule> transform_rules() { return kRules; }

std::optional<RuleApplication> apply_rule(const Word& x, int pos,
                                          std::span<const TransformRule> rules) {
    if (pos < 1 || pos + 1 >= x.length())
        throw domain_error("apply_rule: triple position out of range");
    // application indices of the triple; paper order reads them backwards
    const size_t i = static_cast<size_t>(pos) - 1;
    const Generator f1 = x.gens[i + 2];
    const Generator f2 = x.gens[i + 1];
    const Generator f3 = x.gens[i];
    for (const TransformRule& rule : rules) {
        const auto replacement = rule.match(f1, f2, f3);
        if (!replacement) continue;
        RuleApplication app;
        app.pos = pos;
        app.rule = rule.tag;
        app.before = x;
        app.after = x;
        app.after.gens[i + 2] = (*replacement)[0];
        app.after.gens[i + 1] = (*replacement)[1];
        app.after.gens[i] = (*replacement)[2];
        if (evaluate_word(app.after) != evaluate_word(x) || !evaluate_word(app.after))
            throw internal_error("apply_rule: transformation changed the evaluation");
        return app;
    }
    return std::nullopt;
}

std::optional<RuleApplication> apply_rule(const Word& x, int pos) {
    return apply_rule(x, pos, transform_rules());
}

Word insert(const Word& x, std::span<const TransformRule> rules,
            std::vector<RuleApplication>* trace) {
    const MaybePerm value = evaluate_word(x);
    if (!value) throw domain_error("insert: word evaluates to zero");
    const int n = x.length() - 1;
    if (n <= 0) return x;
    if (!weakly_fits(x, Composition({1, n})))
        throw domain_error("insert: word does not fit the shape (1,n)");
    const Composition target({n, 1});
    const long cap = 1000 + 10L * n * n * n;
    Word cur = x;
    long iterations = 0;
    for (;;) {
        bool applied = false;
        for (int pos = 1; pos + 1 < cur.length(); ++pos) {
            std::optional<RuleApplication> app = apply_rule(cur, pos, rules);
            if (app) {
                cur = app->after;
                if (trace) trace->push_back(std::move(*app));
                applied = true;
                break;
            }
        }
        if (!applied) break;
        if (++iterations > cap)
            throw resource_error("insert: iteration cap exceeded");
    }
    if (!weakly_fits(cur, target))
        throw internal_error("insert: result does not fit the shape (n,1)");
    return cur;
}

Word insert(const Word& x, std::vector<RuleApplication>* trace) {
    return insert(x, transform_rules(), trace);
}

} // namespace bruhat
