#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "bruhat/word.hpp"

namespace bruhat {

/// The six local transformations behind the insertion map. Each rewrites a
/// triple of adjacent factors; written here for the triple (f1 f2 f3) in
/// paper order (f3 acts first). Lowercase letters are the smaller letter of
/// a factor, and a < b < c is required throughout:
///   A: (c,g)(a,x)(b,y) -> (a,x)(c,g)(b,y)   {a,x} and {c,g} disjoint
///   B: (b,c)(a,b)(b,d) -> (a,c)(c,d)(b,c)   a < b < c < d
///   C: (b,d)(a,b)(b,c) -> (b,c)(c,d)(a,c)   a < b < c < d
///   D: (c,g)(a,c)(b,y) -> (b,y)(c,g)(a,c)   {a,c,g} and {b,y} disjoint
///   E: (b,y)(a,c)(c,g) -> (a,c)(c,g)(b,y)   {a,c,g} and {b,y} disjoint
///   F: (b,y)(a,x)(c,g) -> (b,y)(c,g)(a,x)   {a,x} and {c,g} disjoint
enum class RuleTag { A, B, C, D, E, F };

char rule_name(RuleTag tag);

/// One transformation as data: its tag plus the pattern-and-guard matcher,
/// which takes a paper-order triple and returns the rewritten triple.
struct TransformRule {
    RuleTag tag;
    std::optional<std::array<Generator, 3>> (*match)(const Generator& f1,
                                                     const Generator& f2,
                                                     const Generator& f3);
};

/// The six rules in their default priority order A..F.
std::span<const TransformRule> transform_rules();

/// One applied transformation, for tracing.
struct RuleApplication {
    int pos = 0;  // 1 = rightmost triple in paper order
    RuleTag rule = RuleTag::A;
    Word before;
    Word after;
};

/// Tries the rules in the given priority order on the triple at `pos`
/// (1-based from the right end in paper order, i.e. application indices
/// pos-1..pos+1). Returns the first match, or nullopt. The rewrite must
/// preserve the (nonzero) evaluation; internal_error otherwise.
std::optional<RuleApplication> apply_rule(const Word& x, int pos,
                                          std::span<const TransformRule> rules);
std::optional<RuleApplication> apply_rule(const Word& x, int pos);

/// The insertion map: carries a word whose blocks fit (1,n) to the word
/// whose blocks fit (n,1) by repeatedly rewriting the rightmost matching
/// triple, trying rules in the given priority order. Throws domain_error
/// when x does not fit (1,n) or evaluates to zero, and resource_error if
/// the iteration cap is hit.
Word insert(const Word& x, std::span<const TransformRule> rules,
            std::vector<RuleApplication>* trace = nullptr);
Word insert(const Word& x, std::vector<RuleApplication>* trace = nullptr);

} // namespace bruhat
