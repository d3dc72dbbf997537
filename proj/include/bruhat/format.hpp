#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bruhat/constants.hpp"
#include "bruhat/korder.hpp"
#include "bruhat/monoid.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/word.hpp"

namespace bruhat::io {

using nlohmann::json;

/// Comma-separated window, e.g. "2,5,4,1,6,3"; "1" and "" denote the identity.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

/// Comma-separated parts, e.g. "2,2,1"; "" denotes the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

Composition parse_composition(std::string_view text);
std::string format_composition(const Composition& p);

enum class WordOrder { paper, application };

/// "u[3,4] u[2,3] u[4,5] u[1,4]". Paper order lists the last applied factor
/// first; application order lists factors as they act.
Word parse_word(std::string_view text, WordOrder order = WordOrder::paper);
std::string format_word(const Word& x, WordOrder order = WordOrder::paper);

/// {"gens":[[a,b],...],"order":"application"|"paper"}
json word_to_json(const Word& x, WordOrder order = WordOrder::application);
Word word_from_json(const json& j);

/// {"u":[...],"w":[...],"k":K,"steps":[{"perm":[...],"gen":[a,b]},...]}
json chain_to_json(const Chain& c, int k);
Chain chain_from_json(const json& j, int* k_out = nullptr);

/// {"zeta":[...],"lu":N,"chains":M,"c":[{"lambda":[...],"value":v},...],
///  "identity_ok":true}
json report_to_json(const ConstantsReport& r);
ConstantsReport report_from_json(const json& j);

/// DOT digraph of a Hasse diagram, bottom to top, each cover edge labeled
/// by the smaller letter alpha of its generator.
std::string to_dot(const HasseGraph& g);

} // namespace bruhat::io
