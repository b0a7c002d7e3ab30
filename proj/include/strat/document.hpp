#pragma once

#include <map>
#include <string>

#include "strat/strat_set.hpp"

namespace strat {

/// The JSON interchange document: named posets, simplicial sets, stratified
/// sets and maps. Everything is validated eagerly on load; errors carry the
/// offending object and invariant.
struct Document {
    std::map<std::string, PosetPtr> posets;
    std::map<std::string, SSetPtr> ssets;
    std::map<std::string, StratSet> strats;

    struct NamedMap {
        std::string kind;  // "sset" | "poset" | "strat"
        std::string source, target;
        std::shared_ptr<SimplicialMap> sset_map;
        std::shared_ptr<PosetMap> poset_map;
        std::shared_ptr<StratMap> strat_map;
    };
    std::map<std::string, NamedMap> maps;
};

Document parse_document(const std::string& text);

/// Canonical serialization; a fixed point of parse-then-serialize.
std::string serialize_document(const Document& doc);

}  // namespace strat
