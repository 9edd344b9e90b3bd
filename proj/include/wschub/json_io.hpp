#pragma once

#include <json.hpp>

#include "wschub/gkm.hpp"

namespace wschub {

nlohmann::json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const UniversePtr& uni, const nlohmann::json& j);

// Restriction-table file:
// {"flavor": "...", "config": {"n": .., "dims": [..]}, "weights": [..],
//  "u": .., "classes": {"<sigma word>": {"<tau word>": "<poly text>"}}}
nlohmann::json restriction_tables_json(const ContextPtr& ctx, Flavor flavor,
                                       const std::vector<int>& sigma_idxs);

struct LoadedTables {
    ContextPtr ctx;
    Flavor flavor = Flavor::Straight;
    std::vector<std::pair<int, GKMClass>> classes;  // rep index, table
};

LoadedTables load_restriction_tables(const nlohmann::json& j);

}  // namespace wschub
