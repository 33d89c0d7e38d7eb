#pragma once

#include <json.hpp>

#include "gct/character_table.hpp"
#include "gct/cyclotomic.hpp"

namespace gct {

/// JSON form {"n": n, "terms": [[k, num, den], ...]}; exact round trip.
nlohmann::json cyclo_to_json(const Cyclotomic& c);
Cyclotomic cyclo_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const CharacterTable& t);
CharacterTable table_from_json(const nlohmann::json& j,
                               std::shared_ptr<const PermGroup> g);

}  // namespace gct
