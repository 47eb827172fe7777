#pragma once

#include <string>

#include <json.hpp>

#include "cayley/blocks.hpp"
#include "cayley/ci_engine.hpp"
#include "cayley/closures.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

using Json = nlohmann::json;

// Permutation: array of images. Malformed input throws InvalidArgument.
Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

// {"degree", "generators"}
Json to_json(const PermGroup& g);
PermGroup perm_group_from_json(const Json& j);

// {"degree", "blocks"}
Json to_json(const BlockSystem& b);
BlockSystem block_system_from_json(const Json& j);

// {"degree", "arity", "colors"}
Json to_json(const ColoredStructure& s);
ColoredStructure colored_structure_from_json(const Json& j);

// {"kind": ..., parameters}
Json to_json(const GroupSpec& s);
GroupSpec group_spec_from_json(const Json& j);

/// A JSON object, or a short name such as "cyclic:5", "frobenius:5:4",
/// "dicyclic:3", "q8", "zn_semidirect_y:15:4:11".
GroupSpec parse_group_spec(const std::string& text);

Json to_json(const CiVerdict& v);
Json to_json(const TowerResult& t);
Json to_json(const HolomorphReport& h);

}  // namespace cayley
