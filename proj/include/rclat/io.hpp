#pragma once

#include <string>

#include <json.hpp>

#include "rclat/enumeration.hpp"
#include "rclat/poset.hpp"
#include "rclat/structure.hpp"

namespace rclat {

using json = nlohmann::json;

/// {"n": <int>, "covers": [[a, b], ...]} with covers in lexicographic order.
json poset_to_json(const Poset& p);

/// Parses the poset format; validation is that of poset_from_covers().
Poset poset_from_json(const json& j);

/// {"c0": [ids], "steps": [{"chain": [ids], "pair": [a, b]}, ...]}
json decomposition_to_json(const AdjunctDecomposition& d);
AdjunctDecomposition decomposition_from_json(const json& j);

/// Poset record plus "meta": {n, k, r, basic_block_key}.
json enumerated_to_json(const EnumeratedLattice& e);

/// Hasse diagram in Graphviz syntax: one node per element labelled by index,
/// one edge per cover, elements of equal height on one rank. Reducible
/// elements are drawn as boxes.
std::string to_dot(const Poset& p, const std::string& name = "L");

}  // namespace rclat
