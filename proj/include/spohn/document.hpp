#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spohn/evidence.hpp"
#include "spohn/network.hpp"

namespace spohn {

// JSON documents for networks and evidence. Ranks are non-negative integers
// or the string "inf".
//
// Network:
//   {"variables": [{"name": "A", "values": ["a0", "a1"]}, ...],
//    "edges":     [{"parent": "A", "child": "B"}, ...],
//    "tables":    [{"node": "B", "order": ["A", "B"], "ranks": [0, 1, 2, 0]}, ...]}
//
// "order" lists the family's variables; ranks are row-major in that order
// (last variable fastest). Serialization always writes parents first, then
// the node.
//
// Evidence:
//   {"evidence": [{"variable": "A", "values": ["a0"], "strength": 1},
//                 {"variable": "B", "target": [1, 0]}]}

/// Parses a network document. The result is structurally sound but its
/// tables are not validated; see validate_network(). Throws Error(Parse)
/// with line and column for malformed JSON.
SpohnianNetwork parse_network(std::string_view text);

std::string serialize_network(const SpohnianNetwork& net);

std::vector<EvidenceSpec> parse_evidence(std::string_view text);

std::string serialize_evidence(const std::vector<EvidenceSpec>& evidence);

/// "A=a0,a1&B=b1": conjunction of per-variable value sets.
Proposition parse_proposition(const SpacePtr& space, std::string_view text);

std::string read_file(const std::string& path);

}  // namespace spohn
