#pragma once

#include <string>

#include <json.hpp>

#include "pe/extension.hpp"
#include "pe/matched_pair.hpp"
#include "pe/skew_brace.hpp"
#include "pe/solution.hpp"

namespace pe {

// File formats, all 0-based with identity at index 0:
//   group        {"order": n, "table": [[...], ...]}
//   action       {"actor": <group>, "targetSize": n, "perms": [[...], ...]}
//   solution     {"n": n, "mult": [[...], ...], "theta": [[...], ...]}
//   matched pair {"A": <group>, "G": <group>,
//                 "sigma": <action>, "delta": <action>}
//   brace        {"order": n, "add": [[...], ...], "circ": [[...], ...]}
//   extension    {"mp": <matched pair>, "xSize": k, "phi": [[...], ...]}
//
// Loaders throw ParseError for missing or ill-typed fields (the message names
// the offending path), RangeError for shape problems, and AxiomError when a
// structural law fails (group axioms, action laws, compatibility).

nlohmann::json group_to_json(const GroupTable& g);
nlohmann::json left_action_to_json(const LeftActionTable& a);
nlohmann::json right_action_to_json(const RightActionTable& a);
nlohmann::json solution_to_json(const SolutionTable& s);
nlohmann::json matched_pair_to_json(const MatchedPair& mp);
nlohmann::json brace_to_json(const SkewBraceTable& b);
nlohmann::json extension_to_json(const ExtensionSpec& spec);

// `where` prefixes every diagnostic, e.g. "mp.json: A".
GroupTable group_from_json(const nlohmann::json& j, const std::string& where);
SolutionTable solution_from_json(const nlohmann::json& j,
                                 const std::string& where);
MatchedPair matched_pair_from_json(const nlohmann::json& j,
                                   const std::string& where);
SkewBraceTable brace_from_json(const nlohmann::json& j,
                               const std::string& where);
ExtensionSpec extension_from_json(const nlohmann::json& j,
                                  const std::string& where);

// ParseError on unreadable or syntactically invalid files.
nlohmann::json load_json_file(const std::string& path);

// Writes to a sibling temp file and renames it into place, so readers never
// observe a partially written file.
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace pe
