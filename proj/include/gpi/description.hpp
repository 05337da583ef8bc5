#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gpi/group.hpp"

namespace gpi {

/// Builds a group from a description document:
///   {"type":"perm","degree":n,"generators":[[cycle], ...] per generator}
///   {"type":"catalog","name":"S4"}
///   {"type":"semidirect","normal":desc,"quotient":desc,
///    "action":[[image of each normal generator] per quotient generator]}
/// Action images are cycle lists for a permutation-backed normal part, or
/// element ids. InputError on malformed input.
Group group_from_description(const nlohmann::json &desc,
                             const Limits &limits = {});

/// A CLI group argument: inline JSON, a path to a JSON file, or a catalog
/// name.
Group group_from_argument(const std::string &arg, const Limits &limits = {});

/// Short display name for a group argument (the catalog name when given).
std::string argument_display_name(const std::string &arg);

/// An element given as a cycle list (permutation backend) or an id.
ElementId element_from_json(const Group &G, const nlohmann::json &value);
/// A JSON array of elements, or the same as text.
std::vector<ElementId> elements_from_json(const Group &G,
                                          const nlohmann::json &value);
std::vector<ElementId> elements_from_text(const Group &G,
                                          const std::string &text);

} // namespace gpi
