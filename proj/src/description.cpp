#include "gpi/description.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpi/catalog.hpp"
#include "gpi/construct.hpp"
#include "gpi/errors.hpp"

namespace gpi {

namespace {

using nlohmann::json;

std::vector<std::vector<Point>> cycles_from_json(const json &value) {
  if (!value.is_array())
    throw InputError("expected a list of cycles, got " + value.dump());
  std::vector<std::vector<Point>> cycles;
  for (const auto &c : value) {
    if (!c.is_array())
      throw InputError("expected a cycle, got " + c.dump());
    std::vector<Point> cycle;
    for (const auto &x : c) {
      if (!x.is_number_unsigned())
        throw InputError("cycle entries must be non-negative integers, got " +
                         x.dump());
      cycle.push_back(x.get<Point>());
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

const json &field(const json &desc, const char *name) {
  if (!desc.is_object() || !desc.contains(name))
    throw InputError(std::string("group description lacks \"") + name +
                     "\": " + desc.dump());
  return desc.at(name);
}

} // namespace

ElementId element_from_json(const Group &G, const json &value) {
  if (value.is_number_unsigned()) {
    auto id = value.get<std::uint64_t>();
    if (id >= G.order())
      throw InputError("element id " + std::to_string(id) +
                       " out of range for a group of order " +
                       std::to_string(G.order()));
    return static_cast<ElementId>(id);
  }
  if (G.backend() != Group::Backend::permutation)
    throw InputError("elements of table-backed groups are given as ids");
  Perm p(G.degree(), cycles_from_json(value));
  auto id = G.find(p);
  if (!id)
    throw InputError(p.str() + " is not an element of the group");
  return *id;
}

std::vector<ElementId> elements_from_json(const Group &G, const json &value) {
  if (!value.is_array())
    throw InputError("expected a list of elements, got " + value.dump());
  std::vector<ElementId> out;
  for (const auto &v : value)
    out.push_back(element_from_json(G, v));
  return out;
}

std::vector<ElementId> elements_from_text(const Group &G,
                                          const std::string &text) {
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError("cannot parse element list: " + std::string(e.what()));
  }
  return elements_from_json(G, value);
}

namespace {

Group build_group(const json &desc, const Limits &limits) {
  const std::string type = field(desc, "type").get<std::string>();
  if (type == "catalog") {
    const auto name = field(desc, "name").get<std::string>();
    const CatalogEntry *entry = find_catalog_entry(name);
    if (!entry)
      throw InputError("unknown catalog group " + name);
    return construct(*entry, limits);
  }
  if (type == "perm") {
    const auto degree = field(desc, "degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto &g : field(desc, "generators"))
      gens.emplace_back(degree, cycles_from_json(g));
    return Group::from_generators(degree, std::move(gens), limits);
  }
  if (type == "semidirect") {
    Group N = build_group(field(desc, "normal"), limits);
    Group Q = build_group(field(desc, "quotient"), limits);
    ActionSpec action;
    for (const auto &row : field(desc, "action"))
      action.push_back(elements_from_json(N, row));
    return semidirect_product(N, Q, action, limits);
  }
  throw InputError("unknown group description type " + type);
}

} // namespace

Group group_from_description(const json &desc, const Limits &limits) {
  try {
    return build_group(desc, limits);
  } catch (const json::exception &e) {
    throw InputError("malformed group description: " + std::string(e.what()));
  }
}

Group group_from_argument(const std::string &arg, const Limits &limits) {
  auto parse = [](const std::string &text) {
    try {
      return json::parse(text);
    } catch (const json::parse_error &e) {
      throw InputError("cannot parse group description: " +
                       std::string(e.what()));
    }
  };
  if (!arg.empty() && arg.front() == '{')
    return group_from_description(parse(arg), limits);
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return group_from_description(parse(buffer.str()), limits);
  }
  const CatalogEntry *entry = find_catalog_entry(arg);
  if (!entry)
    throw InputError("\"" + arg +
                     "\" is neither JSON, a file, nor a catalog group");
  return construct(*entry, limits);
}

std::string argument_display_name(const std::string &arg) {
  if (find_catalog_entry(arg))
    return arg;
  if (!arg.empty() && arg.front() == '{')
    return "inline";
  return std::filesystem::path(arg).filename().string();
}

} // namespace gpi
