#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pknets/bisection.hpp"
#include "pknets/music.hpp"
#include "pknets/subgroupoid.hpp"
#include "pknets/ti_group.hpp"

namespace pknets {

/// Everything a JSON workspace file describes, resolved and validated.
///
///   group        {"kind": "ti" | "cyclic" | "symmetric" | "table" | "wreath", ...}
///   categories   name → {"objects", "morphisms": [[name, src, tgt]], "compose": [[m2, m1, m]],
///                        "poset": {"relations": [[a, b]], "bottom"}, "groupoid": bool}
///   classes      [{"name", "delta": category ref, "assignments": {morphism: element}}]
///   section      {"pairs": [{"from", "to", "h"}], "default": h}
///   nets         name → {"class", "phi": {object: pitch or [pitches]}, "R"?}
///   progressions name → {"classes": [...], "chords": [{"class", "pitches": {object: pitch}}]}
///   groupoid     {"kind": "subgroupoid" | "functor", "classes"?} | {"kind": "pair", "objects", "group"?}
///                | {"kind": "category", "category": ref}
///   bisections   [{"sigma": [images], "legs": [morphism ids]}]
///   limits       {"max_group_order", "max_search_nodes"}
///
/// A category ref is a key of "categories", one of the builtins "Gamma" and
/// "Delta3", or an inline descriptor. Error messages start with the JSON
/// path of the offending entry.
struct Workspace {
  FiniteGroup group = ti_group();
  std::map<std::string, FinCategory> categories;
  std::vector<ChordClass> classes;
  std::vector<SectionPair> section_pairs;
  std::uint32_t section_default = 0;
  std::map<std::string, PKNet> nets;
  std::map<std::string, Progression> progressions;
  nlohmann::json groupoid;
  nlohmann::json bisections = nlohmann::json::array();
  Limits limits;

  /// Throws InputError for an unknown name.
  const ChordClass& find_class(const std::string& name) const;
  const FinCategory& find_category(const std::string& name) const;
  const PKNet& find_net(const std::string& name) const;
  const Progression& find_progression(const std::string& name) const;

  /// The section over all classes, in class order. T/I only.
  SectionSubcategory section() const;
};

/// Parses and validates a workspace. Throws InputError for malformed or
/// unresolved descriptors and StructureError for failed axioms.
Workspace load_workspace(const nlohmann::json& j);
Workspace load_workspace_file(const std::string& path);

FiniteGroup parse_group(const nlohmann::json& j, const Limits& limits = {});
FinCategory parse_category(const nlohmann::json& j, const std::string& name);

/// The groupoid selected by `ws.groupoid` (default: the pullback
/// subgroupoid of the classes along the section).
Groupoid workspace_groupoid(const Workspace& ws);

/// {"sigma": [images], "legs": [ids]}; σ is checked against the legs.
Bisection parse_bisection(const nlohmann::json& j, const Groupoid& c);
nlohmann::json bisection_json(const Bisection& b);

}  // namespace pknets
