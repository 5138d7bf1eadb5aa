#include "doctest.h"
#include "pknets/descriptors.hpp"
#include "pknets/ti_group.hpp"

using namespace pknets;
using nlohmann::json;

namespace {

json berg_workspace() {
  return json::parse(R"({
    "group": {"kind": "ti"},
    "classes": [
      {"name": "U", "delta": "Gamma", "assignments": {"f": "I3", "g": "I10"}},
      {"name": "V", "delta": "Gamma", "assignments": {"f": "I4", "g": "I10"}}
    ],
    "nets": {"c1": {"class": "U", "phi": {"X": "Eb", "Y": 0, "Z": "G"}}},
    "progressions": {
      "part": {"classes": ["U", "V"], "chords": [
        {"class": "U", "pitches": {"X": "Eb", "Y": "C", "Z": "G"}},
        {"class": "V", "pitches": {"X": "C#", "Y": "Eb", "Z": "A"}}
      ]}
    }
  })");
}

// Δ₃ spelled out by hand, with one optional corruption of g∘f.
json delta3_spec(const char* composite) {
  json j = {{"objects", {"X", "Y", "Z"}},
            {"morphisms", {{"f", "X", "Y"}, {"g", "Y", "Z"}, {"h", "X", "Z"}}},
            {"compose", {{"g", "f", composite}}}};
  return j;
}

std::string message_of(const json& j) {
  try {
    load_workspace(j);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("groups from descriptors") {
  CHECK(parse_group(json{{"kind", "ti"}}) == ti_group());
  CHECK(parse_group(json{{"kind", "cyclic"}, {"order", 5}}).order() == 5);
  CHECK(parse_group(json{{"kind", "symmetric"}, {"degree", 3}}).order() == 6);
  const auto w = parse_group(json{{"kind", "wreath"}, {"base", {{"kind", "cyclic"}, {"order", 3}}}, {"n", 2}});
  CHECK(w.order() == 18);
  const auto z2 = parse_group(json{{"kind", "table"}, {"order", 2}, {"multiply", {0, 1, 1, 0}}, {"labels", {"e", "s"}}});
  CHECK(z2.label(1) == "s");
  CHECK(z2.mul(1, 1) == 0);
  CHECK_THROWS_AS(parse_group(json{{"kind", "table"}, {"order", 2}, {"multiply", {0, 1, 1, 1}}}), StructureError);
  CHECK_THROWS_AS(parse_group(json{{"kind", "table"}, {"order", 2}, {"multiply", {0, 1, 1}}}), InputError);
  CHECK_THROWS_AS(parse_group(json{{"kind", "dihedral"}}), InputError);
  Limits tight;
  tight.max_group_order = 100;
  CHECK_THROWS_AS(parse_group(json{{"kind", "symmetric"}, {"degree", 5}}, tight), ResourceError);
}

TEST_CASE("categories from descriptors") {
  const auto c = parse_category(delta3_spec("h"), "D");
  CHECK(c.morphism_count() == 6);
  CHECK(c.compose(*c.find_morphism("g"), *c.find_morphism("f")) == c.find_morphism("h"));
  CHECK(find_poset_bottom(c) == ObjectId{0});

  const auto p = parse_category(
      json::parse(R"({"objects": ["O", "A", "B"], "poset": {"relations": [["O", "A"], ["A", "B"]], "bottom": "O"}})"), "P");
  CHECK(p.morphism_count() == 6);
  CHECK(p.find_morphism("O<A").has_value());

  // Z2 as a one-object groupoid.
  const auto g = parse_category(
      json{{"objects", {"*"}}, {"morphisms", {{"s", "*", "*"}}}, {"compose", {{"s", "s", "id_*"}}}, {"groupoid", true}},
      "Z2");
  CHECK(Groupoid(g).inverse(*g.find_morphism("s")) == *g.find_morphism("s"));
  // A non-invertible arrow under the groupoid flag.
  CHECK_THROWS_AS(parse_category(json{{"objects", {"A", "B"}}, {"morphisms", {{"f", "A", "B"}}}, {"groupoid", true}}, "N"),
                  StructureError);
}

TEST_CASE("corrupted composition tables are located") {
  json ws = berg_workspace();
  ws["categories"] = {{"Bad", delta3_spec("f")}};
  try {
    load_workspace(ws);
    FAIL("accepted a bad composition table");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).rfind("categories.Bad", 0) == 0);
    CHECK_FALSE(e.witness().empty());
  }
  ws["categories"] = {{"Bad", delta3_spec("nope")}};
  CHECK(message_of(ws).find("categories.Bad.compose[0][2]") != std::string::npos);
}

TEST_CASE("workspace resolution") {
  const auto ws = load_workspace(berg_workspace());
  REQUIRE(ws.classes.size() == 2);
  const auto berg = berg_fixture();
  CHECK(ws.classes[0].values() == berg.classes[0].values());
  CHECK(ws.find_net("c1").phi == berg.progression.nets[0].phi);
  const auto& part = ws.find_progression("part");
  REQUIRE(part.nets.size() == 2);
  CHECK(part.nets[1].phi == berg.progression.nets[1].phi);
  CHECK(morphism_label(analyze_progression(part).front().morphism, true) == "^{UV}T-2");
  CHECK_THROWS_AS(ws.find_class("W"), InputError);

  // The default section and subgroupoid.
  const auto g = workspace_groupoid(ws);
  CHECK(g.category().morphism_count() == 48);
  CHECK(g.connected());
}

TEST_CASE("descriptor errors carry their path") {
  auto ws = berg_workspace();
  ws["classes"][1]["assignments"]["f"] = "Q4";
  CHECK(message_of(ws).rfind("classes[1]", 0) == 0);

  ws = berg_workspace();
  ws["classes"][0]["delta"] = "Omega";
  CHECK(message_of(ws).rfind("classes[0].delta", 0) == 0);

  ws = berg_workspace();
  ws["nets"]["c1"]["phi"]["Y"] = "H";
  CHECK(message_of(ws).rfind("nets.c1.phi.Y", 0) == 0);

  ws = berg_workspace();
  ws["nets"]["c1"]["phi"]["Y"] = 5;  // not an instance of U
  CHECK_THROWS_AS(load_workspace(ws), StructureError);

  ws = berg_workspace();
  ws["progressions"]["part"]["chords"][1]["class"] = "W";
  CHECK(message_of(ws).rfind("progressions.part.chords[1].class", 0) == 0);

  ws = berg_workspace();
  ws["section"] = {{"pairs", {{{"from", "U"}, {"to", "U"}, {"h", 1}}}}};
  CHECK_THROWS_AS(load_workspace(ws), StructureError);

  ws = berg_workspace();
  ws["limits"] = {{"max_search_nodes", 0}};
  CHECK(message_of(ws).rfind("limits.max_search_nodes", 0) == 0);

  CHECK_THROWS_AS(load_workspace(json::array()), InputError);
  CHECK_THROWS_AS(load_workspace_file("/nonexistent/workspace.json"), InputError);
}

TEST_CASE("non-singleton R") {
  auto ws = berg_workspace();
  ws["nets"]["dyads"] = json::parse(R"({
    "class": "U",
    "R": {"elements": {"X": ["a", "b"], "Y": ["a", "b"], "Z": ["a", "b"]}, "maps": {"f": [0, 1], "g": [0, 1]}},
    "phi": {"X": ["Eb", "D"], "Y": [0, 1], "Z": [7, 8]}
  })");
  const auto loaded = load_workspace(ws);
  CHECK(loaded.find_net("dyads").phi[0] == std::vector<std::uint32_t>{3, 2});
}

TEST_CASE("groupoids and bisection literals") {
  auto ws = berg_workspace();
  ws["groupoid"] = {{"kind", "pair"}, {"objects", 2}, {"group", {{"kind", "cyclic"}, {"order", 3}}}};
  const auto c = workspace_groupoid(load_workspace(ws));
  CHECK(c.category().morphism_count() == 12);
  // (1,2,1) and (2,1,0) swap the objects.
  const auto b = parse_bisection(json{{"sigma", {2, 1}}, {"legs", {4, 6}}}, c);
  CHECK(b.sigma == Permutation({2, 1}));
  CHECK(bisection_json(b) == json{{"sigma", {2, 1}}, {"legs", {4, 6}}});
  CHECK(parse_bisection(json{{"legs", {"(1,2,1)", "(2,1,0)"}}}, c) == b);
  CHECK_THROWS_AS(parse_bisection(json{{"sigma", {1, 2}}, {"legs", {4, 6}}}, c), InputError);
  CHECK_THROWS_AS(parse_bisection(json{{"legs", {4, 4}}}, c), InputError);
  CHECK_THROWS_AS(parse_bisection(json{{"legs", {99, 4}}}, c), InputError);

  ws["groupoid"] = {{"kind", "functor"}};
  CHECK(workspace_groupoid(load_workspace(ws)).category().morphism_count() == 96);
  ws["groupoid"] = {{"kind", "category"}, {"category", "Gamma"}};
  CHECK_THROWS_AS(workspace_groupoid(load_workspace(ws)), StructureError);
}
