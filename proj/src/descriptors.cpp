#include "pknets/descriptors.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "pknets/ti_group.hpp"
#include "pknets/wreath.hpp"

namespace pknets {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw InputError(path + ": " + message); }

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::uint32_t as_count(const json& j, const std::string& path, std::uint32_t min = 0) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < min || j.get<std::int64_t>() > 0xFFFFFFFFll)
    fail(path, "expected an integer >= " + std::to_string(min));
  return j.get<std::uint32_t>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const std::string& key) { return path + "." + key; }

// Location-prefixed rethrow of structural and input errors from constructors.
template <class F>
auto located(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const StructureError& e) {
    throw StructureError(path + ": " + std::string(e.what()).substr(0, std::string(e.what()).size() - e.witness().size() - 2),
                         e.witness());
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind(path, 0) == 0) throw;
    fail(path, e.what());
  }
}

FiniteGroup parse_group_at(const json& j, const Limits& limits, const std::string& path) {
  if (j.is_string()) {
    if (j == "ti" || j == "TI") return ti_group();
    fail(path, "unknown group " + j.dump());
  }
  const auto kind = as_string(member(j, "kind", path), dot(path, "kind"));
  if (kind == "ti") return ti_group();
  if (kind == "cyclic") return cyclic_group(as_count(member(j, "order", path), dot(path, "order"), 1));
  if (kind == "symmetric") {
    const auto n = as_count(member(j, "degree", path), dot(path, "degree"), 1);
    return located(path, [&] { return symmetric_group(n, limits); });
  }
  if (kind == "wreath") {
    const auto base = parse_group_at(member(j, "base", path), limits, dot(path, "base"));
    const auto n = as_count(member(j, "n", path), dot(path, "n"), 1);
    return located(path, [&] { return wreath_group(base, n, limits); });
  }
  if (kind == "table") {
    GroupTable t;
    t.order = as_count(member(j, "order", path), dot(path, "order"), 1);
    if (t.order > limits.max_group_order) throw ResourceError(path + ": order exceeds the bound");
    const auto& cells = as_array(member(j, "multiply", path), dot(path, "multiply"));
    if (cells.size() != std::size_t{t.order} * t.order) fail(dot(path, "multiply"), "expected order*order entries");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto v = as_count(cells[i], at(dot(path, "multiply"), i));
      if (v >= t.order) fail(at(dot(path, "multiply"), i), "entry out of range");
      t.cells.push_back(v);
    }
    if (auto it = j.find("labels"); it != j.end()) {
      as_array(*it, dot(path, "labels"));
      if (it->size() != t.order) fail(dot(path, "labels"), "expected one label per element");
      for (std::size_t i = 0; i < it->size(); ++i) t.labels.push_back(as_string((*it)[i], at(dot(path, "labels"), i)));
    } else {
      for (std::uint32_t i = 0; i < t.order; ++i) t.labels.push_back(std::to_string(i));
    }
    const auto name = j.value("name", std::string("table"));
    return located(path, [&] { return FiniteGroup(std::move(t), name, limits); });
  }
  fail(dot(path, "kind"), "unknown kind \"" + kind + "\"");
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  std::vector<std::string> out;
  as_array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], at(path, i)));
  return out;
}

ObjectId object_ref(const std::vector<std::string>& objects, const json& j, const std::string& path) {
  const auto name = as_string(j, path);
  for (ObjectId o = 0; o < objects.size(); ++o)
    if (objects[o] == name) return o;
  fail(path, "unknown object \"" + name + "\"");
}

FinCategory parse_category_at(const json& j, const std::string& name, const std::string& path) {
  const auto objects = string_list(member(j, "objects", path), dot(path, "objects"));
  if (objects.empty()) fail(dot(path, "objects"), "no objects");

  struct Triple {
    std::string name;
    ObjectId source, target;
  };
  std::vector<Triple> triples;
  if (auto it = j.find("morphisms"); it != j.end()) {
    const auto mp = dot(path, "morphisms");
    as_array(*it, mp);
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& t = (*it)[i];
      if (!t.is_array() || t.size() != 3) fail(at(mp, i), "expected [name, source, target]");
      triples.push_back({as_string(t[0], at(mp, i) + "[0]"), object_ref(objects, t[1], at(mp, i) + "[1]"),
                         object_ref(objects, t[2], at(mp, i) + "[2]")});
    }
  }

  FinCategory cat = [&] {
    if (auto p = j.find("poset"); p != j.end()) {
      const auto pp = dot(path, "poset");
      std::vector<Cover> covers;
      const auto& rel = as_array(member(*p, "relations", pp), dot(pp, "relations"));
      for (std::size_t i = 0; i < rel.size(); ++i) {
        const auto rp = at(dot(pp, "relations"), i);
        if (!rel[i].is_array() || rel[i].size() != 2) fail(rp, "expected [lower, upper]");
        const auto a = object_ref(objects, rel[i][0], rp + "[0]");
        const auto b = object_ref(objects, rel[i][1], rp + "[1]");
        std::string cover_name = objects[a] + "<" + objects[b];
        for (const auto& t : triples)
          if (t.source == a && t.target == b) cover_name = t.name;
        covers.push_back({objects[a], objects[b], cover_name});
      }
      const auto bottom = as_string(member(*p, "bottom", pp), dot(pp, "bottom"));
      object_ref(objects, member(*p, "bottom", pp), dot(pp, "bottom"));
      return located(pp, [&] { return make_poset(objects, covers, bottom, name).category(); });
    }
    CategoryBuilder b;
    for (const auto& o : objects) b.add_object(o);
    std::map<std::string, MorphismId> ids;
    for (ObjectId o = 0; o < objects.size(); ++o) ids["id_" + objects[o]] = b.identity(o);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& t = triples[i];
      if (ids.count(t.name)) fail(at(dot(path, "morphisms"), i), "duplicate morphism \"" + t.name + "\"");
      ids[t.name] = b.add_morphism(t.name, t.source, t.target);
    }
    if (auto c = j.find("compose"); c != j.end()) {
      const auto cp = dot(path, "compose");
      as_array(*c, cp);
      for (std::size_t i = 0; i < c->size(); ++i) {
        const auto& e = (*c)[i];
        if (!e.is_array() || e.size() != 3) fail(at(cp, i), "expected [second, first, result]");
        MorphismId m[3];
        for (int k = 0; k < 3; ++k) {
          const auto mn = as_string(e[k], at(cp, i) + "[" + std::to_string(k) + "]");
          auto it = ids.find(mn);
          if (it == ids.end()) fail(at(cp, i) + "[" + std::to_string(k) + "]", "unknown morphism \"" + mn + "\"");
          m[k] = it->second;
        }
        located(at(cp, i), [&] {
          b.set_composite(m[0], m[1], m[2]);
          return 0;
        });
      }
    }
    return located(path, [&] { return b.build(name); });
  }();

  if (j.value("groupoid", false)) located(path, [&] { return Groupoid(cat); });
  return cat;
}

FinCategory resolve_category(const json& j, const std::map<std::string, FinCategory>& named, const std::string& path) {
  if (j.is_object()) return parse_category_at(j, "inline", path);
  const auto name = as_string(j, path);
  if (auto it = named.find(name); it != named.end()) return it->second;
  fail(path, "unknown category \"" + name + "\"");
}

std::uint32_t pitch_at(const json& j, const std::string& path) {
  std::optional<std::uint32_t> p;
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() >= 0 && j.get<std::int64_t>() < 12) p = j.get<std::uint32_t>();
  } else if (j.is_string()) {
    p = parse_pitch(j.get<std::string>());
  }
  if (!p) fail(path, "not a pitch class: " + j.dump());
  return *p;
}

std::vector<std::vector<std::uint32_t>> parse_phi(const json& j, const FinCategory& delta, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object keyed by object name");
  std::vector<std::vector<std::uint32_t>> phi(delta.object_count());
  std::vector<bool> seen(delta.object_count());
  for (const auto& [key, value] : j.items()) {
    const auto kp = dot(path, key);
    auto o = delta.find_object(key);
    if (!o) fail(kp, "unknown object \"" + key + "\"");
    seen[*o] = true;
    if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) phi[*o].push_back(pitch_at(value[i], at(kp, i)));
    } else {
      phi[*o].push_back(pitch_at(value, kp));
    }
  }
  for (ObjectId o = 0; o < delta.object_count(); ++o)
    if (!seen[o]) fail(path, "no value for object \"" + delta.object_name(o) + "\"");
  return phi;
}

std::shared_ptr<const SetValuedDiagram> parse_diagram(const json& j, const FinCategory& delta, const std::string& path) {
  SetValuedDiagram r{delta, std::vector<std::vector<std::string>>(delta.object_count()),
                     std::vector<std::vector<std::uint32_t>>(delta.morphism_count())};
  const auto ep = dot(path, "elements");
  const auto& elements = member(j, "elements", path);
  for (ObjectId o = 0; o < delta.object_count(); ++o) {
    const auto& name = delta.object_name(o);
    if (!elements.is_object() || !elements.contains(name)) fail(ep, "no elements for object \"" + name + "\"");
    r.elements[o] = string_list(elements[name], dot(ep, name));
  }
  const auto mp = dot(path, "maps");
  const json maps = j.value("maps", json::object());
  for (MorphismId m = 0; m < delta.morphism_count(); ++m) {
    const auto src = delta.source(m);
    if (delta.is_identity(m)) {
      for (std::uint32_t x = 0; x < r.elements[src].size(); ++x) r.maps[m].push_back(x);
      continue;
    }
    const auto& name = delta.morphism_name(m);
    if (!maps.contains(name)) fail(mp, "no map for morphism \"" + name + "\"");
    const auto& v = as_array(maps[name], dot(mp, name));
    for (std::size_t i = 0; i < v.size(); ++i) r.maps[m].push_back(as_count(v[i], at(dot(mp, name), i)));
  }
  return located(path, [&] { return make_diagram(std::move(r)); });
}

std::uint32_t quotient_element(const FiniteGroup& h, const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v >= h.order()) fail(path, "element out of range");
    return static_cast<std::uint32_t>(v);
  }
  const auto label = as_string(j, path);
  if (auto x = h.find(label)) return *x;
  fail(path, "unknown element \"" + label + "\"");
}

void require_ti(const Workspace& ws, const std::string& path, const char* what) {
  if (!(ws.group == ti_group())) fail(path, std::string(what) + " needs the T/I group");
}

}  // namespace

FiniteGroup parse_group(const json& j, const Limits& limits) { return parse_group_at(j, limits, "group"); }

FinCategory parse_category(const json& j, const std::string& name) {
  return parse_category_at(j, name, "categories." + name);
}

const ChordClass& Workspace::find_class(const std::string& name) const {
  for (const auto& c : classes)
    if (c.name() == name) return c;
  throw InputError("unknown class \"" + name + "\"");
}

const FinCategory& Workspace::find_category(const std::string& name) const {
  if (auto it = categories.find(name); it != categories.end()) return it->second;
  throw InputError("unknown category \"" + name + "\"");
}

const PKNet& Workspace::find_net(const std::string& name) const {
  if (auto it = nets.find(name); it != nets.end()) return it->second;
  throw InputError("unknown net \"" + name + "\"");
}

const Progression& Workspace::find_progression(const std::string& name) const {
  if (auto it = progressions.find(name); it != progressions.end()) return it->second;
  throw InputError("unknown progression \"" + name + "\"");
}

SectionSubcategory Workspace::section() const {
  if (!(group == ti_group())) throw InputError("sections need the T/I group");
  std::vector<std::string> names;
  for (const auto& c : classes) names.push_back(c.name());
  return located("section", [&] { return build_section(ti_extension().quotient(), names, section_pairs, section_default); });
}

Workspace load_workspace(const json& j) {
  if (!j.is_object()) fail("$", "workspace must be a JSON object");
  Workspace ws;
  ws.categories.emplace("Gamma", build_gamma().category());
  ws.categories.emplace("Delta3", build_delta3().category());

  if (auto it = j.find("limits"); it != j.end()) {
    if (it->contains("max_group_order"))
      ws.limits.max_group_order = as_count((*it)["max_group_order"], "limits.max_group_order", 1);
    if (it->contains("max_search_nodes"))
      ws.limits.max_search_nodes = as_count((*it)["max_search_nodes"], "limits.max_search_nodes", 1);
  }
  if (auto it = j.find("group"); it != j.end()) ws.group = parse_group_at(*it, ws.limits, "group");

  if (auto it = j.find("categories"); it != j.end()) {
    if (!it->is_object()) fail("categories", "expected an object keyed by name");
    for (const auto& [name, desc] : it->items()) {
      if (ws.categories.count(name)) fail("categories." + name, "name already in use");
      ws.categories.emplace(name, parse_category_at(desc, name, "categories." + name));
    }
  }

  if (auto it = j.find("classes"); it != j.end()) {
    as_array(*it, "classes");
    std::set<std::string> names;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto cp = at("classes", i);
      const auto& c = (*it)[i];
      const auto name = as_string(member(c, "name", cp), dot(cp, "name"));
      if (!names.insert(name).second) fail(dot(cp, "name"), "duplicate class \"" + name + "\"");
      const auto delta = resolve_category(member(c, "delta", cp), ws.categories, dot(cp, "delta"));
      std::map<std::string, std::string> assignments;
      const auto& a = member(c, "assignments", cp);
      if (!a.is_object()) fail(dot(cp, "assignments"), "expected an object");
      for (const auto& [m, g] : a.items()) assignments[m] = as_string(g, dot(dot(cp, "assignments"), m));
      ws.classes.push_back(located(cp, [&] { return make_chord_class(name, ws.group, delta, assignments); }));
    }
  }

  if (auto it = j.find("section"); it != j.end()) {
    require_ti(ws, "section", "a section");
    const auto& h = ti_extension().quotient();
    if (it->contains("default")) ws.section_default = quotient_element(h, (*it)["default"], "section.default");
    if (it->contains("pairs")) {
      const auto& pairs = as_array((*it)["pairs"], "section.pairs");
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto pp = at("section.pairs", i);
        ws.section_pairs.push_back({as_string(member(pairs[i], "from", pp), dot(pp, "from")),
                                    as_string(member(pairs[i], "to", pp), dot(pp, "to")),
                                    quotient_element(h, member(pairs[i], "h", pp), dot(pp, "h"))});
      }
    }
    if (!ws.classes.empty()) ws.section();
  }

  if (auto it = j.find("nets"); it != j.end()) {
    if (!it->is_object()) fail("nets", "expected an object keyed by name");
    for (const auto& [name, desc] : it->items()) {
      const auto np = "nets." + name;
      require_ti(ws, np, "pitch-class nets");
      const auto& f = located(dot(np, "class"), [&]() -> const ChordClass& {
        return ws.find_class(as_string(member(desc, "class", np), dot(np, "class")));
      });
      auto r = desc.contains("R") ? parse_diagram(desc["R"], f.delta(), dot(np, "R")) : singleton_diagram(f.delta());
      PKNet net{r, pitch_class_gset(), f, parse_phi(member(desc, "phi", np), f.delta(), dot(np, "phi"))};
      if (auto c = check_pknet(net); !c) throw StructureError(np + ": not natural", c.witness);
      ws.nets.emplace(name, std::move(net));
    }
  }

  if (auto it = j.find("progressions"); it != j.end()) {
    if (!it->is_object()) fail("progressions", "expected an object keyed by name");
    for (const auto& [name, desc] : it->items()) {
      const auto pp = "progressions." + name;
      require_ti(ws, pp, "progressions");
      std::set<std::string> allowed;
      if (desc.contains("classes")) {
        for (const auto& c : string_list(desc["classes"], dot(pp, "classes"))) {
          located(dot(pp, "classes"), [&] { return ws.find_class(c).name(); });
          allowed.insert(c);
        }
      }
      Progression prog;
      const auto& chords = as_array(member(desc, "chords", pp), dot(pp, "chords"));
      for (std::size_t i = 0; i < chords.size(); ++i) {
        const auto cp = at(dot(pp, "chords"), i);
        const auto cname = as_string(member(chords[i], "class", cp), dot(cp, "class"));
        if (!allowed.empty() && !allowed.count(cname)) fail(dot(cp, "class"), "class \"" + cname + "\" not listed");
        const auto& f = located(dot(cp, "class"), [&]() -> const ChordClass& { return ws.find_class(cname); });
        auto net = singleton_diagram(f.delta());
        PKNet n{net, pitch_class_gset(), f, parse_phi(member(chords[i], "pitches", cp), f.delta(), dot(cp, "pitches"))};
        for (const auto& v : n.phi)
          if (v.size() != 1) fail(dot(cp, "pitches"), "one pitch per object");
        prog.nets.push_back(std::move(n));
      }
      ws.progressions.emplace(name, std::move(prog));
    }
  }

  if (auto it = j.find("groupoid"); it != j.end()) {
    if (!it->is_object()) fail("groupoid", "expected an object");
    ws.groupoid = *it;
  } else {
    ws.groupoid = {{"kind", "subgroupoid"}};
  }
  if (auto it = j.find("bisections"); it != j.end()) ws.bisections = as_array(*it, "bisections");
  return ws;
}

Workspace load_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return load_workspace(j);
}

Groupoid workspace_groupoid(const Workspace& ws) {
  const auto& g = ws.groupoid;
  const auto kind = g.contains("kind") ? as_string(g["kind"], "groupoid.kind") : std::string("subgroupoid");
  // Optional "classes": a subset of the workspace classes, in the given order.
  std::vector<ChordClass> classes = ws.classes;
  if (g.contains("classes")) {
    classes.clear();
    for (const auto& name : string_list(g["classes"], "groupoid.classes"))
      classes.push_back(located("groupoid.classes", [&] { return ws.find_class(name); }));
  }
  if (kind == "subgroupoid") {
    if (classes.empty()) fail("groupoid", "the subgroupoid needs classes");
    require_ti(ws, "groupoid", "the subgroupoid");
    std::vector<std::string> names;
    for (const auto& c : classes) names.push_back(c.name());
    std::vector<SectionPair> pairs;
    for (const auto& p : ws.section_pairs)
      if (std::find(names.begin(), names.end(), p.from) != names.end() &&
          std::find(names.begin(), names.end(), p.to) != names.end())
        pairs.push_back(p);
    const auto section = located("section", [&] {
      return build_section(ti_extension().quotient(), names, pairs, ws.section_default);
    });
    return pullback_subgroupoid(classes, ti_extension(), section, ws.limits).as_groupoid();
  }
  if (kind == "functor") {
    if (classes.empty()) fail("groupoid", "the functor groupoid needs classes");
    return materialize_groupoid(classes, ws.limits).groupoid;
  }
  if (kind == "pair") {
    const auto n = as_count(member(g, "objects", "groupoid"), "groupoid.objects", 1);
    const auto z = g.contains("group") ? parse_group_at(g["group"], ws.limits, "groupoid.group") : ws.group;
    if (std::uint64_t{n} * n * z.order() > ws.limits.max_search_nodes)
      throw ResourceError("groupoid: pair groupoid exceeds the bound");
    return pair_groupoid(n, z);
  }
  if (kind == "category") {
    const auto cat = resolve_category(member(g, "category", "groupoid"), ws.categories, "groupoid.category");
    return located("groupoid.category", [&] { return Groupoid(cat); });
  }
  fail("groupoid.kind", "unknown kind \"" + kind + "\"");
}

Bisection parse_bisection(const json& j, const Groupoid& c) {
  const auto& cat = c.category();
  const auto& legs = as_array(member(j, "legs", "bisection"), "bisection.legs");
  std::vector<MorphismId> ids;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const auto lp = at("bisection.legs", i);
    if (legs[i].is_string()) {
      auto m = cat.find_morphism(legs[i].get<std::string>());
      if (!m) fail(lp, "unknown morphism " + legs[i].dump());
      ids.push_back(*m);
    } else {
      const auto m = as_count(legs[i], lp);
      if (m >= cat.morphism_count()) fail(lp, "morphism id out of range");
      ids.push_back(m);
    }
  }
  auto b = located("bisection", [&] { return bisection_from_legs(c, ids); });
  if (j.contains("sigma")) {
    std::vector<std::uint32_t> images;
    const auto& s = as_array(j["sigma"], "bisection.sigma");
    for (std::size_t i = 0; i < s.size(); ++i) images.push_back(as_count(s[i], at("bisection.sigma", i), 1));
    if (images != b.sigma.images()) fail("bisection.sigma", "does not match the targets of the legs");
  }
  return b;
}

json bisection_json(const Bisection& b) { return {{"sigma", b.sigma.images()}, {"legs", b.legs}}; }

}  // namespace pknets
