#include "pknets/subgroupoid.hpp"

#include <algorithm>
#include <set>

namespace pknets {

std::uint32_t project(const GDeltaMorphism& eta, const GroupExtension& e) {
  if (!(eta.source.group() == e.group()))
    throw InputError("morphism " + morphism_label(eta) + " is not over the extension's group");
  return extension_decompose(e, e.group().element(eta.label)).h.index;
}

ChordClass project_class(const ChordClass& f, const GroupExtension& e) {
  if (!(f.group() == e.group())) throw InputError("chord class " + f.name() + " is not over the extension's group");
  std::vector<std::uint32_t> values;
  for (auto v : f.values()) values.push_back(e.project(v));
  return ChordClass(f.name(), e.quotient(), f.delta(), std::move(values));
}

SectionSubcategory build_section(const FiniteGroup& quotient, std::vector<std::string> objects,
                                 std::vector<std::uint32_t> choice) {
  const auto n = objects.size();
  if (n == 0) throw InputError("section needs at least one object");
  if (choice.size() != n * n) throw InputError("section needs a choice for every ordered pair");
  for (auto h : choice)
    if (h >= quotient.order()) throw InputError("section choice out of range");
  SectionSubcategory s{quotient, std::move(objects), std::move(choice)};
  for (std::size_t i = 0; i < n; ++i)
    if (s.at(i, i) != quotient.identity())
      throw StructureError("section has a nontrivial endomorphism",
                           "(" + s.objects[i] + "," + s.objects[i] + ") -> " + quotient.label(s.at(i, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (quotient.mul(s.at(j, k), s.at(i, j)) != s.at(i, k))
          throw StructureError("section is not closed under composition",
                               "(" + s.objects[i] + "," + s.objects[j] + "," + s.objects[k] + ")");
  return s;
}

SectionSubcategory build_section(const FiniteGroup& quotient, std::vector<std::string> objects,
                                 const std::vector<SectionPair>& pairs, std::uint32_t fallback) {
  const auto n = objects.size();
  std::vector<std::uint32_t> choice(n * n, fallback);
  for (std::size_t i = 0; i < n; ++i) choice[i * n + i] = quotient.identity();
  const auto pos = [&](const std::string& name) {
    const auto it = std::find(objects.begin(), objects.end(), name);
    if (it == objects.end()) throw InputError("section refers to unknown class " + name);
    return static_cast<std::size_t>(it - objects.begin());
  };
  for (const auto& p : pairs) choice[pos(p.from) * n + pos(p.to)] = p.h;
  return build_section(quotient, std::move(objects), std::move(choice));
}

SectionSubcategory identity_section(const FiniteGroup& quotient, std::vector<std::string> objects) {
  const auto n = objects.size();
  return build_section(quotient, std::move(objects), std::vector<std::uint32_t>(n * n, quotient.identity()));
}

std::vector<MorphismId> SubGroupoid::hom(ObjectId a, ObjectId b) const {
  std::vector<MorphismId> out;
  for (auto m : ambient.groupoid.category().hom(a, b))
    if (kept[m]) out.push_back(m);
  return out;
}

std::size_t SubGroupoid::morphism_count() const { return static_cast<std::size_t>(std::count(kept.begin(), kept.end(), true)); }

Groupoid SubGroupoid::as_groupoid() const {
  const auto& cat = ambient.groupoid.category();
  constexpr auto none = static_cast<MorphismId>(-1);
  std::vector<MorphismId> renum(cat.morphism_count(), none);
  CategorySpec spec;
  spec.objects = cat.spec().objects;
  for (MorphismId m = 0; m < cat.morphism_count(); ++m)
    if (kept[m]) {
      renum[m] = static_cast<MorphismId>(spec.morphisms.size());
      spec.morphisms.push_back(cat.spec().morphisms[m]);
    }
  for (ObjectId o = 0; o < cat.object_count(); ++o) {
    if (renum[cat.identity(o)] == none)
      throw StructureError("subgroupoid misses an identity", cat.object_name(o));
    spec.identities.push_back(renum[cat.identity(o)]);
  }
  const auto k = spec.morphisms.size();
  spec.compose.assign(k * k, kUndefined);
  for (MorphismId a = 0; a < cat.morphism_count(); ++a) {
    if (!kept[a]) continue;
    for (MorphismId b = 0; b < cat.morphism_count(); ++b) {
      if (!kept[b]) continue;
      const auto c = cat.compose(a, b);
      if (!c) continue;
      if (renum[*c] == none)
        throw StructureError("subgroupoid is not closed", cat.morphism_name(a) + " o " + cat.morphism_name(b));
      spec.compose[std::size_t{renum[a]} * k + renum[b]] = static_cast<std::int32_t>(renum[*c]);
    }
  }
  return Groupoid(FinCategory(std::move(spec), "pullback"));
}

SubGroupoid pullback_subgroupoid(const std::vector<ChordClass>& classes, const GroupExtension& e,
                                 const SectionSubcategory& section, const Limits& limits) {
  if (!(section.quotient == e.quotient())) throw InputError("section is not over the extension's quotient");
  if (section.objects.size() != classes.size()) throw InputError("section and class list differ in size");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (section.objects[i] != classes[i].name())
      throw InputError("section object " + section.objects[i] + " does not match class " + classes[i].name());
    if (!(classes[i].group() == e.group()))
      throw InputError("chord class " + classes[i].name() + " is not over the extension's group");
  }
  auto ambient = materialize_groupoid(classes, limits);
  const auto& cat = ambient.groupoid.category();
  std::vector<bool> kept(cat.morphism_count());
  for (MorphismId m = 0; m < cat.morphism_count(); ++m)
    kept[m] = project(ambient.morphisms[m], e) == section.at(cat.source(m), cat.target(m));
  return SubGroupoid{std::move(ambient), section, std::move(kept)};
}

Prop34Report verify_prop3_prop4(const SubGroupoid& sub, const GroupExtension& e) {
  Prop34Report r;
  const auto& g = e.group();
  const auto& cat = sub.ambient.groupoid.category();
  const auto labels_of = [&](ObjectId a, ObjectId b) {
    std::set<std::uint32_t> s;
    for (auto m : sub.hom(a, b)) s.insert(sub.ambient.morphisms[m].label);
    return s;
  };

  r.closed = true;
  for (MorphismId a = 0; a < cat.morphism_count() && r.closed; ++a) {
    if (!sub.kept[a]) continue;
    if (!sub.kept[sub.ambient.groupoid.inverse(a)]) r.closed = false;
    for (MorphismId b = 0; b < cat.morphism_count() && r.closed; ++b)
      if (sub.kept[b])
        if (auto c = cat.compose(a, b); c && !sub.kept[*c]) r.closed = false;
  }
  for (ObjectId o = 0; o < cat.object_count(); ++o)
    if (!sub.kept[cat.identity(o)]) r.closed = false;

  bool all = r.closed;
  if (r.closed) {
    const auto sg = sub.as_groupoid();
    for (ObjectId o = 0; o < cat.object_count(); ++o) {
      const bool iso = find_isomorphism(sg.end_group(o), e.kernel()).has_value();
      r.end_isomorphic.push_back(iso);
      all = all && iso;
    }
  }
  for (ObjectId a = 0; a < cat.object_count(); ++a)
    for (ObjectId b = 0; b < cat.object_count(); ++b) {
      CosetWitness w{cat.object_name(a), cat.object_name(b), 0, false};
      const auto labels = labels_of(a, b);
      if (!labels.empty()) {
        w.representative = *labels.begin();
        std::set<std::uint32_t> coset;
        for (auto z : e.kernel_image()) coset.insert(g.mul(w.representative, z));
        w.is_coset = coset == labels;
      }
      all = all && w.is_coset;
      r.cosets.push_back(std::move(w));
    }
  r.ok = all;
  return r;
}

SetValuedDiagram net_diagram(const SubGroupoid& sub, const std::shared_ptr<const SetValuedDiagram>& r, const GSet& s,
                             const Limits& limits) {
  const auto p = prs_functor(sub.ambient, r, s, limits);
  const auto g = sub.as_groupoid();
  SetValuedDiagram out{g.category(), {}, {}};
  for (const auto& nets : p.sets) {
    auto& names = out.elements.emplace_back();
    for (const auto& net : nets) {
      std::string name;
      for (const auto& v : net.phi)
        for (auto x : v) name += (name.empty() ? "" : ",") + s.point(x);
      names.push_back(name);
    }
  }
  for (MorphismId m = 0; m < sub.kept.size(); ++m)
    if (sub.kept[m]) out.maps.push_back(p.maps[m]);
  if (auto c = check_diagram(out); !c) throw StructureError("net diagram is not a functor", c.witness);
  return out;
}

}  // namespace pknets
