#include "pknets/functor_groupoid.hpp"

#include <deque>
#include <set>

#include "pknets/ti_group.hpp"

namespace pknets {

ChordClass::ChordClass(std::string name, FiniteGroup group, FinCategory delta, std::vector<std::uint32_t> values) {
  if (name.empty()) throw InputError("chord class needs a name");
  if (values.size() != delta.morphism_count())
    throw InputError("chord class " + name + ": expected " + std::to_string(delta.morphism_count()) + " values");
  for (auto v : values)
    if (v >= group.order()) throw InputError("chord class " + name + ": element out of range");
  auto target = group_category(group);
  Functor f{delta, target, std::vector<ObjectId>(delta.object_count(), 0), values};
  if (auto r = check_functor_detailed(f); !r) throw StructureError("chord class " + name + " is not a functor", r.witness);
  auto bottom = find_poset_bottom(delta);
  d_ = std::make_shared<const Data>(
      Data{std::move(name), std::move(group), std::move(delta), std::move(values), bottom, std::move(target)});
}

Functor ChordClass::functor() const {
  return Functor{d_->delta, d_->target, std::vector<ObjectId>(d_->delta.object_count(), 0), d_->values};
}

std::optional<std::uint32_t> parse_element(const FiniteGroup& g, std::string_view label) {
  if (auto x = g.find(label)) return x;
  if (g == ti_group())
    if (auto e = TIElement::parse(label)) return e->index();
  return std::nullopt;
}

ChordClass make_chord_class(std::string name, const FiniteGroup& group, const FinCategory& delta,
                            const std::map<std::string, std::string>& assignments) {
  const auto m = delta.morphism_count();
  std::vector<std::optional<std::uint32_t>> values(m);
  for (ObjectId o = 0; o < delta.object_count(); ++o) values[delta.identity(o)] = group.identity();
  for (const auto& [morphism, label] : assignments) {
    const auto id = delta.find_morphism(morphism);
    if (!id) throw InputError("chord class " + name + ": unknown morphism " + morphism);
    const auto g = parse_element(group, label);
    if (!g) throw InputError("chord class " + name + ": unknown element " + label);
    if (delta.is_identity(*id) && *g != group.identity())
      throw StructureError("chord class " + name + " is not a functor", "identity " + morphism + " sent to " + label);
    values[*id] = *g;
  }
  // Fill composites from their factors until nothing changes.
  for (bool changed = true; changed;) {
    changed = false;
    for (MorphismId m2 = 0; m2 < m; ++m2) {
      if (!values[m2]) continue;
      for (MorphismId m1 = 0; m1 < m; ++m1) {
        if (!values[m1]) continue;
        const auto c = delta.compose(m2, m1);
        if (c && !values[*c]) {
          values[*c] = group.mul(*values[m2], *values[m1]);
          changed = true;
        }
      }
    }
  }
  std::vector<std::uint32_t> out(m);
  for (MorphismId i = 0; i < m; ++i) {
    if (!values[i]) throw InputError("chord class " + name + ": no value for morphism " + delta.morphism_name(i));
    out[i] = *values[i];
  }
  return ChordClass(std::move(name), group, delta, std::move(out));
}

NaturalTransformation GDeltaMorphism::natural_transformation() const {
  return NaturalTransformation{source.functor(), target.functor(), components};
}

bool components_natural(const ChordClass& f, const ChordClass& f2, const std::vector<std::uint32_t>& components) {
  const auto& d = f.delta();
  const auto& g = f.group();
  if (components.size() != d.object_count()) return false;
  for (MorphismId m = 0; m < d.morphism_count(); ++m) {
    const auto x = d.source(m), y = d.target(m);
    if (g.mul(components[y], f.value(m)) != g.mul(f2.value(m), components[x])) return false;
  }
  return true;
}

namespace {

void require_compatible(const ChordClass& f, const ChordClass& f2) {
  if (!same_category(f.delta(), f2.delta()))
    throw InputError("chord classes " + f.name() + " and " + f2.name() + " are over different shapes");
  if (!(f.group() == f2.group()))
    throw InputError("chord classes " + f.name() + " and " + f2.name() + " are over different groups");
}

std::uint32_t label_object(const ChordClass& f) { return f.bottom().value_or(0); }

}  // namespace

GDeltaMorphism morphism_with_label(const ChordClass& f, const ChordClass& f2, std::uint32_t g) {
  require_compatible(f, f2);
  if (!f.bottom()) throw InputError("shape of " + f.name() + " has no bottom object");
  const auto& d = f.delta();
  const auto& grp = f.group();
  if (g >= grp.order()) throw InputError("element out of range");
  const auto o = *f.bottom();
  std::vector<std::uint32_t> comps(d.object_count());
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    const auto arrow = d.hom(o, x).front();
    comps[x] = grp.mul(grp.mul(f2.value(arrow), g), grp.inv(f.value(arrow)));
  }
  return GDeltaMorphism{f, f2, std::move(comps), g};
}

std::vector<GDeltaMorphism> homset(const ChordClass& f, const ChordClass& f2, const Limits& limits) {
  require_compatible(f, f2);
  if (!f.bottom()) return homset_general(f, f2, limits);
  std::vector<GDeltaMorphism> out;
  out.reserve(f.group().order());
  for (std::uint32_t g = 0; g < f.group().order(); ++g) {
    auto eta = morphism_with_label(f, f2, g);
    if (!components_natural(f, f2, eta.components))
      throw StructureError("propagation produced a non-natural transformation",
                           f.name() + " -> " + f2.name() + " at " + f.group().label(g));
    out.push_back(std::move(eta));
  }
  return out;
}

std::vector<GDeltaMorphism> homset_general(const ChordClass& f, const ChordClass& f2, const Limits& limits) {
  require_compatible(f, f2);
  const auto& d = f.delta();
  const auto& grp = f.group();
  const auto n = d.object_count();

  // Spanning forest of Δ, ignoring morphism direction. parent[y] = (m, forward)
  // where forward means m : parent → y.
  struct Edge {
    ObjectId from;
    MorphismId m;
    bool forward;
  };
  std::vector<std::optional<Edge>> tree(n);
  std::vector<bool> seen(n, false);
  std::vector<ObjectId> roots, order;
  for (ObjectId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    roots.push_back(start);
    seen[start] = true;
    std::deque<ObjectId> queue{start};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (MorphismId m = 0; m < d.morphism_count(); ++m) {
        const auto s = d.source(m), t = d.target(m);
        if (s == x && !seen[t]) {
          seen[t] = true;
          tree[t] = Edge{x, m, true};
          queue.push_back(t);
        } else if (t == x && !seen[s]) {
          seen[s] = true;
          tree[s] = Edge{x, m, false};
          queue.push_back(s);
        }
      }
    }
  }

  const auto k = roots.size();
  double space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= grp.order();
  if (space > static_cast<double>(limits.max_search_nodes))
    throw ResourceError("hom-set search space " + std::to_string(grp.order()) + "^" + std::to_string(k) +
                        " exceeds the bound");

  std::vector<std::uint32_t> choice(k, 0);
  std::vector<std::uint32_t> root_slot(n, 0);
  for (std::size_t i = 0; i < k; ++i) root_slot[roots[i]] = static_cast<std::uint32_t>(i);
  std::vector<GDeltaMorphism> out;
  while (true) {
    std::vector<std::uint32_t> comps(n);
    for (auto x : order) {
      if (!tree[x]) {
        comps[x] = choice[root_slot[x]];
        continue;
      }
      const auto& e = *tree[x];
      const auto known = comps[e.from];
      const auto fm = f.value(e.m), f2m = f2.value(e.m);
      // η_t·F(m) = F'(m)·η_s
      comps[x] = e.forward ? grp.mul(grp.mul(f2m, known), grp.inv(fm)) : grp.mul(grp.mul(grp.inv(f2m), known), fm);
    }
    if (components_natural(f, f2, comps)) {
      const auto lbl = comps[label_object(f)];
      out.push_back(GDeltaMorphism{f, f2, std::move(comps), lbl});
    }
    // Odometer, first root most significant so the order follows G on object 0.
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++choice[pos] < grp.order()) break;
      choice[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

GDeltaMorphism compose(const GDeltaMorphism& eta2, const GDeltaMorphism& eta1) {
  if (!(eta1.target == eta2.source))
    throw InputError("cannot compose: " + eta1.target.name() + " is not " + eta2.source.name());
  const auto& g = eta1.source.group();
  std::vector<std::uint32_t> comps(eta1.components.size());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = g.mul(eta2.components[x], eta1.components[x]);
  const auto lbl = comps[label_object(eta1.source)];
  return GDeltaMorphism{eta1.source, eta2.target, std::move(comps), lbl};
}

GDeltaMorphism inverse(const GDeltaMorphism& eta) {
  const auto& g = eta.source.group();
  std::vector<std::uint32_t> comps(eta.components.size());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = g.inv(eta.components[x]);
  const auto lbl = comps[label_object(eta.source)];
  return GDeltaMorphism{eta.target, eta.source, std::move(comps), lbl};
}

GDeltaMorphism identity_morphism(const ChordClass& f) {
  const auto e = f.group().identity();
  return GDeltaMorphism{f, f, std::vector<std::uint32_t>(f.delta().object_count(), e), e};
}

std::string element_label(const FiniteGroup& g, std::uint32_t x, bool signed_labels) {
  if (signed_labels && g == ti_group()) return TIElement::from_index(x).label(true);
  return g.label(x);
}

std::string morphism_label(const GDeltaMorphism& eta, bool signed_labels) {
  return "^{" + eta.source.name() + eta.target.name() + "}" +
         element_label(eta.source.group(), eta.label, signed_labels);
}

std::vector<ComponentEntry> component_table(const GDeltaMorphism& eta, bool signed_labels) {
  std::vector<ComponentEntry> out;
  const auto& d = eta.source.delta();
  for (ObjectId x = 0; x < d.object_count(); ++x)
    out.push_back({d.object_name(x), eta.components[x],
                   element_label(eta.source.group(), eta.components[x], signed_labels)});
  return out;
}

std::optional<MorphismId> FunctorGroupoid::find(const GDeltaMorphism& eta) const {
  for (MorphismId m = 0; m < morphisms.size(); ++m) {
    const auto& c = morphisms[m];
    if (c.source == eta.source && c.target == eta.target && c.components == eta.components) return m;
  }
  return std::nullopt;
}

FunctorGroupoid materialize_groupoid(const std::vector<ChordClass>& classes, const Limits& limits) {
  if (classes.empty()) throw InputError("no chord classes given");
  std::set<std::string> names;
  for (const auto& c : classes) {
    if (!names.insert(c.name()).second) throw InputError("duplicate chord class " + c.name());
    require_compatible(classes.front(), c);
  }
  const auto n = static_cast<std::uint32_t>(classes.size());

  CategorySpec spec;
  std::vector<GDeltaMorphism> morphisms;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>, MorphismId> index;
  std::set<std::string> used;
  for (const auto& c : classes) spec.objects.push_back(c.name());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (auto& eta : homset(classes[i], classes[j], limits)) {
        auto name = morphism_label(eta);
        for (int dup = 2; used.count(name); ++dup) name = morphism_label(eta) + "#" + std::to_string(dup);
        used.insert(name);
        const auto id = static_cast<MorphismId>(morphisms.size());
        index[{i, j, eta.components}] = id;
        spec.morphisms.push_back({std::move(name), i, j});
        morphisms.push_back(std::move(eta));
      }
  const auto e = classes.front().group().identity();
  const std::vector<std::uint32_t> unit(classes.front().delta().object_count(), e);
  for (std::uint32_t i = 0; i < n; ++i) spec.identities.push_back(index.at({i, i, unit}));

  const auto m = morphisms.size();
  spec.compose.assign(m * m, kUndefined);
  for (MorphismId a = 0; a < m; ++a)
    for (MorphismId b = 0; b < m; ++b) {
      if (spec.morphisms[b].target != spec.morphisms[a].source) continue;
      const auto c = compose(morphisms[a], morphisms[b]);
      spec.compose[std::size_t{a} * m + b] =
          static_cast<std::int32_t>(index.at({spec.morphisms[b].source, spec.morphisms[a].target, c.components}));
    }
  Groupoid g(FinCategory(std::move(spec), "G^Delta"));
  return FunctorGroupoid{std::move(g), classes, std::move(morphisms)};
}

}  // namespace pknets
