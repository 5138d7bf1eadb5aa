#include "pknets/category.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "pknets/ti_group.hpp"

namespace pknets {
namespace {

std::atomic<std::uint64_t> next_category_id{1};

std::string mname(const CategorySpec& s, MorphismId m) {
  return m < s.morphisms.size() ? s.morphisms[m].name : "#" + std::to_string(m);
}

}  // namespace

CheckResult check_category_axioms(const CategorySpec& s) {
  const auto n = static_cast<std::uint32_t>(s.objects.size());
  const auto m = static_cast<std::uint32_t>(s.morphisms.size());
  if (n == 0) return CheckResult::fail("category has no objects");
  if (s.identities.size() != n) return CheckResult::fail("identity count differs from object count");
  for (MorphismId i = 0; i < m; ++i) {
    if (s.morphisms[i].source >= n || s.morphisms[i].target >= n)
      return CheckResult::fail("morphism " + mname(s, i) + " has an out-of-range endpoint");
  }
  for (ObjectId o = 0; o < n; ++o) {
    const auto id = s.identities[o];
    if (id >= m || s.morphisms[id].source != o || s.morphisms[id].target != o)
      return CheckResult::fail("identity of " + s.objects[o] + " is not an endomorphism of it");
  }
  if (s.compose.size() != std::size_t{m} * m) return CheckResult::fail("composition table has the wrong size");

  const auto at = [&](MorphismId m2, MorphismId m1) { return s.compose[std::size_t{m2} * m + m1]; };
  for (MorphismId m2 = 0; m2 < m; ++m2)
    for (MorphismId m1 = 0; m1 < m; ++m1) {
      const bool composable = s.morphisms[m1].target == s.morphisms[m2].source;
      const auto c = at(m2, m1);
      const std::string pair = mname(s, m2) + " o " + mname(s, m1);
      if (!composable) {
        if (c != kUndefined) return CheckResult::fail("composite defined for non-composable pair " + pair);
        continue;
      }
      if (c < 0 || static_cast<std::uint32_t>(c) >= m) return CheckResult::fail("composite missing for " + pair);
      const auto& r = s.morphisms[static_cast<MorphismId>(c)];
      if (r.source != s.morphisms[m1].source || r.target != s.morphisms[m2].target)
        return CheckResult::fail("composite " + pair + " = " + r.name + " has wrong endpoints");
    }
  for (MorphismId i = 0; i < m; ++i) {
    const auto& mi = s.morphisms[i];
    if (at(s.identities[mi.target], i) != static_cast<std::int32_t>(i) ||
        at(i, s.identities[mi.source]) != static_cast<std::int32_t>(i))
      return CheckResult::fail("identity is not neutral for " + mname(s, i));
  }

  std::vector<std::vector<MorphismId>> out(n);
  for (MorphismId i = 0; i < m; ++i) out[s.morphisms[i].source].push_back(i);
  for (MorphismId m1 = 0; m1 < m; ++m1)
    for (auto m2 : out[s.morphisms[m1].target]) {
      const auto c21 = static_cast<MorphismId>(at(m2, m1));
      for (auto m3 : out[s.morphisms[m2].target]) {
        const auto c32 = static_cast<MorphismId>(at(m3, m2));
        if (at(c32, m1) != at(m3, c21))
          return CheckResult::fail("composition not associative at (" + mname(s, m3) + ", " + mname(s, m2) + ", " +
                                   mname(s, m1) + ")");
      }
    }
  return CheckResult::pass();
}

struct FinCategory::Data {
  std::uint64_t id = 0;
  std::string name;
  CategorySpec spec;
  std::vector<std::vector<MorphismId>> hom;
  std::unordered_map<std::string, ObjectId> object_index;
  std::unordered_map<std::string, MorphismId> morphism_index;
};

FinCategory::FinCategory(CategorySpec spec, std::string name) {
  if (spec.objects.empty()) throw InputError("degenerate category: no objects");
  if (auto r = check_category_axioms(spec); !r) throw StructureError("category axioms violated", r.witness);
  auto d = std::make_shared<Data>();
  d->id = next_category_id.fetch_add(1);
  d->name = std::move(name);
  const auto n = static_cast<std::uint32_t>(spec.objects.size());
  d->hom.resize(std::size_t{n} * n);
  for (MorphismId i = 0; i < spec.morphisms.size(); ++i) {
    const auto& ms = spec.morphisms[i];
    d->hom[std::size_t{ms.source} * n + ms.target].push_back(i);
    if (!d->morphism_index.emplace(ms.name, i).second) throw InputError("duplicate morphism name " + ms.name);
  }
  for (ObjectId o = 0; o < n; ++o)
    if (!d->object_index.emplace(spec.objects[o], o).second) throw InputError("duplicate object name " + spec.objects[o]);
  d->spec = std::move(spec);
  d_ = std::move(d);
}

std::uint64_t FinCategory::id() const noexcept { return d_->id; }
const std::string& FinCategory::name() const noexcept { return d_->name; }
const CategorySpec& FinCategory::spec() const noexcept { return d_->spec; }
std::uint32_t FinCategory::object_count() const noexcept { return static_cast<std::uint32_t>(d_->spec.objects.size()); }
std::uint32_t FinCategory::morphism_count() const noexcept {
  return static_cast<std::uint32_t>(d_->spec.morphisms.size());
}
const std::string& FinCategory::object_name(ObjectId o) const { return d_->spec.objects.at(o); }
const std::string& FinCategory::morphism_name(MorphismId m) const { return d_->spec.morphisms.at(m).name; }
ObjectId FinCategory::source(MorphismId m) const { return d_->spec.morphisms.at(m).source; }
ObjectId FinCategory::target(MorphismId m) const { return d_->spec.morphisms.at(m).target; }
MorphismId FinCategory::identity(ObjectId o) const { return d_->spec.identities.at(o); }
bool FinCategory::is_identity(MorphismId m) const { return identity(source(m)) == m; }

std::optional<MorphismId> FinCategory::compose(MorphismId m2, MorphismId m1) const {
  const auto c = d_->spec.compose.at(std::size_t{m2} * morphism_count() + m1);
  if (c == kUndefined) return std::nullopt;
  return static_cast<MorphismId>(c);
}

MorphismId FinCategory::then(MorphismId m1, MorphismId m2) const {
  if (auto c = compose(m2, m1)) return *c;
  throw InputError("morphisms " + morphism_name(m2) + " and " + morphism_name(m1) + " are not composable");
}

const std::vector<MorphismId>& FinCategory::hom(ObjectId a, ObjectId b) const {
  return d_->hom.at(std::size_t{a} * object_count() + b);
}

std::optional<ObjectId> FinCategory::find_object(std::string_view name) const {
  if (auto it = d_->object_index.find(std::string(name)); it != d_->object_index.end()) return it->second;
  return std::nullopt;
}

std::optional<MorphismId> FinCategory::find_morphism(std::string_view name) const {
  if (auto it = d_->morphism_index.find(std::string(name)); it != d_->morphism_index.end()) return it->second;
  return std::nullopt;
}

bool same_category(const FinCategory& a, const FinCategory& b) { return a == b || a.spec() == b.spec(); }

ObjectId CategoryBuilder::add_object(std::string name) {
  const auto o = static_cast<ObjectId>(objects_.size());
  identities_.push_back(static_cast<MorphismId>(morphisms_.size()));
  morphisms_.push_back({"id_" + name, o, o});
  objects_.push_back(std::move(name));
  return o;
}

MorphismId CategoryBuilder::add_morphism(std::string name, ObjectId source, ObjectId target) {
  if (source >= objects_.size() || target >= objects_.size()) throw InputError("morphism endpoint out of range");
  morphisms_.push_back({std::move(name), source, target});
  return static_cast<MorphismId>(morphisms_.size() - 1);
}

void CategoryBuilder::set_composite(MorphismId m2, MorphismId m1, MorphismId result) {
  composites_.emplace_back(m2, m1, result);
}

CategorySpec CategoryBuilder::spec() const {
  CategorySpec s{objects_, morphisms_, identities_, {}};
  const auto m = morphisms_.size();
  s.compose.assign(m * m, kUndefined);
  for (MorphismId i = 0; i < m; ++i) {
    s.compose[identities_[morphisms_[i].target] * m + i] = static_cast<std::int32_t>(i);
    s.compose[i * m + identities_[morphisms_[i].source]] = static_cast<std::int32_t>(i);
  }
  for (const auto& [m2, m1, r] : composites_) {
    if (m2 >= m || m1 >= m || r >= m) throw InputError("composite refers to an unknown morphism");
    s.compose[m2 * m + m1] = static_cast<std::int32_t>(r);
  }
  return s;
}

FinCategory CategoryBuilder::build(std::string name) const { return FinCategory(spec(), std::move(name)); }

FinCategory group_category(const FiniteGroup& g) {
  CategorySpec s;
  s.objects = {"*"};
  const auto n = g.order();
  for (std::uint32_t i = 0; i < n; ++i) s.morphisms.push_back({g.label(i), 0, 0});
  s.identities = {g.identity()};
  s.compose.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) s.compose[std::size_t{a} * n + b] = static_cast<std::int32_t>(g.mul(a, b));
  return FinCategory(std::move(s), g.name());
}

PosetCategory::PosetCategory(FinCategory cat, ObjectId bottom) : cat_(std::move(cat)), bottom_(bottom) {
  const auto n = cat_.object_count();
  if (bottom_ >= n) throw InputError("bottom object out of range");
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) {
      if (cat_.hom(a, b).size() > 1)
        throw StructureError("not a poset", "several morphisms " + cat_.object_name(a) + " -> " + cat_.object_name(b));
      if (a != b && !cat_.hom(a, b).empty() && !cat_.hom(b, a).empty())
        throw StructureError("not a poset", "cycle between " + cat_.object_name(a) + " and " + cat_.object_name(b));
    }
  for (ObjectId x = 0; x < n; ++x)
    if (cat_.hom(bottom_, x).empty())
      throw StructureError("bottom does not reach every object", cat_.object_name(bottom_) + " -/-> " + cat_.object_name(x));
}

MorphismId PosetCategory::arrow(ObjectId a, ObjectId b) const {
  const auto& h = cat_.hom(a, b);
  if (h.empty()) throw InputError("no morphism " + cat_.object_name(a) + " -> " + cat_.object_name(b));
  return h.front();
}

std::vector<MorphismId> PosetCategory::generators() const {
  std::vector<MorphismId> out;
  const auto n = cat_.object_count();
  for (MorphismId m = 0; m < cat_.morphism_count(); ++m) {
    if (cat_.is_identity(m)) continue;
    const auto a = cat_.source(m), b = cat_.target(m);
    bool factors = false;
    for (ObjectId c = 0; c < n && !factors; ++c) factors = c != a && c != b && leq(a, c) && leq(c, b);
    if (!factors) out.push_back(m);
  }
  return out;
}

PosetCategory make_poset(const std::vector<std::string>& objects, const std::vector<Cover>& covers,
                         const std::string& bottom, std::string name) {
  const auto n = static_cast<std::uint32_t>(objects.size());
  std::unordered_map<std::string, ObjectId> idx;
  for (ObjectId i = 0; i < n; ++i)
    if (!idx.emplace(objects[i], i).second) throw InputError("duplicate object " + objects[i]);
  const auto lookup = [&](const std::string& o) {
    auto it = idx.find(o);
    if (it == idx.end()) throw InputError("unknown object " + o);
    return it->second;
  };

  // cover_name[a][b] for direct covers; BFS for composite names.
  std::vector<std::vector<std::string>> direct(n, std::vector<std::string>(n));
  std::vector<std::vector<ObjectId>> adj(n);
  for (const auto& c : covers) {
    const auto a = lookup(c.source), b = lookup(c.target);
    if (a == b) throw StructureError("not a poset", "loop on " + c.source);
    if (!direct[a][b].empty()) throw InputError("duplicate cover " + c.source + " -> " + c.target);
    direct[a][b] = c.name.empty() ? c.source + c.target : c.name;
    adj[a].push_back(b);
  }
  std::vector<std::vector<std::string>> path_name(n, std::vector<std::string>(n));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (ObjectId a = 0; a < n; ++a) {
    reach[a][a] = true;
    std::deque<ObjectId> queue{a};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x]) {
        if (reach[a][y]) continue;
        reach[a][y] = true;
        path_name[a][y] = x == a ? direct[a][y] : direct[x][y] + "." + path_name[a][x];
        queue.push_back(y);
      }
    }
  }
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      if (a != b && reach[a][b] && reach[b][a])
        throw StructureError("not a poset", "cycle between " + objects[a] + " and " + objects[b]);

  CategoryBuilder builder;
  for (const auto& o : objects) builder.add_object(o);
  std::vector<std::vector<std::int64_t>> arrow(n, std::vector<std::int64_t>(n, -1));
  for (ObjectId a = 0; a < n; ++a) arrow[a][a] = builder.identity(a);
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      if (a != b && reach[a][b]) {
        const auto& nm = direct[a][b].empty() ? path_name[a][b] : direct[a][b];
        arrow[a][b] = builder.add_morphism(nm, a, b);
      }
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      for (ObjectId c = 0; c < n; ++c)
        if (a != b && b != c && reach[a][b] && reach[b][c])
          builder.set_composite(static_cast<MorphismId>(arrow[b][c]), static_cast<MorphismId>(arrow[a][b]),
                                static_cast<MorphismId>(arrow[a][c]));
  return PosetCategory(builder.build(std::move(name)), lookup(bottom));
}

std::optional<ObjectId> find_poset_bottom(const FinCategory& cat) {
  const auto n = cat.object_count();
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) {
      if (cat.hom(a, b).size() > 1) return std::nullopt;
      if (a != b && !cat.hom(a, b).empty() && !cat.hom(b, a).empty()) return std::nullopt;
    }
  for (ObjectId o = 0; o < n; ++o) {
    bool all = true;
    for (ObjectId x = 0; x < n && all; ++x) all = !cat.hom(o, x).empty();
    if (all) return o;
  }
  return std::nullopt;
}

const PosetCategory& build_delta3() {
  static const PosetCategory p =
      make_poset({"X", "Y", "Z"}, {{"X", "Y", "f"}, {"Y", "Z", "g"}}, "X", "Delta3");
  return p;
}

const PosetCategory& build_gamma() {
  static const PosetCategory p = make_poset({"X", "Y", "Z"}, {{"X", "Y", "f"}, {"X", "Z", "g"}}, "X", "Gamma");
  return p;
}

CheckResult check_functor_detailed(const Functor& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.on_objects.size() != s.object_count() || f.on_morphisms.size() != s.morphism_count())
    return CheckResult::fail("functor maps have the wrong size");
  for (auto o : f.on_objects)
    if (o >= t.object_count()) return CheckResult::fail("object image out of range");
  for (auto m : f.on_morphisms)
    if (m >= t.morphism_count()) return CheckResult::fail("morphism image out of range");
  for (MorphismId m = 0; m < s.morphism_count(); ++m) {
    const auto fm = f.on_morphisms[m];
    if (t.source(fm) != f.on_objects[s.source(m)] || t.target(fm) != f.on_objects[s.target(m)])
      return CheckResult::fail("F(" + s.morphism_name(m) + ") has the wrong endpoints");
  }
  for (ObjectId o = 0; o < s.object_count(); ++o)
    if (f.on_morphisms[s.identity(o)] != t.identity(f.on_objects[o]))
      return CheckResult::fail("identity of " + s.object_name(o) + " not preserved");
  for (MorphismId m1 = 0; m1 < s.morphism_count(); ++m1)
    for (MorphismId m2 = 0; m2 < s.morphism_count(); ++m2) {
      auto c = s.compose(m2, m1);
      if (!c) continue;
      if (t.compose(f.on_morphisms[m2], f.on_morphisms[m1]) != f.on_morphisms[*c])
        return CheckResult::fail("F(" + s.morphism_name(m2) + " o " + s.morphism_name(m1) + ") = " +
                                 t.morphism_name(f.on_morphisms[*c]) + " but F(" + s.morphism_name(m2) + ") o F(" +
                                 s.morphism_name(m1) + ") = " +
                                 t.morphism_name(*t.compose(f.on_morphisms[m2], f.on_morphisms[m1])));
    }
  return CheckResult::pass();
}

bool check_functor(const Functor& f) { return check_functor_detailed(f).ok; }

Functor identity_functor(const FinCategory& c) {
  Functor f{c, c, {}, {}};
  for (ObjectId o = 0; o < c.object_count(); ++o) f.on_objects.push_back(o);
  for (MorphismId m = 0; m < c.morphism_count(); ++m) f.on_morphisms.push_back(m);
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!same_category(f.target, g.source)) throw InputError("functors are not composable");
  Functor out{f.source, g.target, {}, {}};
  for (auto o : f.on_objects) out.on_objects.push_back(g.on_objects.at(o));
  for (auto m : f.on_morphisms) out.on_morphisms.push_back(g.on_morphisms.at(m));
  return out;
}

bool is_bijective(const Functor& f) {
  const auto bij = [](const std::vector<std::uint32_t>& map, std::uint32_t size) {
    if (map.size() != size) return false;
    std::vector<bool> hit(size, false);
    for (auto v : map) {
      if (v >= size || hit[v]) return false;
      hit[v] = true;
    }
    return true;
  };
  return bij(f.on_objects, f.target.object_count()) && bij(f.on_morphisms, f.target.morphism_count());
}

CheckResult check_natural_detailed(const NaturalTransformation& eta) {
  const auto& F = eta.source;
  const auto& G = eta.target;
  if (!same_category(F.source, G.source) || !same_category(F.target, G.target))
    return CheckResult::fail("functors do not share domain and codomain");
  const auto& d = F.source;
  const auto& c = F.target;
  if (eta.components.size() != d.object_count()) return CheckResult::fail("one component per object required");
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    const auto k = eta.components[x];
    if (k >= c.morphism_count() || c.source(k) != F.on_objects[x] || c.target(k) != G.on_objects[x])
      return CheckResult::fail("component at " + d.object_name(x) + " has the wrong endpoints");
  }
  for (MorphismId m = 0; m < d.morphism_count(); ++m) {
    const auto x = d.source(m), y = d.target(m);
    const auto lhs = c.compose(eta.components[y], F.on_morphisms[m]);
    const auto rhs = c.compose(G.on_morphisms[m], eta.components[x]);
    if (lhs != rhs) return CheckResult::fail("naturality square fails at " + d.morphism_name(m));
  }
  return CheckResult::pass();
}

bool check_natural(const NaturalTransformation& eta) { return check_natural_detailed(eta).ok; }

GSet::GSet(FiniteGroup group, std::vector<std::string> points, std::vector<std::uint32_t> action) {
  if (points.empty()) throw InputError("G-set carrier is empty");
  if (action.size() != std::size_t{group.order()} * points.size()) throw InputError("action table has the wrong size");
  for (auto v : action)
    if (v >= points.size()) throw InputError("action table entry out of range");
  d_ = std::make_shared<const Data>(Data{std::move(group), std::move(points), std::move(action)});
}

std::optional<std::uint32_t> GSet::find_point(std::string_view name) const {
  for (std::uint32_t x = 0; x < size(); ++x)
    if (d_->points[x] == name) return x;
  return std::nullopt;
}

CheckResult check_gset_axioms(const GSet& s) {
  const auto& g = s.group();
  for (std::uint32_t x = 0; x < s.size(); ++x)
    if (s.act(g.identity(), x) != x) return CheckResult::fail("identity moves point " + s.point(x));
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < g.order(); ++b)
      for (std::uint32_t x = 0; x < s.size(); ++x)
        if (s.act(g.mul(a, b), x) != s.act(a, s.act(b, x)))
          return CheckResult::fail("(" + g.label(a) + "*" + g.label(b) + ")." + s.point(x) + " differs");
  return CheckResult::pass();
}

const GSet& pitch_class_gset() {
  static const GSet s = [] {
    std::vector<std::string> points;
    for (std::uint32_t p = 0; p < pitch_class_count; ++p) points.push_back(std::to_string(p));
    std::vector<std::uint32_t> action(24 * pitch_class_count);
    for (std::uint32_t g = 0; g < 24; ++g)
      for (std::uint32_t x = 0; x < pitch_class_count; ++x)
        action[g * pitch_class_count + x] = TIElement::from_index(g).apply(static_cast<std::uint8_t>(x));
    return GSet(ti_group(), std::move(points), std::move(action));
  }();
  return s;
}

Pullback pullback_category(const Functor& p, const Functor& q) {
  if (!same_category(p.target, q.target)) throw InputError("pullback needs functors with a common codomain");
  const auto& a = p.source;
  const auto& b = q.source;
  CategorySpec s;
  std::vector<std::pair<ObjectId, ObjectId>> objs;
  std::unordered_map<std::uint64_t, ObjectId> obj_index;
  for (ObjectId x = 0; x < a.object_count(); ++x)
    for (ObjectId y = 0; y < b.object_count(); ++y)
      if (p.on_objects[x] == q.on_objects[y]) {
        obj_index.emplace(std::uint64_t{x} * b.object_count() + y, static_cast<ObjectId>(objs.size()));
        objs.emplace_back(x, y);
        s.objects.push_back("(" + a.object_name(x) + "," + b.object_name(y) + ")");
      }
  if (objs.empty()) throw InputError("pullback is empty");
  std::vector<std::pair<MorphismId, MorphismId>> mors;
  std::unordered_map<std::uint64_t, MorphismId> mor_index;
  for (MorphismId m = 0; m < a.morphism_count(); ++m)
    for (MorphismId n = 0; n < b.morphism_count(); ++n)
      if (p.on_morphisms[m] == q.on_morphisms[n]) {
        const auto src = obj_index.at(std::uint64_t{a.source(m)} * b.object_count() + b.source(n));
        const auto tgt = obj_index.at(std::uint64_t{a.target(m)} * b.object_count() + b.target(n));
        mor_index.emplace(std::uint64_t{m} * b.morphism_count() + n, static_cast<MorphismId>(mors.size()));
        mors.emplace_back(m, n);
        s.morphisms.push_back({"(" + a.morphism_name(m) + "," + b.morphism_name(n) + ")", src, tgt});
      }
  for (const auto& [x, y] : objs)
    s.identities.push_back(mor_index.at(std::uint64_t{a.identity(x)} * b.morphism_count() + b.identity(y)));
  const auto mc = mors.size();
  s.compose.assign(mc * mc, kUndefined);
  for (std::size_t i = 0; i < mc; ++i)
    for (std::size_t j = 0; j < mc; ++j) {
      auto ca = a.compose(mors[i].first, mors[j].first);
      auto cb = b.compose(mors[i].second, mors[j].second);
      if (ca && cb) s.compose[i * mc + j] = static_cast<std::int32_t>(mor_index.at(std::uint64_t{*ca} * b.morphism_count() + *cb));
    }
  FinCategory cat(std::move(s), "pullback");
  Functor left{cat, a, {}, {}}, right{cat, b, {}, {}};
  for (const auto& [x, y] : objs) {
    left.on_objects.push_back(x);
    right.on_objects.push_back(y);
  }
  for (const auto& [m, n] : mors) {
    left.on_morphisms.push_back(m);
    right.on_morphisms.push_back(n);
  }
  return {cat, left, right};
}

}  // namespace pknets
