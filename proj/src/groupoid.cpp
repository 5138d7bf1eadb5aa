#include "pknets/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace pknets {

Groupoid::Groupoid(FinCategory cat) : cat_(std::move(cat)) {
  const auto m = cat_.morphism_count();
  inverse_.resize(m);
  for (MorphismId i = 0; i < m; ++i) {
    const auto a = cat_.source(i), b = cat_.target(i);
    bool found = false;
    for (auto j : cat_.hom(b, a)) {
      if (cat_.compose(j, i) == cat_.identity(a) && cat_.compose(i, j) == cat_.identity(b)) {
        inverse_[i] = j;
        found = true;
        break;
      }
    }
    if (!found) throw StructureError("not a groupoid", "morphism " + cat_.morphism_name(i) + " has no inverse");
  }

  const auto n = cat_.object_count();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  component_.assign(n, unset);
  for (ObjectId start = 0; start < n; ++start) {
    if (component_[start] != unset) continue;
    std::deque<ObjectId> queue{start};
    component_[start] = components_;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (ObjectId y = 0; y < n; ++y)
        if (component_[y] == unset && (!cat_.hom(x, y).empty() || !cat_.hom(y, x).empty())) {
          component_[y] = components_;
          queue.push_back(y);
        }
    }
    ++components_;
  }
}

MorphismId Groupoid::compose(MorphismId m2, MorphismId m1) const { return cat_.then(m1, m2); }

FiniteGroup Groupoid::end_group(ObjectId o) const {
  const auto& ends = cat_.hom(o, o);
  const auto k = static_cast<std::uint32_t>(ends.size());
  std::vector<std::uint32_t> pos(cat_.morphism_count(), 0);
  for (std::uint32_t i = 0; i < k; ++i) pos[ends[i]] = i;
  GroupTable t{k, std::vector<std::uint32_t>(std::size_t{k} * k), {}};
  for (std::uint32_t i = 0; i < k; ++i) {
    t.labels.push_back(cat_.morphism_name(ends[i]));
    for (std::uint32_t j = 0; j < k; ++j) t.cells[std::size_t{i} * k + j] = pos[*cat_.compose(ends[i], ends[j])];
  }
  return FiniteGroup(std::move(t), "End(" + cat_.object_name(o) + ")");
}

CheckResult check_groupoid_axioms(const Groupoid& g) {
  const auto& c = g.category();
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const auto inv = g.inverse(m);
    if (c.compose(inv, m) != c.identity(c.source(m)) || c.compose(m, inv) != c.identity(c.target(m)))
      return CheckResult::fail("inverse of " + c.morphism_name(m) + " is not two-sided");
    if (g.inverse(inv) != m) return CheckResult::fail("inversion is not an involution at " + c.morphism_name(m));
  }
  return CheckResult::pass();
}

Groupoid pair_groupoid(std::uint32_t n, const FiniteGroup& z) {
  if (n == 0) throw InputError("pair groupoid needs at least one object");
  const auto k = z.order();
  CategorySpec s;
  for (std::uint32_t e = 0; e < n; ++e) s.objects.push_back(std::to_string(e + 1));
  for (std::uint32_t e = 0; e < n; ++e)
    for (std::uint32_t f = 0; f < n; ++f)
      for (std::uint32_t x = 0; x < k; ++x)
        s.morphisms.push_back({"(" + s.objects[e] + "," + s.objects[f] + "," + z.label(x) + ")", e, f});
  const auto id_of = [&](std::uint32_t e, std::uint32_t f, std::uint32_t x) { return (e * n + f) * k + x; };
  for (std::uint32_t e = 0; e < n; ++e) s.identities.push_back(id_of(e, e, z.identity()));
  const auto m = s.morphisms.size();
  s.compose.assign(m * m, kUndefined);
  for (std::uint32_t e = 0; e < n; ++e)
    for (std::uint32_t f = 0; f < n; ++f)
      for (std::uint32_t g = 0; g < n; ++g)
        for (std::uint32_t x = 0; x < k; ++x)
          for (std::uint32_t y = 0; y < k; ++y)
            s.compose[std::size_t{id_of(f, g, y)} * m + id_of(e, f, x)] = static_cast<std::int32_t>(id_of(e, g, z.mul(y, x)));
  return Groupoid(FinCategory(std::move(s), "Pair" + std::to_string(n) + "x" + z.name()));
}

Groupoid shuffled_groupoid(const Groupoid& g, std::uint64_t seed) {
  const auto& spec = g.category().spec();
  const auto m = static_cast<std::uint32_t>(spec.morphisms.size());
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  CategorySpec out;
  out.objects = spec.objects;
  out.morphisms.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) out.morphisms[perm[i]] = spec.morphisms[i];
  for (auto id : spec.identities) out.identities.push_back(perm[id]);
  out.compose.assign(std::size_t{m} * m, kUndefined);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b)
      if (auto c = spec.compose[std::size_t{a} * m + b]; c != kUndefined)
        out.compose[std::size_t{perm[a]} * m + perm[b]] = static_cast<std::int32_t>(perm[c]);
  return Groupoid(FinCategory(std::move(out), g.category().name() + "~" + std::to_string(seed)));
}

void require_connected(const Groupoid& g, const char* operation) {
  if (!g.connected()) {
    throw DisconnectedError(std::string(operation) + " requires a connected groupoid; got " +
                            std::to_string(g.component_count()) + " components");
  }
}

}  // namespace pknets
