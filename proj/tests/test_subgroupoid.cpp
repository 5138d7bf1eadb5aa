#include <set>

#include "doctest.h"
#include "pknets/subgroupoid.hpp"
#include "pknets/ti_group.hpp"

using namespace pknets;

namespace {

std::uint32_t T(int n) { return TIElement::T(n).index(); }
std::uint32_t I(int n) { return TIElement::I(n).index(); }

ChordClass over_gamma(const char* name, const char* f, const char* g) {
  return make_chord_class(name, ti_group(), build_gamma().category(), {{"f", f}, {"g", g}});
}

std::vector<ChordClass> three_classes() {
  return {over_gamma("U", "T4", "T7"), over_gamma("V", "T3", "T7"), over_gamma("W", "I3", "I10")};
}

const FiniteGroup& z2() { return ti_extension().quotient(); }

// The section as a category with one morphism per ordered pair.
FinCategory section_category(const SectionSubcategory& s) {
  const auto n = static_cast<std::uint32_t>(s.objects.size());
  CategorySpec spec;
  spec.objects = s.objects;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      spec.morphisms.push_back({i == j ? "id_" + s.objects[i] : "s_" + s.objects[i] + s.objects[j], i, j});
  for (std::uint32_t i = 0; i < n; ++i) spec.identities.push_back(i * n + i);
  const auto m = n * n;
  spec.compose.assign(std::size_t{m} * m, kUndefined);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k) spec.compose[std::size_t{j * n + k} * m + (i * n + j)] = static_cast<std::int32_t>(i * n + k);
  return FinCategory(std::move(spec), "section");
}

}  // namespace

TEST_CASE("projection to the quotient") {
  const auto& e = ti_extension();
  const auto u = over_gamma("U", "T4", "T7");
  const auto v = over_gamma("V", "T3", "T7");
  CHECK(project(morphism_with_label(u, u, T(5)), e) == 0);
  CHECK(project(morphism_with_label(u, v, I(3)), e) == 1);
  // Π is full: both quotient elements occur in every hom-set.
  for (const auto& a : {u, v})
    for (const auto& b : {u, v}) {
      std::set<std::uint32_t> hit;
      for (const auto& eta : homset(a, b)) hit.insert(project(eta, e));
      CHECK(hit.size() == 2);
    }
  const auto pu = project_class(u, e);
  CHECK(pu.group() == z2());
  for (auto x : pu.values()) CHECK(x == 0);
  const auto wrong = make_chord_class("Z", cyclic_group(3), build_gamma().category(), {{"f", "1"}, {"g", "2"}});
  CHECK_THROWS_AS(project(identity_morphism(wrong), e), InputError);
}

TEST_CASE("section validation") {
  CHECK_NOTHROW(identity_section(z2(), {"U", "V", "W"}));
  CHECK_NOTHROW(build_section(z2(), {"U", "V"}, {0, 1, 1, 0}));
  try {
    build_section(z2(), {"U", "V"}, {0, 1, 0, 0});
    FAIL("expected rejection");
  } catch (const StructureError& err) {
    CHECK(std::string(err.witness()) == "(U,V,U)");
  }
  CHECK_THROWS_AS(build_section(z2(), {"U"}, {1}), StructureError);
  CHECK_THROWS_AS(build_section(z2(), {"U", "V"}, {0, 1}), InputError);
  CHECK_THROWS_AS(build_section(z2(), {"U", "V"}, {{"U", "X", 1}}, 0), InputError);
  const auto s = build_section(z2(), {"U", "V"}, {{"U", "V", 1}, {"V", "U", 1}}, 0);
  CHECK(s.at(0, 1) == 1);
  CHECK(s.at(1, 1) == 0);
}

TEST_CASE("identity section keeps only transpositions") {
  const auto& e = ti_extension();
  const auto u = over_gamma("U", "T4", "T7");
  const auto sub = pullback_subgroupoid({u}, e, identity_section(z2(), {"U"}));
  const auto end = sub.hom(0, 0);
  REQUIRE(end.size() == 12);
  for (std::size_t p = 0; p < 12; ++p) CHECK(sub.ambient.morphisms[end[p]].label == T(static_cast<int>(p)));
  const auto report = verify_prop3_prop4(sub, e);
  CHECK(report.ok);
  CHECK(report.end_isomorphic == std::vector<bool>{true});
}

TEST_CASE("pullbacks over three classes") {
  const auto& e = ti_extension();
  const auto classes = three_classes();
  const auto all_zero = pullback_subgroupoid(classes, e, identity_section(z2(), {"U", "V", "W"}));
  CHECK(all_zero.morphism_count() == 12 * 9);
  for (ObjectId a = 0; a < 3; ++a)
    for (ObjectId b = 0; b < 3; ++b) CHECK(all_zero.hom(a, b).size() == 12);
  CHECK(verify_prop3_prop4(all_zero, e).ok);

  // U,V on one side, W on the other.
  const auto mixed = build_section(z2(), {"U", "V", "W"}, {{"U", "W", 1}, {"W", "U", 1}, {"V", "W", 1}, {"W", "V", 1}}, 0);
  const auto sub = pullback_subgroupoid(classes, e, mixed);
  CHECK(sub.morphism_count() == 12 * 9);
  for (auto m : sub.hom(0, 2)) CHECK_FALSE(TIElement::from_index(sub.ambient.morphisms[m].label).is_transposition());
  for (auto m : sub.hom(0, 1)) CHECK(TIElement::from_index(sub.ambient.morphisms[m].label).is_transposition());
  const auto report = verify_prop3_prop4(sub, e);
  CHECK(report.ok);
  CHECK(report.closed);
  REQUIRE(report.cosets.size() == 9);
  for (const auto& w : report.cosets) CHECK(w.is_coset);
  CHECK(check_groupoid_axioms(sub.as_groupoid()));

  // Π restricted to the subgroupoid hits exactly the section's choices.
  const auto& cat = sub.ambient.groupoid.category();
  for (MorphismId m = 0; m < cat.morphism_count(); ++m)
    if (sub.kept[m]) CHECK(project(sub.ambient.morphisms[m], e) == mixed.at(cat.source(m), cat.target(m)));

  CHECK_THROWS_AS(pullback_subgroupoid(classes, e, identity_section(z2(), {"U", "W", "V"})), InputError);
}

TEST_CASE("a broken kept-set fails the report") {
  const auto& e = ti_extension();
  auto sub = pullback_subgroupoid(three_classes(), e, identity_section(z2(), {"U", "V", "W"}));
  const auto victim = sub.hom(0, 1)[3];
  sub.kept[victim] = false;
  const auto report = verify_prop3_prop4(sub, e);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.closed);
}

TEST_CASE("filtered subgroupoid equals the generic pullback") {
  const auto& e = ti_extension();
  const auto classes = three_classes();
  for (const auto& section : {identity_section(z2(), {"U", "V", "W"}),
                              build_section(z2(), {"U", "V", "W"}, {{"U", "V", 1}, {"V", "U", 1}, {"U", "W", 1}, {"W", "U", 1}}, 0)}) {
    const auto sub = pullback_subgroupoid(classes, e, section);
    const auto& g = sub.ambient;
    std::vector<ChordClass> projected;
    for (const auto& c : classes) projected.push_back(project_class(c, e));
    const auto h = materialize_groupoid(projected);

    Functor pi{g.groupoid.category(), h.groupoid.category(), {0, 1, 2}, {}};
    for (const auto& eta : g.morphisms) {
      std::vector<std::uint32_t> comps;
      for (auto x : eta.components) comps.push_back(e.project(x));
      const auto s = static_cast<std::size_t>(&eta - g.morphisms.data());
      const auto src = g.groupoid.category().source(static_cast<MorphismId>(s));
      const auto tgt = g.groupoid.category().target(static_cast<MorphismId>(s));
      const auto id = h.find(GDeltaMorphism{projected[src], projected[tgt], comps, comps[0]});
      REQUIRE(id);
      pi.on_morphisms.push_back(*id);
    }
    REQUIRE(check_functor(pi));

    const auto sc = section_category(section);
    Functor iota{sc, h.groupoid.category(), {0, 1, 2}, {}};
    for (MorphismId m = 0; m < sc.morphism_count(); ++m) {
      const auto i = sc.source(m), j = sc.target(m);
      iota.on_morphisms.push_back(*h.find(morphism_with_label(projected[i], projected[j], section.at(i, j))));
    }
    REQUIRE(check_functor(iota));

    const auto pb = pullback_category(pi, iota);
    CHECK(pb.category.object_count() == 3);
    CHECK(pb.category.morphism_count() == sub.morphism_count());
    std::set<MorphismId> left(pb.to_left.on_morphisms.begin(), pb.to_left.on_morphisms.end());
    std::set<MorphismId> kept;
    for (MorphismId m = 0; m < sub.kept.size(); ++m)
      if (sub.kept[m]) kept.insert(m);
    CHECK(left == kept);
  }
}
