#include "doctest.h"
#include "pknets/category.hpp"
#include "pknets/groupoid.hpp"
#include "pknets/ti_group.hpp"

using namespace pknets;

namespace {

std::uint32_t ti(const char* label) { return *ti_group().find(label); }

Functor poset_functor(const PosetCategory& p, std::vector<std::pair<const char*, const char*>> assignment) {
  const auto& d = p.category();
  Functor f{d, group_category(ti_group()), std::vector<ObjectId>(d.object_count(), 0),
            std::vector<MorphismId>(d.morphism_count(), ti("T0"))};
  for (auto [m, g] : assignment) f.on_morphisms[*d.find_morphism(m)] = ti(g);
  return f;
}

}  // namespace

TEST_CASE("the two three-object shapes") {
  const auto& d3 = build_delta3();
  const auto& gm = build_gamma();
  CHECK(d3.category().morphism_count() == 6);
  CHECK(gm.category().morphism_count() == 5);
  for (const auto* p : {&d3, &gm}) {
    CHECK(p->category().object_name(p->bottom()) == "X");
    for (ObjectId x = 0; x < 3; ++x) CHECK(p->leq(p->bottom(), x));
  }
  CHECK(d3.category().find_morphism("g.f").has_value());
  CHECK(d3.generators().size() == 2);
  CHECK(gm.generators().size() == 2);
  CHECK(find_poset_bottom(d3.category()) == d3.bottom());
  CHECK_FALSE(find_poset_bottom(group_category(ti_group())).has_value());
}

TEST_CASE("functor checks over the major-triad shape") {
  const auto& d3 = build_delta3();
  const auto good = poset_functor(d3, {{"f", "T4"}, {"g", "T3"}, {"g.f", "T7"}});
  CHECK(check_functor(good));
  const auto bad = poset_functor(d3, {{"f", "T4"}, {"g", "T3"}, {"g.f", "T8"}});
  const auto r = check_functor_detailed(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("F(g o f)") != std::string::npos);
  CHECK(check_functor(identity_functor(d3.category())));
  CHECK(check_functor(identity_functor(group_category(ti_group()))));
}

TEST_CASE("naturality squares over Gamma") {
  const auto& gm = build_gamma();
  const auto u = poset_functor(gm, {{"f", "T4"}, {"g", "T7"}});
  NaturalTransformation eta{u, u, {ti("T2"), ti("T2"), ti("T2")}};
  CHECK(check_natural(eta));
  eta.components = {ti("I8"), ti("I8"), ti("I8")};
  CHECK_FALSE(check_natural(eta));
  eta.components = {ti("I8"), ti("I4"), ti("I10")};
  CHECK(check_natural(eta));
  NaturalTransformation id{u, u, {ti("T0"), ti("T0"), ti("T0")}};
  CHECK(check_natural(id));
  NaturalTransformation mismatched{u, poset_functor(build_delta3(), {}), {0, 0, 0}};
  CHECK_FALSE(check_natural(mismatched));
}

TEST_CASE("category construction errors") {
  CHECK_THROWS_AS(FinCategory(CategorySpec{}), InputError);

  CategoryBuilder b;
  const auto x = b.add_object("X");
  const auto y = b.add_object("Y");
  const auto f = b.add_morphism("f", x, y);
  const auto g = b.add_morphism("g", y, x);
  CHECK_THROWS_AS(b.build(), StructureError);  // g∘f missing
  const auto s = b.spec();
  CHECK_FALSE(check_category_axioms(s).ok);

  // Make X ⇄ Y an isomorphism and check it becomes a connected groupoid.
  b.set_composite(g, f, b.identity(x));
  b.set_composite(f, g, b.identity(y));
  const auto cat = b.build("iso");
  const Groupoid gd(cat);
  CHECK(gd.connected());
  CHECK(gd.inverse(f) == g);
  CHECK(check_groupoid_axioms(gd));

  CategoryBuilder nonassoc;
  const auto o = nonassoc.add_object("*");
  const auto a = nonassoc.add_morphism("a", o, o);
  nonassoc.set_composite(a, a, a);  // a∘a = a makes a idempotent, still associative
  CHECK_NOTHROW(nonassoc.build());
  CHECK_THROWS_AS(Groupoid(nonassoc.build()), StructureError);
}

TEST_CASE("associativity failures are located") {
  auto spec = group_category(cyclic_group(3)).spec();
  spec.compose[1 * 3 + 1] = 0;  // 1+1 = 0 breaks the table
  const auto r = check_category_axioms(spec);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("associative") != std::string::npos);
}

TEST_CASE("posets reject cycles and missing bottoms") {
  CHECK_THROWS_AS(make_poset({"A", "B"}, {{"A", "B", "f"}, {"B", "A", "g"}}, "A"), StructureError);
  CHECK_THROWS_AS(make_poset({"A", "B", "C"}, {{"A", "B", "f"}}, "A"), StructureError);
  const auto chain = make_poset({"A", "B", "C", "D"}, {{"A", "B", "f"}, {"B", "C", "g"}, {"C", "D", "h"}}, "A");
  CHECK(chain.category().morphism_count() == 4 + 6);
  CHECK(chain.category().find_morphism("h.g.f").has_value());
  CHECK(chain.generators().size() == 3);
}

TEST_CASE("pitch-class action") {
  const auto& s = pitch_class_gset();
  CHECK(check_gset_axioms(s));
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n)
      for (std::uint32_t x = 0; x < 12; ++x)
        CHECK(s.act(TIElement::T(m).index(), s.act(TIElement::T(n).index(), x)) == s.act(TIElement::T(m + n).index(), x));
  std::vector<std::uint32_t> broken = s.action();
  std::swap(broken[TIElement::T(1).index() * 12 + 0], broken[TIElement::T(1).index() * 12 + 1]);
  CHECK_FALSE(check_gset_axioms(GSet(ti_group(), {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"}, broken)));
}

TEST_CASE("pullback of identities reproduces the category") {
  const auto& d = build_delta3().category();
  const auto pb = pullback_category(identity_functor(d), identity_functor(d));
  CHECK(pb.category.object_count() == d.object_count());
  CHECK(pb.category.morphism_count() == d.morphism_count());
  CHECK(check_functor(pb.to_left));
  CHECK(is_bijective(pb.to_left));
  CHECK(is_bijective(pb.to_right));
}

TEST_CASE("pullback over one-object categories is the fiber product of groups") {
  const auto z4 = cyclic_group(4), z6 = cyclic_group(6), z2 = cyclic_group(2);
  const auto c4 = group_category(z4), c6 = group_category(z6), c2 = group_category(z2);
  Functor p{c4, c2, {0}, {}}, q{c6, c2, {0}, {}};
  for (std::uint32_t a = 0; a < 4; ++a) p.on_morphisms.push_back(a % 2);
  for (std::uint32_t b = 0; b < 6; ++b) q.on_morphisms.push_back(b % 2);
  REQUIRE(check_functor(p));
  REQUIRE(check_functor(q));
  const auto pb = pullback_category(p, q);

  // Direct fiber product {(a,b) : a ≡ b mod 2} inside Z4 × Z6.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fiber;
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 6; ++b)
      if (a % 2 == b % 2) fiber.emplace_back(a, b);
  REQUIRE(pb.category.object_count() == 1);
  REQUIRE(pb.category.morphism_count() == fiber.size());
  for (MorphismId m = 0; m < pb.category.morphism_count(); ++m) {
    const std::pair<std::uint32_t, std::uint32_t> pair{pb.to_left.on_morphisms[m], pb.to_right.on_morphisms[m]};
    CHECK(std::find(fiber.begin(), fiber.end(), pair) != fiber.end());
  }
  for (MorphismId m = 0; m < pb.category.morphism_count(); ++m)
    for (MorphismId n = 0; n < pb.category.morphism_count(); ++n) {
      const auto c = *pb.category.compose(m, n);
      CHECK(pb.to_left.on_morphisms[c] == z4.mul(pb.to_left.on_morphisms[m], pb.to_left.on_morphisms[n]));
      CHECK(pb.to_right.on_morphisms[c] == z6.mul(pb.to_right.on_morphisms[m], pb.to_right.on_morphisms[n]));
    }
  CHECK(check_functor(pb.to_left));
  CHECK(check_functor(pb.to_right));
}

TEST_CASE("hom-set sizes are constant on groupoid components") {
  // Two components: pair groupoid of Z3 on 2 objects and a lone Z2.
  const auto left = pair_groupoid(2, cyclic_group(3)).category();
  CategoryBuilder b;
  for (ObjectId o = 0; o < left.object_count(); ++o) b.add_object(left.object_name(o));
  const auto lone = b.add_object("L");
  std::vector<MorphismId> map(left.morphism_count());
  for (MorphismId m = 0; m < left.morphism_count(); ++m) {
    if (left.is_identity(m)) map[m] = b.identity(left.source(m));
    else map[m] = b.add_morphism(left.morphism_name(m), left.source(m), left.target(m));
  }
  for (MorphismId m2 = 0; m2 < left.morphism_count(); ++m2)
    for (MorphismId m1 = 0; m1 < left.morphism_count(); ++m1)
      if (auto c = left.compose(m2, m1)) b.set_composite(map[m2], map[m1], map[*c]);
  const auto s = b.add_morphism("s", lone, lone);
  b.set_composite(s, s, b.identity(lone));
  const Groupoid g(b.build());
  CHECK(g.component_count() == 2);
  CHECK_FALSE(g.connected());
  CHECK_THROWS_AS(require_connected(g, "test"), DisconnectedError);
  for (ObjectId a = 0; a < g.object_count(); ++a)
    for (ObjectId c = 0; c < g.object_count(); ++c) {
      if (g.component(a) != g.component(c)) {
        CHECK(g.category().hom(a, c).empty());
        continue;
      }
      CHECK(g.category().hom(a, c).size() == g.category().hom(a, a).size());
    }
}

TEST_CASE("pair groupoid structure") {
  const auto g = pair_groupoid(3, cyclic_group(3));
  CHECK(g.category().morphism_count() == 27);
  CHECK(g.connected());
  CHECK(check_groupoid_axioms(g));
  CHECK(find_isomorphism(g.end_group(1), cyclic_group(3)).has_value());
}
