#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pknets/category.hpp"
#include "pknets/groupoid.hpp"

namespace pknets {

/// A functor F: Δ → G from a small category into a one-object group
/// category. Compared by name.
class ChordClass {
 public:
  /// `values[m]` is F(m) as an element index of `group`. Throws
  /// StructureError if the assignment is not functorial.
  ChordClass(std::string name, FiniteGroup group, FinCategory delta, std::vector<std::uint32_t> values);

  const std::string& name() const noexcept { return d_->name; }
  const FiniteGroup& group() const noexcept { return d_->group; }
  const FinCategory& delta() const noexcept { return d_->delta; }
  std::uint32_t value(MorphismId m) const { return d_->values.at(m); }
  const std::vector<std::uint32_t>& values() const noexcept { return d_->values; }
  /// Set when Δ is a poset with a bottom object.
  std::optional<ObjectId> bottom() const noexcept { return d_->bottom; }
  /// The functor itself, targeting group_category(group()).
  Functor functor() const;

  friend bool operator==(const ChordClass& a, const ChordClass& b) noexcept { return a.name() == b.name(); }

 private:
  struct Data {
    std::string name;
    FiniteGroup group;
    FinCategory delta;
    std::vector<std::uint32_t> values;
    std::optional<ObjectId> bottom;
    FinCategory target;
  };
  std::shared_ptr<const Data> d_;
};

/// Looks up an element by label; for T/I also accepts "T-2" and lowercase.
std::optional<std::uint32_t> parse_element(const FiniteGroup& g, std::string_view label);

/// Builds a class from values on a generating set of morphisms, given as
/// morphism name → group element label. Values on composites are derived;
/// explicit values on composites must agree. Throws InputError for unknown
/// names or morphisms the assignment does not determine.
ChordClass make_chord_class(std::string name, const FiniteGroup& group, const FinCategory& delta,
                            const std::map<std::string, std::string>& assignments);

/// A natural transformation between two chord classes over the same Δ.
struct GDeltaMorphism {
  ChordClass source;
  ChordClass target;
  /// components[X] : F(X) → F'(X), as group element indices.
  std::vector<std::uint32_t> components;
  /// Component at the bottom object, or at object 0 when Δ has no bottom.
  std::uint32_t label = 0;

  NaturalTransformation natural_transformation() const;
};

/// Every naturality square commutes for the given components.
bool components_natural(const ChordClass& f, const ChordClass& f2, const std::vector<std::uint32_t>& components);

/// Hom(F, F') in G's element order of η_O, by propagation from the bottom
/// object. Falls back to homset_general when Δ has no bottom.
std::vector<GDeltaMorphism> homset(const ChordClass& f, const ChordClass& f2, const Limits& limits = {});

/// Any finite Δ: one free component per connected component of Δ,
/// propagated along a spanning tree, then all squares checked. Throws
/// ResourceError when |G|^components exceeds the search bound.
std::vector<GDeltaMorphism> homset_general(const ChordClass& f, const ChordClass& f2, const Limits& limits = {});

/// The morphism of Hom(F, F') with η_O = g. Requires a bottom object.
GDeltaMorphism morphism_with_label(const ChordClass& f, const ChordClass& f2, std::uint32_t g);

/// η2∘η1, componentwise. Throws InputError unless target(η1) = source(η2).
GDeltaMorphism compose(const GDeltaMorphism& eta2, const GDeltaMorphism& eta1);
GDeltaMorphism inverse(const GDeltaMorphism& eta);
GDeltaMorphism identity_morphism(const ChordClass& f);

/// Element label, with transpositions above 6 shown negative for T/I when
/// `signed_labels` is set.
std::string element_label(const FiniteGroup& g, std::uint32_t x, bool signed_labels = false);

/// "^{UV}T3".
std::string morphism_label(const GDeltaMorphism& eta, bool signed_labels = false);

struct ComponentEntry {
  std::string object;
  std::uint32_t element;
  std::string label;
};

std::vector<ComponentEntry> component_table(const GDeltaMorphism& eta, bool signed_labels = false);

/// The full subcategory of G^Δ on `classes`.
struct FunctorGroupoid {
  Groupoid groupoid;
  std::vector<ChordClass> classes;
  /// Indexed by morphism id of `groupoid`.
  std::vector<GDeltaMorphism> morphisms;

  /// Morphism id of η, or nullopt if it is not in this groupoid.
  std::optional<MorphismId> find(const GDeltaMorphism& eta) const;
};

/// Throws InputError on an empty list, duplicate names, or classes over
/// different Δ or G.
FunctorGroupoid materialize_groupoid(const std::vector<ChordClass>& classes, const Limits& limits = {});

}  // namespace pknets
