#pragma once

#include <string>
#include <vector>

#include "pknets/extension.hpp"
#include "pknets/functor_groupoid.hpp"
#include "pknets/pknet.hpp"

namespace pknets {

/// Π(η): the quotient part h of η's label in the extension.
std::uint32_t project(const GDeltaMorphism& eta, const GroupExtension& e);

/// Π on objects: the class over H with values π(F(m)).
ChordClass project_class(const ChordClass& f, const GroupExtension& e);

/// A subcategory of H^Δ with one morphism per ordered pair of objects.
struct SectionSubcategory {
  FiniteGroup quotient;
  std::vector<std::string> objects;
  /// choice[i * n + j] is the H-element on the pair (objects[i], objects[j]).
  std::vector<std::uint32_t> choice;

  std::uint32_t at(std::size_t i, std::size_t j) const { return choice[i * objects.size() + j]; }
};

/// Throws StructureError naming the failing pair or triple unless every
/// diagonal choice is the identity and choice(V,W)·choice(U,V) = choice(U,W).
SectionSubcategory build_section(const FiniteGroup& quotient, std::vector<std::string> objects,
                                 std::vector<std::uint32_t> choice);

struct SectionPair {
  std::string from;
  std::string to;
  std::uint32_t h = 0;
};

/// Pairs not listed get `fallback` off the diagonal and the identity on it.
/// Throws InputError for unknown object names.
SectionSubcategory build_section(const FiniteGroup& quotient, std::vector<std::string> objects,
                                 const std::vector<SectionPair>& pairs, std::uint32_t fallback);

/// The all-identity section.
SectionSubcategory identity_section(const FiniteGroup& quotient, std::vector<std::string> objects);

/// The pullback of Π along the section's inclusion, as a wide subgroupoid
/// of the materialized G^Δ.
struct SubGroupoid {
  FunctorGroupoid ambient;
  SectionSubcategory section;
  /// kept[m] for each morphism id m of the ambient groupoid.
  std::vector<bool> kept;

  std::vector<MorphismId> hom(ObjectId a, ObjectId b) const;
  std::size_t morphism_count() const;
  /// The kept morphisms as a groupoid of their own (ids renumbered in
  /// ambient order, names kept).
  Groupoid as_groupoid() const;
};

/// Throws InputError when the classes are not over E's group or the section
/// objects are not the class names in order.
SubGroupoid pullback_subgroupoid(const std::vector<ChordClass>& classes, const GroupExtension& e,
                                 const SectionSubcategory& section, const Limits& limits = {});

struct CosetWitness {
  std::string from;
  std::string to;
  /// The hom-set labels equal representative · ι(Z).
  std::uint32_t representative = 0;
  bool is_coset = false;
};

struct Prop34Report {
  bool ok = false;
  /// One entry per object: End(U) ≅ Z.
  std::vector<bool> end_isomorphic;
  std::vector<CosetWitness> cosets;
  /// Closed under composition and inverses, contains identities.
  bool closed = false;
};

/// End(U) ≅ Z for every object, by brute-force isomorphism search, and
/// every hom-set's labels form a left coset of ι(Z) in G.
Prop34Report verify_prop3_prop4(const SubGroupoid& sub, const GroupExtension& e);

/// P_{R,S} restricted to the subgroupoid, as a set-valued functor on
/// `sub.as_groupoid()`: each object goes to N_F, each morphism to its action.
/// Points are named by their φ values, e.g. "0,4,7".
SetValuedDiagram net_diagram(const SubGroupoid& sub, const std::shared_ptr<const SetValuedDiagram>& r, const GSet& s,
                             const Limits& limits = {});

}  // namespace pknets
