#pragma once

#include <cstdint>
#include <vector>

#include "pknets/category.hpp"
#include "pknets/group.hpp"

namespace pknets {

/// A finite category in which every morphism is invertible. Inverses and
/// connected components are computed once at construction.
class Groupoid {
 public:
  /// Throws StructureError naming the first non-invertible morphism.
  explicit Groupoid(FinCategory cat);

  const FinCategory& category() const noexcept { return cat_; }
  std::uint32_t object_count() const noexcept { return cat_.object_count(); }
  MorphismId inverse(MorphismId m) const { return inverse_.at(m); }
  MorphismId compose(MorphismId m2, MorphismId m1) const;

  std::uint32_t component_count() const noexcept { return components_; }
  std::uint32_t component(ObjectId o) const { return component_.at(o); }
  bool connected() const noexcept { return components_ == 1; }

  /// End(o) with elements in morphism-id order, labelled by morphism names.
  FiniteGroup end_group(ObjectId o) const;

 private:
  FinCategory cat_;
  std::vector<MorphismId> inverse_;
  std::vector<std::uint32_t> component_;
  std::uint32_t components_ = 0;
};

/// m⁻¹∘m and m∘m⁻¹ are identities and inversion is an involution.
CheckResult check_groupoid_axioms(const Groupoid& g);

/// The product of the pair groupoid on n objects with Z: morphisms
/// (e, e', z) : e → e' composed as (e',e'',z₂)∘(e,e',z₁) = (e,e'',z₂z₁).
/// Objects are named "1".."n"; morphism (e,e',z) has id (e·n + e')·|Z| + z.
Groupoid pair_groupoid(std::uint32_t n, const FiniteGroup& z);

/// The same groupoid with morphism ids permuted by a seeded shuffle. Names,
/// objects and the composition law are carried along.
Groupoid shuffled_groupoid(const Groupoid& g, std::uint64_t seed);

/// Throws DisconnectedError unless `g` is connected.
void require_connected(const Groupoid& g, const char* operation);

}  // namespace pknets
