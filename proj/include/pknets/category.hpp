#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "pknets/error.hpp"
#include "pknets/group.hpp"

namespace pknets {

using ObjectId = std::uint32_t;
using MorphismId = std::uint32_t;
inline constexpr std::int32_t kUndefined = -1;

struct MorphismSpec {
  std::string name;
  ObjectId source = 0;
  ObjectId target = 0;

  friend bool operator==(const MorphismSpec&, const MorphismSpec&) = default;
};

/// Extensional description of a finite category. `compose[m2 * M + m1]`
/// holds m2∘m1, or kUndefined when tgt(m1) != src(m2).
struct CategorySpec {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<MorphismId> identities;
  std::vector<std::int32_t> compose;

  friend bool operator==(const CategorySpec&, const CategorySpec&) = default;
};

/// Bookkeeping, identity and associativity checks over every composable
/// pair and triple.
CheckResult check_category_axioms(const CategorySpec& spec);

/// Immutable validated finite category; copies share state.
class FinCategory {
 public:
  /// Throws StructureError if check_category_axioms fails, InputError if
  /// there are no objects or names repeat.
  explicit FinCategory(CategorySpec spec, std::string name = {});

  std::uint64_t id() const noexcept;
  const std::string& name() const noexcept;
  const CategorySpec& spec() const noexcept;

  std::uint32_t object_count() const noexcept;
  std::uint32_t morphism_count() const noexcept;
  const std::string& object_name(ObjectId o) const;
  const std::string& morphism_name(MorphismId m) const;
  ObjectId source(MorphismId m) const;
  ObjectId target(MorphismId m) const;
  MorphismId identity(ObjectId o) const;
  bool is_identity(MorphismId m) const;

  /// m2∘m1 (m1 first), or nullopt when not composable.
  std::optional<MorphismId> compose(MorphismId m2, MorphismId m1) const;
  /// Throws InputError when not composable.
  MorphismId then(MorphismId m1, MorphismId m2) const;
  const std::vector<MorphismId>& hom(ObjectId a, ObjectId b) const;

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b) noexcept { return a.id() == b.id(); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Same construction, or structurally identical specs.
bool same_category(const FinCategory& a, const FinCategory& b);

/// Incremental construction: identities are created as "id_<object>" and
/// their composites filled in automatically.
class CategoryBuilder {
 public:
  ObjectId add_object(std::string name);
  MorphismId add_morphism(std::string name, ObjectId source, ObjectId target);
  void set_composite(MorphismId m2, MorphismId m1, MorphismId result);
  MorphismId identity(ObjectId o) const { return identities_.at(o); }

  CategorySpec spec() const;
  FinCategory build(std::string name = {}) const;

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismSpec> morphisms_;
  std::vector<MorphismId> identities_;
  std::vector<std::tuple<MorphismId, MorphismId, MorphismId>> composites_;
};

/// One-object category whose morphisms are the elements of `g` (same
/// indices and labels) composed by the group product.
FinCategory group_category(const FiniteGroup& g);

/// A thin category with a bottom object reaching every object.
class PosetCategory {
 public:
  /// Throws StructureError unless `cat` is a poset (at most one morphism per
  /// ordered pair, no non-trivial cycles) with `bottom` below everything.
  PosetCategory(FinCategory cat, ObjectId bottom);

  const FinCategory& category() const noexcept { return cat_; }
  ObjectId bottom() const noexcept { return bottom_; }
  bool leq(ObjectId a, ObjectId b) const { return !cat_.hom(a, b).empty(); }
  /// The unique morphism a → b; throws InputError when a ≰ b.
  MorphismId arrow(ObjectId a, ObjectId b) const;
  /// Covering (Hasse) morphisms: non-identities that do not factor.
  std::vector<MorphismId> generators() const;

 private:
  FinCategory cat_;
  ObjectId bottom_;
};

struct Cover {
  std::string source;
  std::string target;
  std::string name;
};

/// Transitive closure of `covers`. A composite morphism a→c is named by the
/// dotted chain of covers on the first path found, e.g. "g.f".
PosetCategory make_poset(const std::vector<std::string>& objects, const std::vector<Cover>& covers,
                         const std::string& bottom, std::string name = {});

/// The bottom object if `cat` is a poset with bottom element.
std::optional<ObjectId> find_poset_bottom(const FinCategory& cat);

/// X → Y (f), Y → Z (g), X → Z (g.f). Shared instance.
const PosetCategory& build_delta3();
/// X → Y (f), X → Z (g). Shared instance.
const PosetCategory& build_gamma();

struct Functor {
  FinCategory source;
  FinCategory target;
  std::vector<ObjectId> on_objects;
  std::vector<MorphismId> on_morphisms;
};

CheckResult check_functor_detailed(const Functor& f);
bool check_functor(const Functor& f);
Functor identity_functor(const FinCategory& c);
/// g∘f.
Functor compose_functors(const Functor& g, const Functor& f);
bool is_bijective(const Functor& f);

struct NaturalTransformation {
  Functor source;
  Functor target;
  /// components[X] : source(X) → target(X) in the common codomain.
  std::vector<MorphismId> components;
};

/// Every naturality square comp_Y ∘ F(m) = F'(m) ∘ comp_X commutes.
CheckResult check_natural_detailed(const NaturalTransformation& eta);
bool check_natural(const NaturalTransformation& eta);

/// A finite set with a left action of a finite group.
class GSet {
 public:
  /// `action[g * |X| + x]` is g·x. Only sizes and ranges are checked here.
  GSet(FiniteGroup group, std::vector<std::string> points, std::vector<std::uint32_t> action);

  const FiniteGroup& group() const noexcept { return d_->group; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(d_->points.size()); }
  const std::string& point(std::uint32_t x) const { return d_->points.at(x); }
  std::uint32_t act(std::uint32_t g, std::uint32_t x) const { return d_->action[std::size_t{g} * size() + x]; }
  const std::vector<std::uint32_t>& action() const noexcept { return d_->action; }
  std::optional<std::uint32_t> find_point(std::string_view name) const;

  friend bool operator==(const GSet& a, const GSet& b) noexcept {
    return a.d_ == b.d_ || (a.d_->group == b.d_->group && a.d_->action == b.d_->action);
  }

 private:
  struct Data {
    FiniteGroup group;
    std::vector<std::string> points;
    std::vector<std::uint32_t> action;
  };
  std::shared_ptr<const Data> d_;
};

/// e·x = x and (gh)·x = g·(h·x) for every pair and point.
CheckResult check_gset_axioms(const GSet& s);

/// T/I acting on the twelve pitch classes; points labelled "0".."11".
const GSet& pitch_class_gset();

struct Pullback {
  FinCategory category;
  Functor to_left;
  Functor to_right;
};

/// Objects (a,b) with P(a) = Q(b), morphisms (m,n) with P(m) = Q(n),
/// composed componentwise. Throws InputError on codomain mismatch.
Pullback pullback_category(const Functor& p, const Functor& q);

}  // namespace pknets
