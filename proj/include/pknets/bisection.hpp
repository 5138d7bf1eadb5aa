#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pknets/groupoid.hpp"
#include "pknets/permutation.hpp"
#include "pknets/pknet.hpp"
#include "pknets/wreath.hpp"

namespace pknets {

/// A permutation σ of the objects and legs g_i : i → σ(i). In map form
/// b(e) = legs[e].
struct Bisection {
  Permutation sigma;
  std::vector<MorphismId> legs;

  friend bool operator==(const Bisection&, const Bisection&) = default;
};

CheckResult check_bisection(const Groupoid& c, const Bisection& b);
/// Builds σ from the leg targets. Throws InputError unless they form a
/// bisection.
Bisection bisection_from_legs(const Groupoid& c, std::vector<MorphismId> legs);
Bisection identity_bisection(const Groupoid& c);
/// b2∘b1: σ = σ₂σ₁, legs[i] = b2.legs[σ₁(i)] ∘ b1.legs[i].
Bisection compose_bisections(const Groupoid& c, const Bisection& b2, const Bisection& b1);
/// b⁻¹(e) = b(σ⁻¹(e))⁻¹.
Bisection inverse_bisection(const Groupoid& c, const Bisection& b);

/// Bis(C) enumerated as a table group. Elements are ordered by σ (lexicographic)
/// and then by legs, each leg running through hom(i, σ(i)) in id order.
struct BisGroup {
  Groupoid groupoid;
  std::vector<Bisection> elements;
  FiniteGroup group;

  /// Legs → element index.
  std::map<std::vector<MorphismId>, std::uint32_t> lookup;

  /// Throws InputError for a bisection outside the group.
  std::uint32_t index_of(const Bisection& b) const;
};

/// Throws DisconnectedError for disconnected C, ResourceError when
/// |Z|ⁿ·n! exceeds limits.max_group_order.
BisGroup bis_group(const Groupoid& c, const Limits& limits = {});

/// Anchors h_{ki} : k → i from a base object k, with h_{kk} the identity.
class TransportFrame {
 public:
  /// Throws InputError unless anchors[i] : base → i and anchors[base] is the
  /// identity.
  TransportFrame(const Groupoid& c, ObjectId base, std::vector<MorphismId> anchors);
  /// Breadth-first from `base`, lowest morphism id first; the anchor is the
  /// composite along the tree path. Throws DisconnectedError.
  static TransportFrame standard(const Groupoid& c, ObjectId base = 0);

  const Groupoid& groupoid() const noexcept { return c_; }
  ObjectId base() const noexcept { return base_; }
  MorphismId anchor(ObjectId i) const { return anchors_.at(i); }
  /// h_{ij} = h_{kj} ∘ h_{ki}⁻¹ : i → j.
  MorphismId transport(ObjectId i, ObjectId j) const;
  /// φ_{ij}(n) = h_{ij} ∘ n ∘ h_{ij}⁻¹ : End(i) → End(j).
  MorphismId phi(ObjectId i, ObjectId j, MorphismId n) const;

  /// h_{qr}h_{pq} = h_{pr} and φ_{qr}∘φ_{pq} = φ_{pr} for all triples.
  CheckResult check_cocycle() const;

 private:
  Groupoid c_;
  ObjectId base_;
  std::vector<MorphismId> anchors_;
};

struct Decomposed {
  Bisection n_part;
  Bisection h_part;
};

/// b = h_part ∘ n_part with h_part(i) = h_{iσ(i)} and n_part(i) = h_{iσ(i)}⁻¹ ∘ b(i).
Decomposed decompose(const Bisection& b, const TransportFrame& frame);

/// The wreath product End(base) ≀ Sₙ that chi lands in.
WreathProduct chi_codomain(const TransportFrame& frame, const Limits& limits = {});

/// ⟨(φ_{i,base}(n_i))_i, σ⟩ where n_i are the legs of the N-part.
WreathElement chi(const Bisection& b, const TransportFrame& frame, const WreathProduct& codomain);

/// chi on every element: result[bis index] = wreath index.
std::vector<std::uint32_t> chi_table(const BisGroup& bis, const TransportFrame& frame, const WreathProduct& codomain);

/// ⟨(g_i), σ⟩·(x, i) = (S(g_i)(x), σ(i)) on ⊔ S(i). `s` is a set-valued
/// functor over c.category(). Throws InputError if x ∉ S(i).
std::pair<std::uint32_t, ObjectId> act_on_disjoint_union(const Groupoid& c, const Bisection& b,
                                                         const SetValuedDiagram& s,
                                                         std::pair<std::uint32_t, ObjectId> point);

/// ξ(b)(g : e → e') = b(e') ∘ g ∘ b(e)⁻¹, an automorphism of C.
Functor xi(const Groupoid& c, const Bisection& b);

struct XiReport {
  bool homomorphism = false;
  bool all_bijective = false;
  bool image_closed = false;
  std::size_t kernel_size = 0;
  std::size_t image_size = 0;
  /// Whether |Aut_int(C)| = |Bis(C)|, i.e. ξ is injective on this instance.
  bool injective = false;
};

XiReport xi_structure(const BisGroup& bis);

/// An isomorphism onto pair_groupoid(n, End(u)).
struct Trivialization {
  Groupoid product;
  Functor functor;
};

/// g : e → e' ↦ (e, e', h(e') ∘ g ∘ h(e)⁻¹) for anchors h(e) : e → u with
/// h(u) the identity. Throws DisconnectedError or InputError.
Trivialization trivialize(const Groupoid& c, ObjectId u, const std::vector<MorphismId>& anchors);
/// Anchors h(e) = h_{ue}⁻¹ from the frame.
Trivialization trivialize(const TransportFrame& frame);

struct SemidirectReport {
  std::size_t n_order = 0;
  std::size_t h_order = 0;
  std::size_t bis_order = 0;
  bool n_is_product = false;       // N ≅ ∏_e Z
  bool h_is_symmetric = false;     // H ≅ Bij(C₀)
  bool trivial_intersection = false;
  bool n_normal = false;
  bool action_matches = false;     // h_σ·n(e) = h_σ(e)⁻¹ n(σ(e)) h_σ(e)
  bool generated = false;          // |N|·|H| = |Bis|
  std::string witness;

  bool ok() const {
    return n_is_product && h_is_symmetric && trivial_intersection && n_normal && action_matches && generated;
  }
};

SemidirectReport semidirect_structure(const BisGroup& bis, const TransportFrame& frame);

}  // namespace pknets
