#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pknets/error.hpp"

namespace pknets {

/// Raw multiplication table. `cells[a * order + b]` is the index of a·b.
/// Nothing is validated here; see check_group_axioms.
struct GroupTable {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> cells;
  std::vector<std::string> labels;

  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return cells[std::size_t{a} * order + b]; }
};

/// Exhaustive associativity, two-sided identity and inverse check. The
/// witness names the first failing triple or element.
CheckResult check_group_axioms(const GroupTable& table);
bool verify_group_axioms(const GroupTable& table);

struct GroupElement {
  std::uint64_t group_id = 0;
  std::uint32_t index = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Immutable finite group stored as an explicit table. Copies share state;
/// two handles compare equal iff they came from the same construction.
class FiniteGroup {
 public:
  /// Validates the table and throws StructureError on any axiom failure, or
  /// ResourceError if the order exceeds `limits.max_group_order`.
  explicit FiniteGroup(GroupTable table, std::string name = {}, const Limits& limits = {});

  std::uint64_t id() const noexcept;
  const std::string& name() const noexcept;
  std::uint32_t order() const noexcept;
  std::uint32_t identity() const noexcept;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t inv(std::uint32_t a) const noexcept;
  std::uint32_t element_order(std::uint32_t a) const;
  const std::string& label(std::uint32_t a) const;
  std::optional<std::uint32_t> find(std::string_view label) const;

  GroupElement element(std::uint32_t index) const;
  /// Throws InputError when either argument belongs to another group.
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  const GroupTable& table() const noexcept;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept { return a.id() == b.id(); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

bool verify_group_axioms(const FiniteGroup& group);

FiniteGroup cyclic_group(std::uint32_t n);
/// Elements are permutations of {1..n} in lexicographic order of images.
FiniteGroup symmetric_group(std::uint32_t n, const Limits& limits = {});
/// Pairs (a, b) enumerated as a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});
FiniteGroup direct_power(const FiniteGroup& g, std::uint32_t n, const Limits& limits = {});

/// N ⋊ H with (n₁,h₁)(n₂,h₂) = (n₁·α_{h₁}(n₂), h₁h₂). `action[h][x]` is α_h(x).
/// Elements enumerated as h * |N| + n.
FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               const std::vector<std::vector<std::uint32_t>>& action,
                               const Limits& limits = {});

/// The subgroup on `elements` (closed under the product), relabelled 0..k-1
/// in the given order. Throws StructureError when not closed.
FiniteGroup subgroup(const FiniteGroup& parent, std::span<const std::uint32_t> elements,
                     std::string name = {});

/// Closure of `generators` under the product, sorted by index.
std::vector<std::uint32_t> generated_subgroup(const FiniteGroup& g, std::span<const std::uint32_t> generators);

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const std::uint32_t> map);
bool is_bijection(std::span<const std::uint32_t> map, std::uint32_t codomain_size);

/// Brute-force search: images of a greedy generating set are tried over all
/// order-compatible targets and extended along words.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace pknets
