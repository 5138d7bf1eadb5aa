#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pknets/group.hpp"
#include "pknets/permutation.hpp"

namespace pknets {

/// ⟨(z₁..zₙ), σ⟩ in Z ≀ Sₙ; coordinates are indices into Z.
struct WreathElement {
  std::vector<std::uint32_t> coords;
  Permutation sigma;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Z ≀ Sₙ as an explicit table. Product
///   ⟨(m_i),τ⟩·⟨(n_i),σ⟩ = ⟨(m_{σ(i)}·n_i), τσ⟩.
class WreathProduct {
 public:
  WreathProduct(FiniteGroup base, std::uint32_t n, const Limits& limits = {});

  const FiniteGroup& group() const noexcept { return group_; }
  const FiniteGroup& base() const noexcept { return base_; }
  std::uint32_t degree() const noexcept { return n_; }

  WreathElement element(std::uint32_t index) const;
  std::uint32_t index(const WreathElement& w) const;
  WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
  WreathElement identity() const;
  std::string label(const WreathElement& w) const;

 private:
  FiniteGroup base_;
  std::uint32_t n_;
  std::uint64_t vector_count_;
  FiniteGroup group_;
};

/// Convenience wrapper returning only the table group.
FiniteGroup wreath_group(const FiniteGroup& base, std::uint32_t n, const Limits& limits = {});

}  // namespace pknets
