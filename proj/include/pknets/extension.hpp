#pragma once

#include <cstdint>
#include <vector>

#include "pknets/group.hpp"

namespace pknets {

struct Decomposition {
  GroupElement z;
  GroupElement h;
};

class GroupExtension;
Decomposition extension_decompose(const GroupExtension& ext, const GroupElement& g);

/// Extension 1 → Z → G → H → 1 with a set-theoretic section of π.
/// Every g decomposes uniquely as g = section(h) · inject(z).
class GroupExtension {
 public:
  /// Checks that inject is an injective homomorphism, project a surjective
  /// homomorphism, image(inject) = ker(project), and π∘section = id.
  /// Throws StructureError naming the failing element otherwise.
  GroupExtension(FiniteGroup kernel, FiniteGroup group, FiniteGroup quotient, std::vector<std::uint32_t> inject,
                 std::vector<std::uint32_t> project, std::vector<std::uint32_t> section);

  const FiniteGroup& kernel() const noexcept { return z_; }
  const FiniteGroup& group() const noexcept { return g_; }
  const FiniteGroup& quotient() const noexcept { return h_; }

  std::uint32_t inject(std::uint32_t z) const { return inject_.at(z); }
  std::uint32_t project(std::uint32_t g) const { return project_.at(g); }
  std::uint32_t section(std::uint32_t h) const { return section_.at(h); }

  /// Sorted indices of inject(Z) in G.
  const std::vector<std::uint32_t>& kernel_image() const noexcept { return kernel_image_; }

 private:
  FiniteGroup z_, g_, h_;
  std::vector<std::uint32_t> inject_, project_, section_;
  std::vector<std::uint32_t> uninject_;
  std::vector<std::uint32_t> kernel_image_;

  friend Decomposition extension_decompose(const GroupExtension&, const GroupElement&);
};

/// The unique (z, h) with section(h)·inject(z) = g.
Decomposition extension_decompose(const GroupExtension& ext, const GroupElement& g);

/// 1 → Z₁₂ → T/I → Z₂ → 1 with inject(z) = T_z, π(T_n) = 0, π(I_n) = 1 and
/// section 0 ↦ T₀, 1 ↦ I₀.
const GroupExtension& ti_extension();

}  // namespace pknets
