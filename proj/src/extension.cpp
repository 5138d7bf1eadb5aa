#include "pknets/extension.hpp"

#include <algorithm>

#include "pknets/ti_group.hpp"

namespace pknets {

GroupExtension::GroupExtension(FiniteGroup kernel, FiniteGroup group, FiniteGroup quotient,
                               std::vector<std::uint32_t> inject, std::vector<std::uint32_t> project,
                               std::vector<std::uint32_t> section)
    : z_(std::move(kernel)),
      g_(std::move(group)),
      h_(std::move(quotient)),
      inject_(std::move(inject)),
      project_(std::move(project)),
      section_(std::move(section)) {
  if (inject_.size() != z_.order() || project_.size() != g_.order() || section_.size() != h_.order()) {
    throw InputError("extension maps have the wrong sizes");
  }
  if (!is_homomorphism(z_, g_, inject_)) throw StructureError("malformed extension", "inject is not a homomorphism");
  if (!is_homomorphism(g_, h_, project_)) throw StructureError("malformed extension", "project is not a homomorphism");

  constexpr auto unset = static_cast<std::uint32_t>(-1);
  uninject_.assign(g_.order(), unset);
  for (std::uint32_t z = 0; z < z_.order(); ++z) {
    if (uninject_[inject_[z]] != unset) throw StructureError("malformed extension", "inject is not injective at " + z_.label(z));
    uninject_[inject_[z]] = z;
  }
  std::vector<bool> hit(h_.order(), false);
  for (std::uint32_t g = 0; g < g_.order(); ++g) {
    hit[project_[g]] = true;
    const bool in_kernel = project_[g] == h_.identity();
    const bool in_image = uninject_[g] != unset;
    if (in_kernel != in_image) throw StructureError("malformed extension", "image(inject) != ker(project) at " + g_.label(g));
    if (in_image) kernel_image_.push_back(g);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw StructureError("malformed extension", "project is not surjective");
  for (std::uint32_t h = 0; h < h_.order(); ++h)
    if (project_[section_[h]] != h) throw StructureError("malformed extension", "project(section(" + h_.label(h) + ")) != " + h_.label(h));
}

Decomposition extension_decompose(const GroupExtension& ext, const GroupElement& g) {
  const auto& G = ext.group();
  if (g.group_id != G.id()) throw InputError("element does not belong to the extension's middle group");
  const auto h = ext.project(g.index);
  const auto rest = G.mul(G.inv(ext.section(h)), g.index);
  const auto z = ext.uninject_[rest];
  return {ext.kernel().element(z), ext.quotient().element(h)};
}

const GroupExtension& ti_extension() {
  static const GroupExtension ext = [] {
    std::vector<std::uint32_t> inject(12), project(24), section{TIElement::T(0).index(), TIElement::I(0).index()};
    for (std::uint32_t z = 0; z < 12; ++z) inject[z] = TIElement::T(static_cast<int>(z)).index();
    for (std::uint32_t g = 0; g < 24; ++g) project[g] = TIElement::from_index(g).sign;
    return GroupExtension(cyclic_group(12), ti_group(), cyclic_group(2), std::move(inject), std::move(project),
                          std::move(section));
  }();
  return ext;
}

}  // namespace pknets
