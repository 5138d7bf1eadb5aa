#include "pknets/ti_group.hpp"

#include <cctype>
#include <charconv>

namespace pknets {
namespace {

std::uint8_t mod12(int v) { return static_cast<std::uint8_t>(((v % 12) + 12) % 12); }

}  // namespace

TIElement TIElement::T(int n) { return {mod12(n), 0}; }
TIElement TIElement::I(int n) { return {mod12(n), 1}; }

TIElement TIElement::from_index(std::uint32_t index) {
  if (index >= 24) throw InputError("T/I index out of range: " + std::to_string(index));
  return {static_cast<std::uint8_t>(index % 12), static_cast<std::uint8_t>(index / 12)};
}

std::uint8_t TIElement::apply(std::uint8_t pitch) const noexcept {
  return sign ? mod12(int{shift} - pitch) : mod12(int{shift} + pitch);
}

std::string TIElement::label(bool signed_labels) const {
  int n = shift;
  if (signed_labels && sign == 0 && n > 6) n -= 12;
  return (sign ? "I" : "T") + std::to_string(n);
}

std::optional<TIElement> TIElement::parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (kind != 'T' && kind != 'I') return std::nullopt;
  int n = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return kind == 'T' ? T(n) : I(n);
}

TIElement operator*(const TIElement& lhs, const TIElement& rhs) noexcept {
  const int b = lhs.sign ? -int{rhs.shift} : int{rhs.shift};
  return {mod12(int{lhs.shift} + b), static_cast<std::uint8_t>((lhs.sign + rhs.sign) % 2)};
}

TIElement inverse(const TIElement& g) noexcept {
  if (g.sign) return g;
  return TIElement::T(-int{g.shift});
}

const FiniteGroup& ti_group() {
  static const FiniteGroup group = [] {
    GroupTable t{24, std::vector<std::uint32_t>(24 * 24), {}};
    for (std::uint32_t a = 0; a < 24; ++a) {
      t.labels.push_back(TIElement::from_index(a).label());
      for (std::uint32_t b = 0; b < 24; ++b)
        t.cells[a * 24 + b] = (TIElement::from_index(a) * TIElement::from_index(b)).index();
    }
    return FiniteGroup(std::move(t), "T/I");
  }();
  return group;
}

}  // namespace pknets
