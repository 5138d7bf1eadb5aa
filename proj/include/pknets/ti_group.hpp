#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pknets/group.hpp"

namespace pknets {

/// Element of the T/I group acting on pitch classes mod 12.
/// sign 0 is T_shift: x ↦ x + shift; sign 1 is I_shift: x ↦ shift − x.
struct TIElement {
  std::uint8_t shift = 0;
  std::uint8_t sign = 0;

  static TIElement T(int n);
  static TIElement I(int n);

  /// Canonical index: T₀..T₁₁ are 0..11, I₀..I₁₁ are 12..23.
  std::uint32_t index() const noexcept { return sign * 12u + shift; }
  static TIElement from_index(std::uint32_t index);

  std::uint8_t apply(std::uint8_t pitch) const noexcept;
  bool is_transposition() const noexcept { return sign == 0; }

  /// "T4", "I8". With `signed_labels`, transpositions with shift > 6 print
  /// as negative ("T-2" for T10).
  std::string label(bool signed_labels = false) const;
  /// Accepts "T4", "I8", "T-2", "t11".
  static std::optional<TIElement> parse(std::string_view text);

  friend bool operator==(const TIElement&, const TIElement&) = default;
};

/// (a,s)·(b,t) = (a + (−1)^s·b, s + t): apply the right factor first.
TIElement operator*(const TIElement& lhs, const TIElement& rhs) noexcept;
TIElement inverse(const TIElement& g) noexcept;

/// The shared order-24 T/I group instance, labelled T0..T11, I0..I11.
const FiniteGroup& ti_group();

/// The twelve points of the pitch-class circle, as a plain index range.
inline constexpr std::uint32_t pitch_class_count = 12;

}  // namespace pknets
