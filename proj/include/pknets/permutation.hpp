#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pknets {

/// Bijection of {1..n}, stored by images: images()[i-1] = σ(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t n);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  /// 1-based image.
  std::uint32_t operator()(std::uint32_t i) const { return images_.at(i - 1); }
  /// 0-based image of a 0-based point.
  std::uint32_t image0(std::uint32_t i) const { return images_[i] - 1; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Position in the lexicographic enumeration of S_n.
  std::uint64_t rank() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// (τσ)(i) = τ(σ(i)): the right factor acts first.
Permutation operator*(const Permutation& tau, const Permutation& sigma);

/// All of S_n in lexicographic order; element k has rank k.
std::vector<Permutation> all_permutations(std::uint32_t n);

std::uint64_t factorial(std::uint32_t n);

}  // namespace pknets
