#include "pknets/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pknets/error.hpp"

namespace pknets {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v < 1 || v > images_.size() || seen[v - 1]) {
      throw InputError("permutation images are not a bijection of {1.." + std::to_string(images_.size()) + "}");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 1u);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::uint64_t Permutation::rank() const {
  // Lehmer code.
  const auto n = degree();
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (images_[j] < images_[i]) ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& tau, const Permutation& sigma) {
  if (tau.degree() != sigma.degree()) throw InputError("composing permutations of different degree");
  std::vector<std::uint32_t> im(sigma.degree());
  for (std::uint32_t i = 1; i <= sigma.degree(); ++i) im[i - 1] = tau(sigma(i));
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(std::uint32_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 1u);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace pknets
