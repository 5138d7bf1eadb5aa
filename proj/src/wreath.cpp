#include "pknets/wreath.hpp"

#include <sstream>

namespace pknets {
namespace {

std::uint64_t checked_order(const FiniteGroup& base, std::uint32_t n, const Limits& limits) {
  if (n == 0) throw InputError("wreath product degree must be positive");
  if (n > 12) throw ResourceError("wreath product degree too large");
  long double est = static_cast<long double>(factorial(n));
  for (std::uint32_t i = 0; i < n; ++i) est *= base.order();
  if (est > static_cast<long double>(limits.max_group_order)) {
    throw ResourceError("wreath product order exceeds bound " + std::to_string(limits.max_group_order));
  }
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < n; ++i) v *= base.order();
  return v;
}

WreathElement decode(const FiniteGroup& base, std::uint32_t n, std::uint64_t vcount,
                     const std::vector<Permutation>& perms, std::uint32_t index) {
  WreathElement w;
  w.sigma = perms.at(index / vcount);
  auto code = index % vcount;
  w.coords.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    w.coords[i] = static_cast<std::uint32_t>(code % base.order());
    code /= base.order();
  }
  return w;
}

std::uint32_t encode(const FiniteGroup& base, std::uint64_t vcount, const WreathElement& w) {
  std::uint64_t code = 0;
  for (std::size_t i = w.coords.size(); i-- > 0;) code = code * base.order() + w.coords[i];
  return static_cast<std::uint32_t>(w.sigma.rank() * vcount + code);
}

WreathElement product(const FiniteGroup& base, const WreathElement& a, const WreathElement& b) {
  WreathElement out;
  out.sigma = a.sigma * b.sigma;
  const auto n = b.sigma.degree();
  out.coords.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) out.coords[i] = base.mul(a.coords[b.sigma.image0(i)], b.coords[i]);
  return out;
}

std::string describe(const FiniteGroup& base, const WreathElement& w) {
  std::ostringstream os;
  os << "<(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << base.label(w.coords[i]);
  os << ")," << w.sigma.to_string() << ">";
  return os.str();
}

FiniteGroup build(const FiniteGroup& base, std::uint32_t n, std::uint64_t vcount, const Limits& limits) {
  const auto perms = all_permutations(n);
  const auto order = static_cast<std::uint32_t>(vcount * perms.size());
  std::vector<WreathElement> elems;
  elems.reserve(order);
  for (std::uint32_t i = 0; i < order; ++i) elems.push_back(decode(base, n, vcount, perms, i));
  GroupTable t{order, std::vector<std::uint32_t>(std::size_t{order} * order), {}};
  for (std::uint32_t a = 0; a < order; ++a) {
    t.labels.push_back(describe(base, elems[a]));
    for (std::uint32_t b = 0; b < order; ++b)
      t.cells[std::size_t{a} * order + b] = encode(base, vcount, product(base, elems[a], elems[b]));
  }
  return FiniteGroup(std::move(t), base.name() + " wr S" + std::to_string(n), limits);
}

}  // namespace

WreathProduct::WreathProduct(FiniteGroup base, std::uint32_t n, const Limits& limits)
    : base_(std::move(base)),
      n_(n),
      vector_count_(checked_order(base_, n, limits)),
      group_(build(base_, n_, vector_count_, limits)) {}

WreathElement WreathProduct::element(std::uint32_t index) const {
  if (index >= group_.order()) throw InputError("wreath element index out of range");
  WreathElement w;
  std::vector<std::uint32_t> images(n_);
  // Unrank the permutation directly instead of materializing S_n.
  auto r = index / vector_count_;
  std::vector<std::uint32_t> pool;
  for (std::uint32_t i = 1; i <= n_; ++i) pool.push_back(i);
  for (std::uint32_t i = 0; i < n_; ++i) {
    const auto f = factorial(n_ - 1 - i);
    const auto k = r / f;
    r %= f;
    images[i] = pool[k];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  w.sigma = Permutation(std::move(images));
  auto code = index % vector_count_;
  w.coords.resize(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    w.coords[i] = static_cast<std::uint32_t>(code % base_.order());
    code /= base_.order();
  }
  return w;
}

std::uint32_t WreathProduct::index(const WreathElement& w) const {
  if (w.coords.size() != n_ || w.sigma.degree() != n_) throw InputError("wreath element has wrong degree");
  for (auto c : w.coords)
    if (c >= base_.order()) throw InputError("wreath coordinate out of range");
  return encode(base_, vector_count_, w);
}

WreathElement WreathProduct::multiply(const WreathElement& a, const WreathElement& b) const {
  return product(base_, a, b);
}

WreathElement WreathProduct::identity() const {
  return {std::vector<std::uint32_t>(n_, base_.identity()), Permutation::identity(n_)};
}

std::string WreathProduct::label(const WreathElement& w) const { return describe(base_, w); }

FiniteGroup wreath_group(const FiniteGroup& base, std::uint32_t n, const Limits& limits) {
  return WreathProduct(base, n, limits).group();
}

}  // namespace pknets
