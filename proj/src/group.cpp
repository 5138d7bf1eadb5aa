#include "pknets/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <unordered_map>

#include "pknets/permutation.hpp"

namespace pknets {
namespace {

std::atomic<std::uint64_t> next_group_id{1};

std::string cell_label(const GroupTable& t, std::uint32_t i) {
  if (i < t.labels.size() && !t.labels[i].empty()) return t.labels[i];
  return "#" + std::to_string(i);
}

void check_order(std::uint64_t order, const Limits& limits) {
  if (order == 0) throw InputError("group order must be positive");
  if (order > limits.max_group_order) {
    throw ResourceError("group order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(limits.max_group_order));
  }
}

}  // namespace

CheckResult check_group_axioms(const GroupTable& t) {
  const std::uint32_t n = t.order;
  if (n == 0) return CheckResult::fail("empty group");
  if (t.cells.size() != std::size_t{n} * n) {
    return CheckResult::fail("table has " + std::to_string(t.cells.size()) + " cells, expected " +
                             std::to_string(std::size_t{n} * n));
  }
  if (!t.labels.empty() && t.labels.size() != n) return CheckResult::fail("label count differs from order");
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    if (t.cells[i] >= n) {
      return CheckResult::fail("cell (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                               ") holds out-of-range index " + std::to_string(t.cells[i]));
    }
  }

  std::optional<std::uint32_t> e;
  for (std::uint32_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) ok = t.at(c, x) == x && t.at(x, c) == x;
    if (ok) e = c;
  }
  if (!e) return CheckResult::fail("no two-sided identity");

  for (std::uint32_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::uint32_t y = 0; y < n && !found; ++y) found = t.at(x, y) == *e && t.at(y, x) == *e;
    if (!found) return CheckResult::fail("element " + cell_label(t, x) + " has no two-sided inverse");
  }

  const auto fail_assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return CheckResult::fail("(a*b)*c != a*(b*c) at a=" + cell_label(t, a) + ", b=" + cell_label(t, b) +
                             ", c=" + cell_label(t, c));
  };

  if (n <= 1000) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto ab = t.at(a, b);
        for (std::uint32_t c = 0; c < n; ++c)
          if (t.at(ab, c) != t.at(a, t.at(b, c))) return fail_assoc(a, b, c);
      }
    return CheckResult::pass();
  }

  // Light's test: middle factors from a generating set of the magma suffice.
  std::vector<bool> reached(n, false);
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> closure;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    std::deque<std::uint32_t> queue;
    reached[g] = true;
    closure.push_back(g);
    queue.push_back(g);
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      const auto snapshot = closure.size();
      for (std::size_t k = 0; k < snapshot; ++k) {
        for (auto y : {t.at(x, closure[k]), t.at(closure[k], x)}) {
          if (!reached[y]) {
            reached[y] = true;
            closure.push_back(y);
            queue.push_back(y);
          }
        }
      }
    }
  }
  for (auto s : gens)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t c = 0; c < n; ++c)
        if (t.at(t.at(a, s), c) != t.at(a, t.at(s, c))) return fail_assoc(a, s, c);
  return CheckResult::pass();
}

bool verify_group_axioms(const GroupTable& table) { return check_group_axioms(table).ok; }

struct FiniteGroup::Data {
  std::uint64_t id = 0;
  std::string name;
  GroupTable table;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> inverse;
  std::unordered_map<std::string, std::uint32_t> by_label;
};

FiniteGroup::FiniteGroup(GroupTable table, std::string name, const Limits& limits) {
  check_order(table.order, limits);
  if (auto r = check_group_axioms(table); !r) throw StructureError("group axioms violated", r.witness);
  auto d = std::make_shared<Data>();
  d->id = next_group_id.fetch_add(1);
  d->name = std::move(name);
  const auto n = table.order;
  if (table.labels.empty()) {
    table.labels.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) table.labels[i] = std::to_string(i);
  }
  d->table = std::move(table);
  for (std::uint32_t c = 0; c < n; ++c)
    if (d->table.at(c, 0) == 0 && d->table.at(0, c) == 0) {
      bool ok = true;
      for (std::uint32_t x = 0; x < n && ok; ++x) ok = d->table.at(c, x) == x;
      if (ok) {
        d->identity = c;
        break;
      }
    }
  d->inverse.resize(n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (d->table.at(x, y) == d->identity) {
        d->inverse[x] = y;
        break;
      }
  for (std::uint32_t i = 0; i < n; ++i) d->by_label.emplace(d->table.labels[i], i);
  d_ = std::move(d);
}

std::uint64_t FiniteGroup::id() const noexcept { return d_->id; }
const std::string& FiniteGroup::name() const noexcept { return d_->name; }
std::uint32_t FiniteGroup::order() const noexcept { return d_->table.order; }
std::uint32_t FiniteGroup::identity() const noexcept { return d_->identity; }
std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const noexcept { return d_->table.at(a, b); }
std::uint32_t FiniteGroup::inv(std::uint32_t a) const noexcept { return d_->inverse[a]; }
const GroupTable& FiniteGroup::table() const noexcept { return d_->table; }

std::uint32_t FiniteGroup::element_order(std::uint32_t a) const {
  std::uint32_t k = 1;
  for (auto x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

const std::string& FiniteGroup::label(std::uint32_t a) const { return d_->table.labels.at(a); }

std::optional<std::uint32_t> FiniteGroup::find(std::string_view label) const {
  if (auto it = d_->by_label.find(std::string(label)); it != d_->by_label.end()) return it->second;
  return std::nullopt;
}

GroupElement FiniteGroup::element(std::uint32_t index) const {
  if (index >= order()) throw InputError("element index " + std::to_string(index) + " out of range");
  return {id(), index};
}

GroupElement FiniteGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  if (a.group_id != id() || b.group_id != id()) throw InputError("elements combined across groups");
  return {id(), mul(a.index, b.index)};
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  if (a.group_id != id()) throw InputError("element belongs to another group");
  return {id(), inv(a.index)};
}

bool verify_group_axioms(const FiniteGroup& group) { return check_group_axioms(group.table()).ok; }

FiniteGroup cyclic_group(std::uint32_t n) {
  check_order(n, Limits{});
  GroupTable t{n, std::vector<std::uint32_t>(std::size_t{n} * n), {}};
  for (std::uint32_t a = 0; a < n; ++a) {
    t.labels.push_back(std::to_string(a));
    for (std::uint32_t b = 0; b < n; ++b) t.cells[std::size_t{a} * n + b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup symmetric_group(std::uint32_t n, const Limits& limits) {
  if (n == 0) throw InputError("symmetric group degree must be positive");
  if (n > 12) throw ResourceError("symmetric group degree too large");
  const auto order = factorial(n);
  check_order(order, limits);
  const auto perms = all_permutations(n);
  const auto m = static_cast<std::uint32_t>(order);
  GroupTable t{m, std::vector<std::uint32_t>(std::size_t{m} * m), {}};
  for (std::uint32_t a = 0; a < m; ++a) {
    t.labels.push_back(perms[a].to_string());
    for (std::uint32_t b = 0; b < m; ++b) t.cells[std::size_t{a} * m + b] = static_cast<std::uint32_t>((perms[a] * perms[b]).rank());
  }
  return FiniteGroup(std::move(t), "S" + std::to_string(n), limits);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  const std::uint64_t order = std::uint64_t{a.order()} * b.order();
  check_order(order, limits);
  const auto n = static_cast<std::uint32_t>(order);
  GroupTable t{n, std::vector<std::uint32_t>(std::size_t{n} * n), {}};
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto xa = x / b.order(), xb = x % b.order();
    t.labels.push_back("(" + a.label(xa) + "," + b.label(xb) + ")");
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto ya = y / b.order(), yb = y % b.order();
      t.cells[std::size_t{x} * n + y] = a.mul(xa, ya) * b.order() + b.mul(xb, yb);
    }
  }
  return FiniteGroup(std::move(t), a.name() + "x" + b.name(), limits);
}

FiniteGroup direct_power(const FiniteGroup& g, std::uint32_t n, const Limits& limits) {
  if (n == 0) throw InputError("direct power exponent must be positive");
  FiniteGroup out = g;
  for (std::uint32_t i = 1; i < n; ++i) out = direct_product(out, g, limits);
  return out;
}

FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               const std::vector<std::vector<std::uint32_t>>& action, const Limits& limits) {
  if (action.size() != acting.order()) throw InputError("action must give one map per acting element");
  for (const auto& m : action)
    if (m.size() != normal.order()) throw InputError("action map has wrong size");
  const std::uint64_t order = std::uint64_t{normal.order()} * acting.order();
  check_order(order, limits);
  const auto n = static_cast<std::uint32_t>(order);
  const auto nn = normal.order();
  GroupTable t{n, std::vector<std::uint32_t>(std::size_t{n} * n), {}};
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto xh = x / nn, xn = x % nn;
    t.labels.push_back("(" + normal.label(xn) + "," + acting.label(xh) + ")");
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto yh = y / nn, yn = y % nn;
      t.cells[std::size_t{x} * n + y] = acting.mul(xh, yh) * nn + normal.mul(xn, action[xh][yn]);
    }
  }
  return FiniteGroup(std::move(t), normal.name() + "|x" + acting.name(), limits);
}

FiniteGroup subgroup(const FiniteGroup& parent, std::span<const std::uint32_t> elements, std::string name) {
  std::unordered_map<std::uint32_t, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < elements.size(); ++i) pos.emplace(elements[i], i);
  const auto n = static_cast<std::uint32_t>(elements.size());
  GroupTable t{n, std::vector<std::uint32_t>(std::size_t{n} * n), {}};
  for (std::uint32_t i = 0; i < n; ++i) {
    t.labels.push_back(parent.label(elements[i]));
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto p = parent.mul(elements[i], elements[j]);
      auto it = pos.find(p);
      if (it == pos.end()) {
        throw StructureError("subset not closed under the product",
                             parent.label(elements[i]) + "*" + parent.label(elements[j]) + "=" + parent.label(p));
      }
      t.cells[std::size_t{i} * n + j] = it->second;
    }
  }
  return FiniteGroup(std::move(t), std::move(name));
}

std::vector<std::uint32_t> generated_subgroup(const FiniteGroup& g, std::span<const std::uint32_t> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::uint32_t> out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto s : generators) {
      const auto y = g.mul(out[k], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const std::uint32_t> map) {
  if (map.size() != from.order()) return false;
  for (auto v : map)
    if (v >= to.order()) return false;
  for (std::uint32_t a = 0; a < from.order(); ++a)
    for (std::uint32_t b = 0; b < from.order(); ++b)
      if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
  return true;
}

bool is_bijection(std::span<const std::uint32_t> map, std::uint32_t codomain_size) {
  if (map.size() != codomain_size) return false;
  std::vector<bool> hit(codomain_size, false);
  for (auto v : map) {
    if (v >= codomain_size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<std::uint32_t> gens;
  {
    std::vector<std::uint32_t> span = generated_subgroup(a, gens);
    for (std::uint32_t x = 0; x < a.order(); ++x) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      gens.push_back(x);
      span = generated_subgroup(a, gens);
    }
  }
  std::vector<std::uint32_t> order_b(b.order());
  for (std::uint32_t y = 0; y < b.order(); ++y) order_b[y] = b.element_order(y);

  std::vector<std::uint32_t> images(gens.size());
  const auto try_extend = [&]() -> std::optional<std::vector<std::uint32_t>> {
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> map(a.order(), unset);
    map[a.identity()] = b.identity();
    std::deque<std::uint32_t> queue{a.identity()};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto y = a.mul(x, gens[k]);
        const auto img = b.mul(map[x], images[k]);
        if (map[y] == unset) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return std::nullopt;
        }
      }
    }
    if (!is_bijection(map, b.order()) || !is_homomorphism(a, b, map)) return std::nullopt;
    return map;
  };

  std::function<std::optional<std::vector<std::uint32_t>>(std::size_t)> search =
      [&](std::size_t k) -> std::optional<std::vector<std::uint32_t>> {
    if (k == gens.size()) return try_extend();
    const auto want = a.element_order(gens[k]);
    for (std::uint32_t y = 0; y < b.order(); ++y) {
      if (order_b[y] != want) continue;
      images[k] = y;
      if (auto r = search(k + 1)) return r;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace pknets
