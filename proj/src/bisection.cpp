#include "pknets/bisection.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pknets {

CheckResult check_bisection(const Groupoid& c, const Bisection& b) {
  const auto n = c.object_count();
  if (b.sigma.degree() != n || b.legs.size() != n) return CheckResult::fail("bisection has the wrong size");
  const auto& cat = c.category();
  for (ObjectId i = 0; i < n; ++i) {
    if (b.legs[i] >= cat.morphism_count()) return CheckResult::fail("leg out of range");
    if (cat.source(b.legs[i]) != i || cat.target(b.legs[i]) != b.sigma.image0(i))
      return CheckResult::fail("leg " + cat.morphism_name(b.legs[i]) + " does not run " + cat.object_name(i) + " -> " +
                               cat.object_name(b.sigma.image0(i)));
  }
  return CheckResult::pass();
}

Bisection bisection_from_legs(const Groupoid& c, std::vector<MorphismId> legs) {
  const auto& cat = c.category();
  if (legs.size() != c.object_count()) throw InputError("bisection needs one leg per object");
  std::vector<std::uint32_t> images;
  for (ObjectId i = 0; i < legs.size(); ++i) {
    if (legs[i] >= cat.morphism_count()) throw InputError("leg out of range");
    if (cat.source(legs[i]) != i) throw InputError("leg " + cat.morphism_name(legs[i]) + " does not start at " + cat.object_name(i));
    images.push_back(cat.target(legs[i]) + 1);
  }
  return Bisection{Permutation(std::move(images)), std::move(legs)};
}

Bisection identity_bisection(const Groupoid& c) {
  Bisection b{Permutation::identity(c.object_count()), {}};
  for (ObjectId i = 0; i < c.object_count(); ++i) b.legs.push_back(c.category().identity(i));
  return b;
}

Bisection compose_bisections(const Groupoid& c, const Bisection& b2, const Bisection& b1) {
  if (!check_bisection(c, b1) || !check_bisection(c, b2)) throw InputError("bisection is not over this groupoid");
  Bisection out{b2.sigma * b1.sigma, {}};
  for (ObjectId i = 0; i < c.object_count(); ++i)
    out.legs.push_back(c.compose(b2.legs[b1.sigma.image0(i)], b1.legs[i]));
  return out;
}

Bisection inverse_bisection(const Groupoid& c, const Bisection& b) {
  const auto inv = b.sigma.inverse();
  Bisection out{inv, {}};
  for (ObjectId e = 0; e < c.object_count(); ++e) out.legs.push_back(c.inverse(b.legs[inv.image0(e)]));
  return out;
}

std::uint32_t BisGroup::index_of(const Bisection& b) const {
  const auto it = lookup.find(b.legs);
  if (it == lookup.end()) throw InputError("not an element of this bisection group");
  return it->second;
}

namespace {

std::string bisection_label(const Groupoid& c, const Bisection& b) {
  std::string s = b.sigma.to_string() + "(";
  for (std::size_t i = 0; i < b.legs.size(); ++i) s += (i ? "," : "") + c.category().morphism_name(b.legs[i]);
  return s + ")";
}

}  // namespace

BisGroup bis_group(const Groupoid& c, const Limits& limits) {
  require_connected(c, "bis_group");
  const auto n = c.object_count();
  const auto& cat = c.category();
  const auto z = cat.hom(0, 0).size();
  double order = static_cast<double>(factorial(n));
  for (ObjectId i = 0; i < n; ++i) order *= static_cast<double>(z);
  if (n > 12 || order > static_cast<double>(limits.max_group_order))
    throw ResourceError("Bis(C) would have " + std::to_string(static_cast<std::uint64_t>(order)) +
                        " elements, over the bound of " + std::to_string(limits.max_group_order));

  BisGroup g{c, {}, cyclic_group(1), {}};
  for (const auto& sigma : all_permutations(n)) {
    std::vector<const std::vector<MorphismId>*> choices;
    for (ObjectId i = 0; i < n; ++i) choices.push_back(&cat.hom(i, sigma.image0(i)));
    std::vector<std::size_t> pos(n, 0);
    while (true) {
      Bisection b{sigma, {}};
      for (ObjectId i = 0; i < n; ++i) b.legs.push_back((*choices[i])[pos[i]]);
      g.lookup[b.legs] = static_cast<std::uint32_t>(g.elements.size());
      g.elements.push_back(std::move(b));
      std::size_t k = n;
      while (k > 0 && ++pos[k - 1] == choices[k - 1]->size()) pos[--k] = 0;
      if (k == 0) break;
    }
  }
  const auto m = static_cast<std::uint32_t>(g.elements.size());
  GroupTable t{m, std::vector<std::uint32_t>(std::size_t{m} * m), {}};
  for (std::uint32_t a = 0; a < m; ++a) {
    t.labels.push_back(bisection_label(c, g.elements[a]));
    for (std::uint32_t b = 0; b < m; ++b)
      t.cells[std::size_t{a} * m + b] = g.index_of(compose_bisections(c, g.elements[a], g.elements[b]));
  }
  g.group = FiniteGroup(std::move(t), "Bis(" + cat.name() + ")", limits);
  return g;
}

TransportFrame::TransportFrame(const Groupoid& c, ObjectId base, std::vector<MorphismId> anchors)
    : c_(c), base_(base), anchors_(std::move(anchors)) {
  const auto& cat = c_.category();
  if (base_ >= c_.object_count()) throw InputError("frame base out of range");
  if (anchors_.size() != c_.object_count()) throw InputError("frame needs one anchor per object");
  for (ObjectId i = 0; i < anchors_.size(); ++i) {
    if (anchors_[i] >= cat.morphism_count() || cat.source(anchors_[i]) != base_ || cat.target(anchors_[i]) != i)
      throw InputError("anchor for " + cat.object_name(i) + " does not run from the base");
  }
  if (anchors_[base_] != cat.identity(base_)) throw InputError("anchor at the base must be the identity");
}

TransportFrame TransportFrame::standard(const Groupoid& c, ObjectId base) {
  require_connected(c, "transport frame");
  const auto& cat = c.category();
  constexpr auto unset = static_cast<MorphismId>(-1);
  std::vector<MorphismId> anchors(c.object_count(), unset);
  anchors.at(base) = cat.identity(base);
  std::deque<ObjectId> queue{base};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (MorphismId m = 0; m < cat.morphism_count(); ++m) {
      if (cat.source(m) != x || anchors[cat.target(m)] != unset) continue;
      anchors[cat.target(m)] = c.compose(m, anchors[x]);
      queue.push_back(cat.target(m));
    }
  }
  return TransportFrame(c, base, std::move(anchors));
}

MorphismId TransportFrame::transport(ObjectId i, ObjectId j) const {
  return c_.compose(anchors_.at(j), c_.inverse(anchors_.at(i)));
}

MorphismId TransportFrame::phi(ObjectId i, ObjectId j, MorphismId n) const {
  const auto& cat = c_.category();
  if (cat.source(n) != i || cat.target(n) != i) throw InputError("phi expects an endomorphism of the source object");
  const auto h = transport(i, j);
  return c_.compose(h, c_.compose(n, c_.inverse(h)));
}

CheckResult TransportFrame::check_cocycle() const {
  const auto& cat = c_.category();
  const auto n = c_.object_count();
  for (ObjectId p = 0; p < n; ++p)
    for (ObjectId q = 0; q < n; ++q)
      for (ObjectId r = 0; r < n; ++r) {
        if (c_.compose(transport(q, r), transport(p, q)) != transport(p, r))
          return CheckResult::fail("h_qr h_pq != h_pr at (" + cat.object_name(p) + "," + cat.object_name(q) + "," +
                                   cat.object_name(r) + ")");
        for (auto e : cat.hom(p, p))
          if (phi(q, r, phi(p, q, e)) != phi(p, r, e))
            return CheckResult::fail("phi_qr phi_pq != phi_pr on " + cat.morphism_name(e));
      }
  return CheckResult::pass();
}

Decomposed decompose(const Bisection& b, const TransportFrame& frame) {
  const auto& c = frame.groupoid();
  if (!check_bisection(c, b)) throw InputError("bisection is not over the frame's groupoid");
  Decomposed d{Bisection{Permutation::identity(c.object_count()), {}}, Bisection{b.sigma, {}}};
  for (ObjectId i = 0; i < c.object_count(); ++i) {
    const auto h = frame.transport(i, b.sigma.image0(i));
    d.h_part.legs.push_back(h);
    d.n_part.legs.push_back(c.compose(c.inverse(h), b.legs[i]));
  }
  return d;
}

WreathProduct chi_codomain(const TransportFrame& frame, const Limits& limits) {
  return WreathProduct(frame.groupoid().end_group(frame.base()), frame.groupoid().object_count(), limits);
}

WreathElement chi(const Bisection& b, const TransportFrame& frame, const WreathProduct& codomain) {
  const auto& c = frame.groupoid();
  const auto& ends = c.category().hom(frame.base(), frame.base());
  if (codomain.base().order() != ends.size() || codomain.degree() != c.object_count())
    throw InputError("wreath product does not match the frame");
  const auto d = decompose(b, frame);
  WreathElement w{{}, b.sigma};
  for (ObjectId i = 0; i < c.object_count(); ++i) {
    const auto m = frame.phi(i, frame.base(), d.n_part.legs[i]);
    w.coords.push_back(static_cast<std::uint32_t>(std::find(ends.begin(), ends.end(), m) - ends.begin()));
  }
  return w;
}

std::vector<std::uint32_t> chi_table(const BisGroup& bis, const TransportFrame& frame, const WreathProduct& codomain) {
  std::vector<std::uint32_t> out;
  for (const auto& b : bis.elements) out.push_back(codomain.index(chi(b, frame, codomain)));
  return out;
}

std::pair<std::uint32_t, ObjectId> act_on_disjoint_union(const Groupoid& c, const Bisection& b,
                                                         const SetValuedDiagram& s,
                                                         std::pair<std::uint32_t, ObjectId> point) {
  if (!check_bisection(c, b)) throw InputError("bisection is not over this groupoid");
  if (!same_category(s.delta, c.category())) throw InputError("set-valued functor is over a different category");
  const auto [x, i] = point;
  if (i >= c.object_count() || x >= s.elements[i].size()) throw InputError("point is not in its fiber");
  return {s.maps[b.legs[i]][x], b.sigma.image0(i)};
}

Functor xi(const Groupoid& c, const Bisection& b) {
  if (!check_bisection(c, b)) throw InputError("bisection is not over this groupoid");
  const auto& cat = c.category();
  Functor f{cat, cat, {}, {}};
  for (ObjectId e = 0; e < c.object_count(); ++e) f.on_objects.push_back(b.sigma.image0(e));
  for (MorphismId g = 0; g < cat.morphism_count(); ++g)
    f.on_morphisms.push_back(c.compose(b.legs[cat.target(g)], c.compose(g, c.inverse(b.legs[cat.source(g)]))));
  return f;
}

XiReport xi_structure(const BisGroup& bis) {
  XiReport r;
  const auto& c = bis.groupoid;
  std::vector<std::vector<MorphismId>> images;
  r.all_bijective = true;
  for (const auto& b : bis.elements) {
    auto f = xi(c, b);
    r.all_bijective = r.all_bijective && is_bijective(f) && check_functor(f);
    images.push_back(std::move(f.on_morphisms));
  }
  const auto id = identity_functor(c.category()).on_morphisms;
  r.kernel_size = static_cast<std::size_t>(std::count(images.begin(), images.end(), id));
  const std::set<std::vector<MorphismId>> distinct(images.begin(), images.end());
  r.image_size = distinct.size();
  r.homomorphism = true;
  r.image_closed = true;
  const auto m = bis.group.order();
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      std::vector<MorphismId> composed;
      for (auto g : images[b]) composed.push_back(images[a][g]);
      if (composed != images[bis.group.mul(a, b)]) r.homomorphism = false;
      if (!distinct.count(composed)) r.image_closed = false;
    }
  r.injective = r.kernel_size == 1;
  return r;
}

Trivialization trivialize(const Groupoid& c, ObjectId u, const std::vector<MorphismId>& anchors) {
  require_connected(c, "trivialize");
  const auto& cat = c.category();
  const auto n = c.object_count();
  if (u >= n || anchors.size() != n) throw InputError("trivialize needs one anchor per object");
  for (ObjectId e = 0; e < n; ++e)
    if (anchors[e] >= cat.morphism_count() || cat.source(anchors[e]) != e || cat.target(anchors[e]) != u)
      throw InputError("anchor for " + cat.object_name(e) + " does not run to the base");
  if (anchors[u] != cat.identity(u)) throw InputError("anchor at the base must be the identity");

  const auto& ends = cat.hom(u, u);
  const auto k = static_cast<std::uint32_t>(ends.size());
  auto product = pair_groupoid(n, c.end_group(u));
  Functor f{cat, product.category(), {}, {}};
  for (ObjectId e = 0; e < n; ++e) f.on_objects.push_back(e);
  for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
    const auto e = cat.source(g), e2 = cat.target(g);
    const auto z = c.compose(anchors[e2], c.compose(g, c.inverse(anchors[e])));
    const auto pos = static_cast<std::uint32_t>(std::find(ends.begin(), ends.end(), z) - ends.begin());
    f.on_morphisms.push_back((e * n + e2) * k + pos);
  }
  if (auto r = check_functor_detailed(f); !r) throw StructureError("trivialization is not a functor", r.witness);
  if (!is_bijective(f)) throw StructureError("trivialization is not invertible", cat.name());
  return Trivialization{std::move(product), std::move(f)};
}

Trivialization trivialize(const TransportFrame& frame) {
  const auto& c = frame.groupoid();
  std::vector<MorphismId> anchors;
  for (ObjectId e = 0; e < c.object_count(); ++e) anchors.push_back(c.inverse(frame.anchor(e)));
  return trivialize(c, frame.base(), anchors);
}

SemidirectReport semidirect_structure(const BisGroup& bis, const TransportFrame& frame) {
  SemidirectReport r;
  const auto& c = bis.groupoid;
  const auto& g = bis.group;
  const auto n = c.object_count();
  std::vector<std::uint32_t> nn, hh;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (bis.elements[x].sigma.is_identity()) nn.push_back(x);
  for (const auto& sigma : all_permutations(n)) {
    Bisection h{sigma, {}};
    for (ObjectId i = 0; i < n; ++i) h.legs.push_back(frame.transport(i, sigma.image0(i)));
    hh.push_back(bis.index_of(h));
  }
  std::sort(hh.begin(), hh.end());
  r.n_order = nn.size();
  r.h_order = hh.size();
  r.bis_order = g.order();
  const auto fail = [&](std::string w) {
    if (r.witness.empty()) r.witness = std::move(w);
  };

  try {
    r.n_is_product = find_isomorphism(subgroup(g, nn, "N"), direct_power(c.end_group(frame.base()), n)).has_value();
    r.h_is_symmetric = find_isomorphism(subgroup(g, hh, "H"), symmetric_group(n)).has_value();
  } catch (const StructureError& e) {
    fail(std::string("subgroup check: ") + e.what());
  }
  if (!r.n_is_product) fail("N is not the product of the end groups");
  if (!r.h_is_symmetric) fail("H is not the symmetric group");

  std::vector<std::uint32_t> common;
  std::set_intersection(nn.begin(), nn.end(), hh.begin(), hh.end(), std::back_inserter(common));
  r.trivial_intersection = common == std::vector<std::uint32_t>{g.identity()};
  if (!r.trivial_intersection) fail("N and H meet outside the identity");

  const std::set<std::uint32_t> in_n(nn.begin(), nn.end());
  r.n_normal = true;
  for (std::uint32_t x = 0; x < g.order() && r.n_normal; ++x)
    for (auto y : nn)
      if (!in_n.count(g.mul(g.mul(x, y), g.inv(x)))) {
        r.n_normal = false;
        fail("conjugate of " + g.label(y) + " by " + g.label(x) + " leaves N");
        break;
      }

  r.action_matches = true;
  for (auto h : hh) {
    const auto& hb = bis.elements[h];
    for (auto y : nn) {
      const auto& nb = bis.elements[y];
      Bisection formula{Permutation::identity(n), {}};
      for (ObjectId e = 0; e < n; ++e) {
        const auto he = hb.legs[e];
        formula.legs.push_back(c.compose(c.inverse(he), c.compose(nb.legs[hb.sigma.image0(e)], he)));
      }
      const auto direct = compose_bisections(c, inverse_bisection(c, hb), compose_bisections(c, nb, hb));
      if (!(formula == direct)) {
        r.action_matches = false;
        fail("action formula differs at " + g.label(h) + " on " + g.label(y));
      }
    }
  }

  r.generated = r.n_order * r.h_order == r.bis_order;
  for (const auto& b : bis.elements) {
    const auto d = decompose(b, frame);
    if (!(compose_bisections(c, d.h_part, d.n_part) == b)) {
      r.generated = false;
      fail("decomposition does not recompose " + bisection_label(c, b));
      break;
    }
  }
  return r;
}

}  // namespace pknets
