#include "pknets/pknet.hpp"

#include <map>

namespace pknets {

CheckResult check_diagram(const SetValuedDiagram& r) {
  const auto& d = r.delta;
  if (r.elements.size() != d.object_count()) return CheckResult::fail("one element set per object expected");
  if (r.maps.size() != d.morphism_count()) return CheckResult::fail("one map per morphism expected");
  for (ObjectId x = 0; x < d.object_count(); ++x)
    if (r.elements[x].empty()) return CheckResult::fail("R(" + d.object_name(x) + ") is empty");
  for (MorphismId m = 0; m < d.morphism_count(); ++m) {
    const auto& f = r.maps[m];
    if (f.size() != r.elements[d.source(m)].size())
      return CheckResult::fail("R(" + d.morphism_name(m) + ") is not total");
    for (auto y : f)
      if (y >= r.elements[d.target(m)].size())
        return CheckResult::fail("R(" + d.morphism_name(m) + ") leaves its target");
  }
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    const auto& f = r.maps[d.identity(x)];
    for (std::uint32_t i = 0; i < f.size(); ++i)
      if (f[i] != i) return CheckResult::fail("R(id_" + d.object_name(x) + ") is not the identity");
  }
  for (MorphismId m2 = 0; m2 < d.morphism_count(); ++m2)
    for (MorphismId m1 = 0; m1 < d.morphism_count(); ++m1) {
      const auto c = d.compose(m2, m1);
      if (!c) continue;
      for (std::uint32_t i = 0; i < r.maps[m1].size(); ++i)
        if (r.maps[*c][i] != r.maps[m2][r.maps[m1][i]])
          return CheckResult::fail("R(" + d.morphism_name(m2) + " o " + d.morphism_name(m1) + ") differs from the composite at " +
                                   r.elements[d.source(m1)][i]);
    }
  return CheckResult::pass();
}

std::shared_ptr<const SetValuedDiagram> make_diagram(SetValuedDiagram r) {
  if (auto c = check_diagram(r); !c) throw StructureError("not a set-valued functor", c.witness);
  return std::make_shared<const SetValuedDiagram>(std::move(r));
}

std::shared_ptr<const SetValuedDiagram> singleton_diagram(const FinCategory& delta) {
  SetValuedDiagram r{delta, {}, {}};
  for (ObjectId x = 0; x < delta.object_count(); ++x) r.elements.push_back({delta.object_name(x)});
  r.maps.assign(delta.morphism_count(), {0});
  return make_diagram(std::move(r));
}

PKNet singleton_net(const GSet& s, const ChordClass& f, std::vector<std::uint32_t> points) {
  PKNet net{singleton_diagram(f.delta()), s, f, {}};
  for (auto p : points) net.phi.push_back({p});
  return net;
}

namespace {

void require_structure(const PKNet& net) {
  if (!net.R) throw InputError("PK-net has no diagram");
  const auto& r = *net.R;
  const auto& d = r.delta;
  if (!same_category(d, net.F.delta()))
    throw InputError("PK-net: diagram and chord class " + net.F.name() + " are over different shapes");
  if (!(net.S.group() == net.F.group())) throw InputError("PK-net: the G-set is over a different group");
  if (net.phi.size() != d.object_count()) throw InputError("PK-net: phi needs one component per object");
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    if (net.phi[x].size() != r.elements[x].size())
      throw InputError("PK-net: phi(" + d.object_name(x) + ") has the wrong size");
    for (auto p : net.phi[x])
      if (p >= net.S.size()) throw InputError("PK-net: phi(" + d.object_name(x) + ") leaves the G-set");
  }
}

}  // namespace

CheckResult check_pknet(const PKNet& net) {
  require_structure(net);
  const auto& r = *net.R;
  const auto& d = r.delta;
  for (MorphismId m = 0; m < d.morphism_count(); ++m) {
    const auto x = d.source(m), y = d.target(m);
    for (std::uint32_t i = 0; i < r.elements[x].size(); ++i) {
      const auto lhs = net.phi[y][r.maps[m][i]];
      const auto rhs = net.S.act(net.F.value(m), net.phi[x][i]);
      if (lhs != rhs)
        return CheckResult::fail("square at " + d.morphism_name(m) + " fails on " + r.elements[x][i] + ": " +
                                 net.S.point(lhs) + " != " + net.S.point(rhs));
    }
  }
  return CheckResult::pass();
}

bool validate_pknet(const PKNet& net) { return check_pknet(net).ok; }

std::vector<PKNet> enumerate_NF(const std::shared_ptr<const SetValuedDiagram>& r, const GSet& s, const ChordClass& f,
                                const Limits& limits) {
  if (!r) throw InputError("no diagram given");
  // Probe the structure with a dummy phi.
  PKNet probe{r, s, f, {}};
  for (const auto& e : r->elements) probe.phi.emplace_back(e.size(), 0);
  require_structure(probe);

  const auto& d = r->delta;
  std::vector<std::uint32_t> offset;
  std::uint32_t vars = 0;
  for (const auto& e : r->elements) {
    offset.push_back(vars);
    vars += static_cast<std::uint32_t>(e.size());
  }
  struct Constraint {
    std::uint32_t a, b, g;  // val[b] == g·val[a]
  };
  std::vector<std::vector<Constraint>> due(vars);
  for (MorphismId m = 0; m < d.morphism_count(); ++m)
    for (std::uint32_t i = 0; i < r->elements[d.source(m)].size(); ++i) {
      const auto a = offset[d.source(m)] + i;
      const auto b = offset[d.target(m)] + r->maps[m][i];
      due[std::max(a, b)].push_back({a, b, f.value(m)});
    }

  std::vector<std::uint32_t> val(vars);
  std::vector<PKNet> out;
  std::uint64_t nodes = 0;
  const auto emit = [&] {
    PKNet net{r, s, f, {}};
    for (ObjectId x = 0; x < d.object_count(); ++x)
      net.phi.emplace_back(val.begin() + offset[x], val.begin() + offset[x] + r->elements[x].size());
    out.push_back(std::move(net));
  };
  const std::function<void(std::uint32_t)> search = [&](std::uint32_t v) {
    if (v == vars) {
      emit();
      return;
    }
    for (std::uint32_t p = 0; p < s.size(); ++p) {
      if (++nodes > limits.max_search_nodes)
        throw ResourceError("PK-net enumeration exceeded " + std::to_string(limits.max_search_nodes) + " nodes");
      val[v] = p;
      bool ok = true;
      for (const auto& c : due[v])
        if (val[c.b] != s.act(c.g, val[c.a])) {
          ok = false;
          break;
        }
      if (ok) search(v + 1);
    }
  };
  search(0);
  return out;
}

PKNet act(const GDeltaMorphism& eta, const PKNet& net) {
  if (!(net.F == eta.source))
    throw InputError("cannot act with a morphism from " + eta.source.name() + " on a net over " + net.F.name());
  PKNet out{net.R, net.S, eta.target, net.phi};
  for (std::size_t x = 0; x < out.phi.size(); ++x)
    for (auto& p : out.phi[x]) p = net.S.act(eta.components[x], p);
  return out;
}

std::vector<GDeltaMorphism> solve_transport(const PKNet& a, const PKNet& b, const Limits& limits) {
  if (!(a.S == b.S)) throw InputError("nets act on different G-sets");
  if (a.R != b.R && !(a.R->elements == b.R->elements && a.R->maps == b.R->maps))
    throw InputError("nets have different diagrams");
  std::vector<GDeltaMorphism> out;
  for (auto& eta : homset(a.F, b.F, limits))
    if (act(eta, a).phi == b.phi) out.push_back(std::move(eta));
  return out;
}

CheckResult check_prs_functoriality(const std::vector<ChordClass>& classes,
                                    const std::shared_ptr<const SetValuedDiagram>& r, const GSet& s,
                                    const ComposeFn& composer, const Limits& limits) {
  const ComposeFn comp = composer ? composer : ComposeFn([](const GDeltaMorphism& b, const GDeltaMorphism& a) {
    return compose(b, a);
  });
  std::vector<std::vector<PKNet>> nets;
  for (const auto& c : classes) nets.push_back(enumerate_NF(r, s, c, limits));
  const auto n = classes.size();
  std::vector<std::vector<std::vector<GDeltaMorphism>>> hom(n, std::vector<std::vector<GDeltaMorphism>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom[i][j] = homset(classes[i], classes[j], limits);

  for (std::size_t i = 0; i < n; ++i)
    for (const auto& net : nets[i])
      if (!(act(identity_morphism(classes[i]), net) == net))
        return CheckResult::fail("identity of " + classes[i].name() + " moves a net");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& e1 : hom[i][j])
          for (const auto& e2 : hom[j][k]) {
            const auto c = comp(e2, e1);
            if (!(c.source == classes[i]) || !(c.target == classes[k]))
              return CheckResult::fail("composite " + morphism_label(e2) + " o " + morphism_label(e1) + " has wrong ends");
            for (const auto& net : nets[i])
              if (!(act(c, net) == act(e2, act(e1, net))))
                return CheckResult::fail("P(" + morphism_label(e2) + " o " + morphism_label(e1) +
                                         ") differs from the composite of the images");
          }
  return CheckResult::pass();
}

PRSFunctor prs_functor(const FunctorGroupoid& g, const std::shared_ptr<const SetValuedDiagram>& r, const GSet& s,
                       const Limits& limits) {
  PRSFunctor out;
  std::vector<std::map<std::vector<std::vector<std::uint32_t>>, std::uint32_t>> index;
  for (const auto& c : g.classes) {
    out.sets.push_back(enumerate_NF(r, s, c, limits));
    auto& idx = index.emplace_back();
    for (std::uint32_t i = 0; i < out.sets.back().size(); ++i) idx[out.sets.back()[i].phi] = i;
  }
  const auto& cat = g.groupoid.category();
  for (MorphismId m = 0; m < cat.morphism_count(); ++m) {
    const auto src = cat.source(m), tgt = cat.target(m);
    auto& f = out.maps.emplace_back();
    for (const auto& net : out.sets[src]) f.push_back(index[tgt].at(act(g.morphisms[m], net).phi));
  }
  return out;
}

}  // namespace pknets
