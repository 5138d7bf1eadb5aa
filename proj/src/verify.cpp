#include "pknets/verify.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "pknets/wreath.hpp"

namespace pknets {

using nlohmann::json;

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

int VerifyReport::exit_code() const {
  bool any = false, hard = false;
  for (const auto& c : checks)
    if (!c.ok) {
      any = true;
      hard = hard || !c.resource;
    }
  return !any ? 0 : hard ? 1 : 3;
}

json VerifyReport::to_json() const {
  json out = {{"ok", ok()}, {"checks", json::array()}};
  std::size_t failed = 0;
  for (const auto& c : checks) {
    json j = {{"suite", c.suite}, {"instance", c.instance}, {"check", c.name}, {"ok", c.ok}};
    if (c.resource) j["resource_bound"] = true;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.data.empty()) j["data"] = c.data;
    failed += !c.ok;
    out["checks"].push_back(std::move(j));
  }
  out["passed"] = checks.size() - failed;
  out["failed"] = failed;
  return out;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.ok ? "[PASS] " : c.resource ? "[BOUND] " : "[FAIL] ") << c.suite << " / " << c.instance << " / " << c.name;
    if (!c.data.empty()) out << "  " << c.data.dump();
    if (!c.detail.empty()) out << "\n       " << c.detail;
    out << '\n';
    failed += !c.ok;
  }
  out << checks.size() - failed << " passed, " << failed << " failed\n";
  return out.str();
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"groups", "functor-groupoid", "subgroupoid", "bisections"};
  return s;
}

CheckResult check_wreath_semidirect(const FiniteGroup& z, std::uint32_t n, const Limits& limits) {
  const auto k = z.order();
  const WreathProduct w(z, n, limits);
  const auto base = direct_power(z, n, limits);
  const auto sn = symmetric_group(n, limits);
  const auto perms = all_permutations(n);
  const auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t v = 0;
    for (auto x : c) v = v * k + x;
    return v;
  };
  std::vector<std::vector<std::uint32_t>> action(sn.order(), std::vector<std::uint32_t>(base.order()));
  for (std::uint32_t t = 0; t < sn.order(); ++t) {
    const auto inv = perms[t].inverse();
    for (std::uint32_t v = 0; v < base.order(); ++v) {
      std::vector<std::uint32_t> coords(n);
      auto code = v;
      for (std::uint32_t i = n; i-- > 0;) {
        coords[i] = code % k;
        code /= k;
      }
      std::vector<std::uint32_t> moved(n);
      for (std::uint32_t j = 0; j < n; ++j) moved[j] = coords[inv.image0(j)];
      action[t][v] = encode(moved);
    }
  }
  const auto sd = semidirect_product(base, sn, action, limits);
  if (sd.order() != w.group().order()) return CheckResult::fail("orders differ");
  std::vector<std::uint32_t> map(w.group().order());
  for (std::uint32_t x = 0; x < w.group().order(); ++x) {
    const auto e = w.element(x);
    const auto inv = e.sigma.inverse();
    std::vector<std::uint32_t> moved(n);
    for (std::uint32_t j = 0; j < n; ++j) moved[j] = e.coords[inv.image0(j)];
    map[x] = static_cast<std::uint32_t>(e.sigma.rank()) * base.order() + encode(moved);
  }
  if (!is_bijection(map, sd.order())) return CheckResult::fail("coordinate map is not a bijection");
  for (std::uint32_t a = 0; a < w.group().order(); ++a)
    for (std::uint32_t b = 0; b < w.group().order(); ++b)
      if (map[w.group().mul(a, b)] != sd.mul(map[a], map[b]))
        return CheckResult::fail(w.label(w.element(a)) + " * " + w.label(w.element(b)));
  return CheckResult::pass();
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  json data = json::object();
};

Outcome from(const CheckResult& r) { return {r.ok, r.witness, json::object()}; }
Outcome from(bool ok, std::string detail = {}) { return {ok, std::move(detail), json::object()}; }

class Runner {
 public:
  Runner(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  void run(const std::string& instance, const std::string& name, const std::function<Outcome()>& body) {
    CheckRecord r{suite_, instance, name, false, false, {}, json::object()};
    try {
      auto o = body();
      r.ok = o.ok;
      if (!o.ok) r.detail = std::move(o.detail);
      r.data = std::move(o.data);
    } catch (const ResourceError& e) {
      r.resource = true;
      r.detail = std::string("resource bound: ") + e.what();
    } catch (const Error& e) {
      r.detail = e.what();
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

struct Family {
  std::string name;
  std::vector<ChordClass> classes;
  std::optional<SectionSubcategory> section;
};

std::vector<Family> class_families(const Workspace* ws) {
  if (ws) {
    if (ws->classes.empty()) return {};
    std::optional<SectionSubcategory> section;
    if (ws->group == ti_group()) section = ws->section();
    return {{"workspace", ws->classes, section}};
  }
  const auto& h = ti_extension().quotient();
  const auto names = [](const std::vector<ChordClass>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.name());
    return out;
  };
  std::vector<Family> out;
  auto berg = berg_fixture().classes;
  out.push_back({"berg", berg, identity_section(h, names(berg))});
  auto triads = triad_classes();
  out.push_back({"triads", triads, identity_section(h, names(triads))});
  auto hook = hook_classes();
  out.push_back({"hook", hook, identity_section(h, names(hook))});
  std::vector<ChordClass> d3{make_chord_class("F", ti_group(), build_delta3().category(), {{"f", "T4"}, {"g", "T3"}}),
                             webern_fixture().chord_class};
  d3[1] = ChordClass("Fw", d3[1].group(), d3[1].delta(), d3[1].values());
  out.push_back({"delta3", d3, identity_section(h, names(d3))});
  return out;
}

bool same_shape(const ChordClass& a, const ChordClass& b) {
  return same_category(a.delta(), b.delta()) && a.group() == b.group();
}

void groups_suite(VerifyReport& report, const Workspace* ws, const VerifyOptions& o) {
  Runner run(report, "groups");
  const auto& ti = ti_group();
  run.run("T/I", "group axioms", [&] {
    auto r = from(check_group_axioms(ti.table()));
    r.data["order"] = ti.order();
    return r;
  });
  run.run("T/I", "product rule", [&] {
    for (int m = 0; m < 12; ++m)
      for (int n = 0; n < 12; ++n) {
        const auto x = [&](TIElement a, TIElement b) { return ti.mul(a.index(), b.index()); };
        if (x(TIElement::I(m), TIElement::T(n)) != TIElement::I(m - n).index())
          return from(false, "I" + std::to_string(m) + " T" + std::to_string(n));
        if (x(TIElement::T(m), TIElement::I(n)) != TIElement::I(m + n).index())
          return from(false, "T" + std::to_string(m) + " I" + std::to_string(n));
        if (x(TIElement::I(m), TIElement::I(n)) != TIElement::T(m - n).index())
          return from(false, "I" + std::to_string(m) + " I" + std::to_string(n));
      }
    return from(true);
  });
  run.run("T/I", "pitch-class action", [&] {
    const auto& s = pitch_class_gset();
    if (auto r = check_gset_axioms(s); !r) return from(r);
    for (std::uint32_t g = 0; g < 24; ++g)
      for (std::uint8_t x = 0; x < 12; ++x)
        if (s.act(g, x) != TIElement::from_index(g).apply(x)) return from(false, ti.label(g) + "(" + std::to_string(x) + ")");
    return from(true);
  });
  run.run("T/I", "extension decomposition", [&] {
    const auto& e = ti_extension();
    for (std::uint32_t g = 0; g < ti.order(); ++g) {
      const auto d = extension_decompose(e, ti.element(g));
      if (ti.mul(e.section(d.h.index), e.inject(d.z.index)) != g) return from(false, ti.label(g));
      std::size_t pairs = 0;
      for (std::uint32_t z = 0; z < e.kernel().order(); ++z)
        for (std::uint32_t h = 0; h < e.quotient().order(); ++h) pairs += ti.mul(e.section(h), e.inject(z)) == g;
      if (pairs != 1) return from(false, ti.label(g) + " decomposes " + std::to_string(pairs) + " ways");
    }
    return from(true);
  });
  for (auto [k, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 3}, {3, 2}, {2, 3}, {3, 3}, {12, 2}}) {
    const auto inst = "Z" + std::to_string(k) + " wr S" + std::to_string(n);
    run.run(inst, "wreath order", [&] {
      const auto w = wreath_group(cyclic_group(k), n, o.limits);
      std::uint64_t expect = factorial(n);
      for (std::uint32_t i = 0; i < n; ++i) expect *= k;
      auto r = from(w.order() == expect && verify_group_axioms(w));
      r.data["order"] = w.order();
      return r;
    });
    if (std::uint64_t{k} * k * n <= 64)
      run.run(inst, "matches the semidirect product", [&] { return from(check_wreath_semidirect(cyclic_group(k), n, o.limits)); });
  }
  run.run("Z1 wr S3", "isomorphic to S3", [&] {
    return from(find_isomorphism(wreath_group(cyclic_group(1), 3), symmetric_group(3)).has_value());
  });
  if (ws) {
    run.run("workspace", "group axioms", [&] {
      auto r = from(check_group_axioms(ws->group.table()));
      r.data["order"] = ws->group.order();
      return r;
    });
    for (const auto& [name, cat] : ws->categories)
      run.run("category " + name, "category axioms", [&] { return from(check_category_axioms(cat.spec())); });
  }
}

void functor_groupoid_suite(VerifyReport& report, const Workspace* ws, const VerifyOptions& o) {
  Runner run(report, "functor-groupoid");
  for (const auto& fam : class_families(ws)) {
    const auto& cs = fam.classes;
    run.run(fam.name, "classes are functors", [&] {
      for (const auto& c : cs)
        if (auto r = check_functor_detailed(c.functor()); !r) return from(false, c.name() + ": " + r.witness);
      return from(true);
    });
    run.run(fam.name, "hom-sets are natural and complete", [&] {
      std::size_t pairs = 0;
      for (const auto& a : cs)
        for (const auto& b : cs) {
          if (!same_shape(a, b)) continue;
          const auto hs = homset(a, b, o.limits);
          if (a.bottom() && hs.size() != a.group().order())
            return from(false, a.name() + "->" + b.name() + " has " + std::to_string(hs.size()) + " morphisms");
          for (const auto& eta : hs)
            if (auto r = check_natural_detailed(eta.natural_transformation()); !r)
              return from(false, morphism_label(eta) + ": " + r.witness);
          ++pairs;
        }
      auto r = from(true);
      r.data["pairs"] = pairs;
      return r;
    });
    run.run(fam.name, "homset equals homset_general", [&] {
      for (const auto& a : cs)
        for (const auto& b : cs) {
          if (!same_shape(a, b)) continue;
          std::set<std::vector<std::uint32_t>> x, y;
          for (const auto& e : homset(a, b, o.limits)) x.insert(e.components);
          for (const auto& e : homset_general(a, b, o.limits)) y.insert(e.components);
          if (x != y) return from(false, a.name() + "->" + b.name());
        }
      return from(true);
    });
    run.run(fam.name, "labels multiply under composition", [&] {
      for (const auto& a : cs)
        for (const auto& b : cs)
          for (const auto& c : cs) {
            if (!same_shape(a, b) || !same_shape(b, c) || !a.bottom()) continue;
            const auto& g = a.group();
            for (std::uint32_t x = 0; x < g.order(); ++x)
              for (std::uint32_t y = 0; y < g.order(); ++y) {
                const auto eta = compose(morphism_with_label(b, c, y), morphism_with_label(a, b, x));
                if (eta.label != g.mul(y, x) || !components_natural(a, c, eta.components))
                  return from(false, morphism_label(eta));
              }
          }
      return from(true);
    });
    // Materialized per shape so classes over different Δ stay apart.
    std::vector<std::vector<ChordClass>> shapes;
    for (const auto& c : cs) {
      bool placed = false;
      for (auto& s : shapes)
        if (same_shape(s.front(), c)) {
          s.push_back(c);
          placed = true;
          break;
        }
      if (!placed) shapes.push_back({c});
    }
    for (const auto& shape : shapes) {
      const auto inst = fam.name + " over " + shape.front().delta().name();
      run.run(inst, "materialized groupoid axioms", [&] {
        const auto fg = materialize_groupoid(shape, o.limits);
        if (auto r = check_category_axioms(fg.groupoid.category().spec()); !r) return from(r);
        auto r = from(check_groupoid_axioms(fg.groupoid));
        r.data["morphisms"] = fg.groupoid.category().morphism_count();
        return r;
      });
      if (shape.front().group() == ti_group())
        run.run(inst, "P_{R,S} functor laws", [&] {
          return from(check_prs_functoriality(shape, singleton_diagram(shape.front().delta()), pitch_class_gset(), {},
                                              o.limits));
        });
    }
  }
}

void subgroupoid_suite(VerifyReport& report, const Workspace* ws, const VerifyOptions& o) {
  Runner run(report, "subgroupoid");
  for (const auto& fam : class_families(ws)) {
    if (!fam.section || !(fam.classes.front().group() == ti_group())) continue;
    bool one_shape = true;
    for (const auto& c : fam.classes) one_shape = one_shape && same_shape(c, fam.classes.front());
    if (!one_shape) continue;
    run.run(fam.name, "pullback subgroupoid", [&] {
      const auto sub = pullback_subgroupoid(fam.classes, ti_extension(), *fam.section, o.limits);
      const auto rep = verify_prop3_prop4(sub, ti_extension());
      const auto n = fam.classes.size();
      Outcome out;
      out.ok = rep.ok && rep.closed && sub.morphism_count() == n * n * ti_extension().kernel().order();
      out.data["morphisms"] = sub.morphism_count();
      out.data["closed"] = rep.closed;
      std::size_t iso = 0;
      for (bool b : rep.end_isomorphic) iso += b;
      out.data["end_isomorphic_to_Z12"] = iso;
      json cosets = json::array();
      for (const auto& c : rep.cosets) {
        cosets.push_back({{"from", c.from}, {"to", c.to}, {"representative", ti_group().label(c.representative)},
                          {"coset", c.is_coset}});
        if (!c.is_coset && out.detail.empty()) out.detail = c.from + "->" + c.to + " is not a coset";
      }
      out.data["cosets"] = std::move(cosets);
      if (!out.ok && out.detail.empty()) out.detail = "End(U) is not Z12 for some object";
      return out;
    });
  }
}

// S(i) = Hom(base, i), S(g)(x) = g∘x.
SetValuedDiagram representable(const Groupoid& c, ObjectId base) {
  const auto& cat = c.category();
  SetValuedDiagram s{cat, std::vector<std::vector<std::string>>(c.object_count()), {}};
  std::vector<std::map<MorphismId, std::uint32_t>> pos(c.object_count());
  for (ObjectId i = 0; i < c.object_count(); ++i)
    for (auto m : cat.hom(base, i)) {
      pos[i][m] = static_cast<std::uint32_t>(s.elements[i].size());
      s.elements[i].push_back(cat.morphism_name(m));
    }
  for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
    auto& f = s.maps.emplace_back();
    for (auto x : cat.hom(base, cat.source(g))) f.push_back(pos[cat.target(g)].at(c.compose(g, x)));
  }
  return s;
}

void bisection_battery(Runner& run, const std::string& inst, const Groupoid& c, const Workspace* ws, const Limits& limits) {
  std::optional<BisGroup> bis;
  run.run(inst, "Bis order and group axioms", [&] {
    bis = bis_group(c, limits);
    const auto z = c.end_group(0).order();
    std::uint64_t expect = factorial(c.object_count());
    for (std::uint32_t i = 0; i < c.object_count(); ++i) expect *= z;
    auto r = from(bis->group.order() == expect && verify_group_axioms(bis->group));
    r.data = {{"order", bis->group.order()}, {"objects", c.object_count()}, {"Z", z}};
    return r;
  });
  if (!bis) return;
  run.run(inst, "chi is an isomorphism onto Z wr Sn", [&] {
    for (ObjectId base = 0; base < c.object_count(); ++base) {
      const auto frame = TransportFrame::standard(c, base);
      if (auto r = frame.check_cocycle(); !r) return from(false, "cocycle: " + r.witness);
      const auto w = chi_codomain(frame, limits);
      const auto t = chi_table(*bis, frame, w);
      if (!is_bijection(t, w.group().order())) return from(false, "base " + c.category().object_name(base) + ": not bijective");
      if (!is_homomorphism(bis->group, w.group(), t))
        return from(false, "base " + c.category().object_name(base) + ": not a homomorphism");
    }
    return from(true);
  });
  const auto frame = TransportFrame::standard(c);
  run.run(inst, "decomposition b = h n", [&] {
    std::set<std::pair<std::vector<MorphismId>, std::vector<MorphismId>>> seen;
    for (const auto& b : bis->elements) {
      const auto d = decompose(b, frame);
      if (!d.n_part.sigma.is_identity() || !(compose_bisections(c, d.h_part, d.n_part) == b))
        return from(false, bis->group.label(bis->index_of(b)));
      seen.insert({d.n_part.legs, d.h_part.legs});
    }
    return from(seen.size() == bis->elements.size(), "decomposition is not injective");
  });
  run.run(inst, "semidirect structure", [&] {
    const auto r = semidirect_structure(*bis, frame);
    auto out = from(r.ok(), r.witness);
    out.data = {{"N", r.n_order}, {"H", r.h_order}};
    return out;
  });
  run.run(inst, "internal automorphisms", [&] {
    const auto r = xi_structure(*bis);
    auto out = from(r.homomorphism && r.all_bijective && r.image_closed);
    // The kernel is reported, not asserted: it is Z(Z) acting diagonally.
    out.data = {{"kernel", r.kernel_size}, {"image", r.image_size}, {"injective", r.injective}};
    if (!r.homomorphism) out.detail = "xi is not a homomorphism";
    return out;
  });
  run.run(inst, "trivialization", [&] {
    const auto t = trivialize(frame);
    if (auto r = check_functor_detailed(t.functor); !r) return from(r);
    return from(is_bijective(t.functor), "not bijective");
  });
  run.run(inst, "action on the disjoint union", [&] {
    const auto s = representable(c, 0);
    const auto id = identity_bisection(c);
    std::size_t points = 0;
    for (ObjectId i = 0; i < c.object_count(); ++i)
      for (std::uint32_t x = 0; x < s.elements[i].size(); ++x) {
        ++points;
        if (act_on_disjoint_union(c, id, s, {x, i}) != std::pair<std::uint32_t, ObjectId>{x, i})
          return from(false, "identity moves " + s.elements[i][x]);
        for (const auto& a : bis->elements) {
          const auto ax = act_on_disjoint_union(c, a, s, {x, i});
          for (const auto& b : bis->elements)
            if (act_on_disjoint_union(c, compose_bisections(c, b, a), s, {x, i}) != act_on_disjoint_union(c, b, s, ax))
              return from(false, s.elements[i][x]);
        }
      }
    auto r = from(true);
    r.data["points"] = points;
    return r;
  });
  if (ws)
    for (std::size_t k = 0; k < ws->bisections.size(); ++k)
      run.run(inst, "bisection literal " + std::to_string(k), [&] {
        const auto b = parse_bisection(ws->bisections[k], c);
        const auto d = decompose(b, frame);
        auto r = from(compose_bisections(c, d.h_part, d.n_part) == b);
        r.data = {{"chi", chi_codomain(frame, limits).label(chi(b, frame, chi_codomain(frame, limits)))}};
        return r;
      });
}

void bisections_suite(VerifyReport& report, const Workspace* ws, const VerifyOptions& o) {
  Runner run(report, "bisections");
  if (ws) {
    std::optional<Groupoid> c;
    run.run("workspace", "groupoid", [&] {
      c = workspace_groupoid(*ws);
      auto r = from(check_groupoid_axioms(*c));
      r.data = {{"objects", c->object_count()}, {"morphisms", c->category().morphism_count()}};
      return r;
    });
    if (c) bisection_battery(run, "workspace", *c, ws, o.limits);
  } else {
    const auto& h = ti_extension().quotient();
    const auto hook = pullback_subgroupoid(hook_classes(), ti_extension(), identity_section(h, {"U", "V"}), o.limits);
    bisection_battery(run, "hook", hook.as_groupoid(), nullptr, o.limits);
  }
  bisection_battery(run, "Z3 pair n=2", pair_groupoid(2, cyclic_group(3)), nullptr, o.limits);

  std::mt19937_64 rng(o.seed);
  const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 3);
  const std::vector<FiniteGroup> zs{cyclic_group(2), cyclic_group(3), symmetric_group(3)};
  const auto& z = zs[rng() % zs.size()];
  const auto name = "seed " + std::to_string(o.seed) + ": " + z.name() + " pair n=" + std::to_string(n);
  bisection_battery(run, name, shuffled_groupoid(pair_groupoid(n, z), rng()), nullptr, o.limits);
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const Workspace* ws, const VerifyOptions& options) {
  VerifyReport report;
  const bool all = suite == "all";
  bool known = all;
  const std::vector<std::pair<std::string, void (*)(VerifyReport&, const Workspace*, const VerifyOptions&)>> table{
      {"groups", groups_suite},
      {"functor-groupoid", functor_groupoid_suite},
      {"subgroupoid", subgroupoid_suite},
      {"bisections", bisections_suite}};
  for (const auto& [name, fn] : table)
    if (all || suite == name) {
      known = true;
      fn(report, ws, options);
    }
  if (!known) throw InputError("unknown suite \"" + suite + "\"");
  return report;
}

}  // namespace pknets
