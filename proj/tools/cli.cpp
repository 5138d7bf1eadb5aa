#include "cli.hpp"

#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "pknets/descriptors.hpp"
#include "pknets/verify.hpp"

namespace pknets::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string config;
  bool json = false;
  bool flats = false;
  bool normalize = false;
  std::optional<std::uint64_t> bound;
  std::uint64_t seed = 1;

  bool signed_labels() const { return !normalize; }
};

struct Context {
  const Options& opt;
  std::ostream& out;
  Workspace ws;
};

Workspace load(const Options& opt) {
  if (opt.config.empty()) throw InputError("this command needs --config PATH");
  auto ws = load_workspace_file(opt.config);
  if (opt.bound) {
    ws.limits.max_group_order = *opt.bound;
    ws.limits.max_search_nodes = *opt.bound;
  }
  return ws;
}

json components_json(const GDeltaMorphism& eta, bool signed_labels) {
  json c = json::object();
  for (const auto& e : component_table(eta, signed_labels)) c[e.object] = e.label;
  return c;
}

std::string components_text(const GDeltaMorphism& eta, bool signed_labels) {
  std::string s;
  for (const auto& e : component_table(eta, signed_labels)) s += " " + e.object + ":" + e.label;
  return s;
}

std::string pitches_text(const PKNet& net, bool flats) {
  std::string s;
  const auto& d = net.F.delta();
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    s += (x ? " " : "") + d.object_name(x) + ":";
    for (std::size_t i = 0; i < net.phi[x].size(); ++i) s += (i ? "," : "") + pitch_name(net.phi[x][i], flats);
  }
  return s;
}

json pitches_json(const PKNet& net, bool flats) {
  json j = json::object();
  const auto& d = net.F.delta();
  for (ObjectId x = 0; x < d.object_count(); ++x) {
    if (net.phi[x].size() == 1) {
      j[d.object_name(x)] = pitch_name(net.phi[x][0], flats);
    } else {
      j[d.object_name(x)] = json::array();
      for (auto p : net.phi[x]) j[d.object_name(x)].push_back(pitch_name(p, flats));
    }
  }
  return j;
}

int cmd_homset(Context& c, const std::string& from, const std::string& to) {
  const auto& a = c.ws.find_class(from);
  const auto& b = c.ws.find_class(to);
  const auto hs = homset(a, b, c.ws.limits);
  const bool sl = c.opt.signed_labels();
  if (c.opt.json) {
    json rows = json::array();
    for (const auto& e : hs) rows.push_back({{"label", morphism_label(e, sl)}, {"components", components_json(e, sl)}});
    c.out << json{{"from", from}, {"to", to}, {"count", hs.size()}, {"morphisms", rows}}.dump(2) << '\n';
    return ok;
  }
  c.out << "Hom(" << from << ", " << to << "): " << hs.size() << " morphisms\n";
  for (const auto& e : hs) c.out << std::left << std::setw(14) << morphism_label(e, sl) << components_text(e, sl) << '\n';
  return ok;
}

int cmd_analyze(Context& c, const std::string& name) {
  const auto& p = c.ws.find_progression(name);
  const auto steps = analyze_progression(p, Preference::transposition_first, c.ws.limits);
  const bool sl = c.opt.signed_labels();
  if (c.opt.json) {
    json chords = json::array(), js = json::array();
    for (const auto& n : p.nets) chords.push_back({{"class", n.F.name()}, {"pitches", pitches_json(n, c.opt.flats)}});
    for (const auto& s : steps) {
      json alts = json::array();
      for (const auto& a : s.alternatives) alts.push_back(morphism_label(a, sl));
      js.push_back({{"from", s.from_index + 1},
                    {"to", s.to_index + 1},
                    {"label", morphism_label(s.morphism, sl)},
                    {"components", components_json(s.morphism, sl)},
                    {"alternatives", alts}});
    }
    c.out << json{{"progression", name}, {"chords", chords}, {"steps", js}}.dump(2) << '\n';
    return ok;
  }
  c.out << "progression " << name << ": " << p.nets.size() << " chords, " << steps.size() << " steps\n";
  for (std::size_t i = 0; i < p.nets.size(); ++i)
    c.out << std::left << std::setw(4) << (i + 1) << std::setw(5) << p.nets[i].F.name() << pitches_text(p.nets[i], c.opt.flats)
          << '\n';
  c.out << component_report(steps, sl);
  return ok;
}

int cmd_dot(Context& c, const std::string& name) {
  const auto& p = c.ws.find_progression(name);
  const auto steps = analyze_progression(p, Preference::transposition_first, c.ws.limits);
  const auto dot = progression_dot(p, steps, DotOptions{c.opt.flats, c.opt.signed_labels()});
  if (c.opt.json)
    c.out << json{{"progression", name}, {"dot", dot}}.dump(2) << '\n';
  else
    c.out << dot;
  return ok;
}

int cmd_act(Context& c, const std::string& net_name, const std::string& target, const std::string& element) {
  const auto& net = c.ws.find_net(net_name);
  const auto& to = c.ws.find_class(target);
  const auto g = parse_element(net.F.group(), element);
  if (!g) throw InputError("unknown group element \"" + element + "\"");
  const auto eta = morphism_with_label(net.F, to, *g);
  const auto result = act(eta, net);
  const bool sl = c.opt.signed_labels();
  if (c.opt.json) {
    c.out << json{{"morphism", morphism_label(eta, sl)},
                  {"components", components_json(eta, sl)},
                  {"source", pitches_json(net, c.opt.flats)},
                  {"result", pitches_json(result, c.opt.flats)},
                  {"valid", validate_pknet(result)}}
                 .dump(2)
          << '\n';
    return ok;
  }
  c.out << morphism_label(eta, sl) << " components" << components_text(eta, sl) << '\n'
        << "  " << net.F.name() << "  " << pitches_text(net, c.opt.flats) << '\n'
        << "  " << to.name() << "  " << pitches_text(result, c.opt.flats) << '\n';
  return ok;
}

int cmd_nf(Context& c, const std::string& name) {
  const auto& f = c.ws.find_class(name);
  if (!(f.group() == ti_group())) throw InputError("nf uses the pitch-class action and needs the T/I group");
  const auto nets = enumerate_NF(singleton_diagram(f.delta()), pitch_class_gset(), f, c.ws.limits);
  if (c.opt.json) {
    json rows = json::array();
    for (const auto& n : nets) rows.push_back(pitches_json(n, c.opt.flats));
    c.out << json{{"class", name}, {"count", nets.size()}, {"nets", rows}}.dump(2) << '\n';
    return ok;
  }
  c.out << "N_" << name << ": " << nets.size() << " nets\n";
  for (const auto& n : nets) c.out << "  " << pitches_text(n, c.opt.flats) << '\n';
  return ok;
}

int cmd_subgroupoid(Context& c) {
  if (c.ws.classes.empty()) throw InputError("subgroupoid needs classes");
  const auto sub = pullback_subgroupoid(c.ws.classes, ti_extension(), c.ws.section(), c.ws.limits);
  const auto rep = verify_prop3_prop4(sub, ti_extension());
  const auto& cat = sub.ambient.groupoid.category();
  const bool sl = c.opt.signed_labels();
  json pairs = json::array();
  std::vector<std::string> lines;
  for (ObjectId a = 0; a < cat.object_count(); ++a)
    for (ObjectId b = 0; b < cat.object_count(); ++b) {
      json labels = json::array();
      std::string text;
      for (auto m : sub.hom(a, b)) {
        const auto l = element_label(ti_group(), sub.ambient.morphisms[m].label, sl);
        labels.push_back(l);
        text += " " + l;
      }
      const auto& w = rep.cosets[a * cat.object_count() + b];
      pairs.push_back({{"from", cat.object_name(a)}, {"to", cat.object_name(b)}, {"labels", labels}, {"coset", w.is_coset}});
      lines.push_back(cat.object_name(a) + "->" + cat.object_name(b) + (w.is_coset ? "  coset:" : "  NOT a coset:") + text);
    }
  json ends = json::object();
  for (ObjectId o = 0; o < cat.object_count(); ++o) ends[cat.object_name(o)] = static_cast<bool>(rep.end_isomorphic[o]);
  if (c.opt.json) {
    c.out << json{{"ok", rep.ok}, {"closed", rep.closed}, {"morphisms", sub.morphism_count()}, {"end_isomorphic_to_Z12", ends},
                  {"homsets", pairs}}
                 .dump(2)
          << '\n';
  } else {
    c.out << "pullback subgroupoid: " << cat.object_count() << " objects, " << sub.morphism_count() << " morphisms, "
          << (rep.closed ? "closed" : "NOT closed") << '\n';
    for (ObjectId o = 0; o < cat.object_count(); ++o)
      c.out << "End(" << cat.object_name(o) << ") " << (rep.end_isomorphic[o] ? "~ Z12" : "NOT ~ Z12") << '\n';
    for (const auto& l : lines) c.out << l << '\n';
  }
  return rep.ok ? ok : verification_failed;
}

int cmd_bisections(Context& c) {
  const auto g = workspace_groupoid(c.ws);
  const auto bis = bis_group(g, c.ws.limits);
  const auto frame = TransportFrame::standard(g);
  const auto w = chi_codomain(frame, c.ws.limits);
  const auto& cat = g.category();
  const auto render = [&](const Bisection& b) {
    const auto d = decompose(b, frame);
    json legs = json::array(), n = json::array(), h = json::array();
    for (auto m : b.legs) legs.push_back(cat.morphism_name(m));
    for (auto m : d.n_part.legs) n.push_back(cat.morphism_name(m));
    for (auto m : d.h_part.legs) h.push_back(cat.morphism_name(m));
    return json{{"sigma", b.sigma.images()}, {"legs", b.legs},  {"leg_names", legs},
                {"n_part", n},               {"h_part", h},     {"chi", w.label(chi(b, frame, w))}};
  };
  std::vector<Bisection> literals;
  for (const auto& j : c.ws.bisections) literals.push_back(parse_bisection(j, g));
  if (c.opt.json) {
    json all = json::array(), lits = json::array();
    for (const auto& b : bis.elements) all.push_back(render(b));
    for (const auto& b : literals) lits.push_back(render(b));
    c.out << json{{"objects", g.object_count()}, {"order", bis.group.order()}, {"Z", g.end_group(0).order()},
                  {"literals", lits},        {"elements", all}}
                 .dump(2)
          << '\n';
    return ok;
  }
  c.out << "Bis: " << bis.group.order() << " bisections over " << g.object_count() << " objects, |End| = "
        << g.end_group(0).order() << '\n';
  for (const auto& b : literals) {
    const auto r = render(b);
    c.out << "sigma " << b.sigma.to_string() << "  legs " << r["leg_names"].dump() << "\n  N part " << r["n_part"].dump()
          << "\n  H part " << r["h_part"].dump() << "\n  chi " << r["chi"].get<std::string>() << '\n';
  }
  return ok;
}

int cmd_wreath_iso(Context& c) {
  const auto g = workspace_groupoid(c.ws);
  const auto bis = bis_group(g, c.ws.limits);
  bool all = true;
  json bases = json::array();
  for (ObjectId base = 0; base < g.object_count(); ++base) {
    const auto frame = TransportFrame::standard(g, base);
    const auto w = chi_codomain(frame, c.ws.limits);
    const auto t = chi_table(bis, frame, w);
    const bool bij = is_bijection(t, w.group().order());
    const bool hom = is_homomorphism(bis.group, w.group(), t);
    all = all && bij && hom;
    json table = json::array();
    if (c.opt.json)
      for (std::uint32_t x = 0; x < t.size(); ++x) table.push_back({bis.group.label(x), w.group().label(t[x])});
    bases.push_back({{"base", g.category().object_name(base)},
                     {"codomain", w.group().name()},
                     {"bijective", bij},
                     {"homomorphism", hom},
                     {"table", table}});
    if (!c.opt.json)
      c.out << "base " << g.category().object_name(base) << ": chi onto " << w.group().name() << " (order " << w.group().order()
            << ") " << (bij ? "bijective" : "NOT bijective") << ", " << (hom ? "homomorphism" : "NOT a homomorphism") << '\n';
  }
  if (c.opt.json) c.out << json{{"ok", all}, {"order", bis.group.order()}, {"bases", bases}}.dump(2) << '\n';
  return all ? ok : verification_failed;
}

int cmd_trivialize(Context& c) {
  const auto g = workspace_groupoid(c.ws);
  const auto t = trivialize(TransportFrame::standard(g));
  const bool functor = check_functor(t.functor);
  const bool bij = is_bijective(t.functor);
  const auto& src = g.category();
  const auto& dst = t.product.category();
  if (c.opt.json) {
    json rows = json::array();
    for (MorphismId m = 0; m < src.morphism_count(); ++m)
      rows.push_back({src.morphism_name(m), dst.morphism_name(t.functor.on_morphisms[m])});
    c.out << json{{"functor", functor}, {"bijective", bij}, {"product", dst.name()}, {"map", rows}}.dump(2) << '\n';
  } else {
    c.out << "trivialization onto " << dst.name() << ": " << (functor ? "functor" : "NOT a functor") << ", "
          << (bij ? "bijective" : "NOT bijective") << '\n';
    for (MorphismId m = 0; m < src.morphism_count(); ++m)
      c.out << "  " << std::left << std::setw(16) << src.morphism_name(m) << " -> " << dst.morphism_name(t.functor.on_morphisms[m])
            << '\n';
  }
  return functor && bij ? ok : verification_failed;
}

int cmd_verify(const Options& opt, std::ostream& out, const std::string& suite) {
  VerifyOptions vo;
  vo.seed = opt.seed;
  std::optional<Workspace> ws;
  VerifyReport report;
  if (!opt.config.empty()) {
    try {
      ws = load(opt);
    } catch (const StructureError& e) {
      report.checks.push_back({"workspace", opt.config, "load", false, false, e.what(), {{"witness", e.witness()}}});
    }
    if (!ws) {
      out << (opt.json ? report.to_json().dump(2) + "\n" : report.to_text());
      return verification_failed;
    }
    vo.limits = ws->limits;
  } else if (opt.bound) {
    vo.limits.max_group_order = *opt.bound;
    vo.limits.max_search_nodes = *opt.bound;
  }
  report = run_verify(suite, ws ? &*ws : nullptr, vo);
  out << (opt.json ? report.to_json().dump(2) + "\n" : report.to_text());
  return report.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Functor groupoids acting on poly-Klumpenhouwer networks", "pknets"};
  Options opt;
  app.add_option("--config", opt.config, "Workspace JSON file");
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--flats", opt.flats, "Spell pitches with flats");
  app.add_flag("--normalize-labels", opt.normalize, "Print T/I labels as 0..11 instead of signed");
  app.add_option("--bound", opt.bound, "Cap both the group order and the search nodes")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed of the randomized groupoid in verify");
  app.require_subcommand(1, 1);

  std::string a, b, e, suite = "all";
  auto* homset_cmd = app.add_subcommand("homset", "List Hom(FROM, TO) with component tables");
  homset_cmd->add_option("from", a)->required();
  homset_cmd->add_option("to", b)->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a progression");
  analyze_cmd->add_option("progression", a)->required();
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of an analyzed progression");
  dot_cmd->add_option("progression", a)->required();
  auto* act_cmd = app.add_subcommand("act", "Apply the morphism ^{F TARGET}ELEMENT to a net");
  act_cmd->add_option("net", a)->required();
  act_cmd->add_option("target", b)->required();
  act_cmd->add_option("element", e)->required();
  auto* nf_cmd = app.add_subcommand("nf", "Enumerate N_F for a class");
  nf_cmd->add_option("class", a)->required();
  auto* sub_cmd = app.add_subcommand("subgroupoid", "Pullback subgroupoid along the section");
  auto* bis_cmd = app.add_subcommand("bisections", "Bisection group of the workspace groupoid");
  auto* wreath_cmd = app.add_subcommand("wreath-iso", "Check chi: Bis(C) -> Z wr Sn at every base");
  auto* triv_cmd = app.add_subcommand("trivialize", "Isomorphism onto the pair groupoid times Z");
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", suite, "groups | functor-groupoid | subgroupoid | bisections | all")
      ->check(CLI::IsMember({"groups", "functor-groupoid", "subgroupoid", "bisections", "all"}));
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& ex) {
    err << "pknets: " << ex.what() << '\n';
    return input_error;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(opt, out, suite);
    Context c{opt, out, load(opt)};
    if (homset_cmd->parsed()) return cmd_homset(c, a, b);
    if (analyze_cmd->parsed()) return cmd_analyze(c, a);
    if (dot_cmd->parsed()) return cmd_dot(c, a);
    if (act_cmd->parsed()) return cmd_act(c, a, b, e);
    if (nf_cmd->parsed()) return cmd_nf(c, a);
    if (sub_cmd->parsed()) return cmd_subgroupoid(c);
    if (bis_cmd->parsed()) return cmd_bisections(c);
    if (wreath_cmd->parsed()) return cmd_wreath_iso(c);
    if (triv_cmd->parsed()) return cmd_trivialize(c);
  } catch (const AnalysisError& ex) {
    err << "pknets: " << ex.what() << '\n';
    return verification_failed;
  } catch (const ResourceError& ex) {
    err << "pknets: " << ex.what() << '\n';
    return resource_bound;
  } catch (const Error& ex) {
    err << "pknets: " << ex.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace pknets::cli
