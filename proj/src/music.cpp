#include "pknets/music.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "pknets/ti_group.hpp"

namespace pknets {

std::string pitch_name(std::uint32_t pc, bool flats) {
  static const char* sharp[] = {"C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};
  static const char* flat[] = {"C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B"};
  return (flats ? flat : sharp)[pc % 12];
}

std::optional<std::uint32_t> parse_pitch(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (std::isdigit(static_cast<unsigned char>(text.front()))) {
    std::uint32_t v = 0;
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || v > 11) return std::nullopt;
      v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    if (v > 11) return std::nullopt;
    return v;
  }
  static const int base[] = {9, 11, 0, 2, 4, 5, 7};  // A..G
  const auto letter = std::toupper(static_cast<unsigned char>(text.front()));
  if (letter < 'A' || letter > 'G') return std::nullopt;
  int v = base[letter - 'A'];
  text.remove_prefix(1);
  while (!text.empty()) {
    if (text.front() == '#') {
      ++v;
      text.remove_prefix(1);
    } else if (text.front() == 'b') {
      --v;
      text.remove_prefix(1);
    } else if (text.substr(0, 3) == "♯") {
      ++v;
      text.remove_prefix(3);
    } else if (text.substr(0, 3) == "♭") {
      --v;
      text.remove_prefix(3);
    } else {
      return std::nullopt;
    }
  }
  return static_cast<std::uint32_t>(((v % 12) + 12) % 12);
}

Progression Progression::slice(std::size_t first, std::size_t last) const {
  if (first > last || last > nets.size()) throw InputError("progression slice out of range");
  return Progression{std::vector<PKNet>(nets.begin() + static_cast<std::ptrdiff_t>(first),
                                        nets.begin() + static_cast<std::ptrdiff_t>(last))};
}

std::vector<AnalysisStep> analyze_progression(const Progression& p, Preference preference, const Limits& limits) {
  for (std::size_t i = 0; i < p.nets.size(); ++i)
    if (auto r = check_pknet(p.nets[i]); !r) throw InputError("chord " + std::to_string(i + 1) + " is not a valid net: " + r.witness);
  std::vector<AnalysisStep> steps;
  for (std::size_t i = 0; i + 1 < p.nets.size(); ++i) {
    const auto& a = p.nets[i];
    const auto& b = p.nets[i + 1];
    auto sols = solve_transport(a, b, limits);
    if (sols.empty())
      throw AnalysisError("no transformation takes chord " + std::to_string(i + 1) + " (" + a.F.name() + ") to chord " +
                          std::to_string(i + 2) + " (" + b.F.name() + ")");
    std::size_t pick = 0;
    if (preference == Preference::transposition_first) {
      const auto& e = a.F.group();
      for (std::size_t k = 0; k < sols.size(); ++k)
        if (e == ti_group() ? TIElement::from_index(sols[k].label).is_transposition() : sols[k].label == e.identity()) {
          pick = k;
          break;
        }
    }
    auto chosen = sols[pick];
    if (!(act(chosen, a) == b)) throw StructureError("transport check failed", morphism_label(chosen));
    steps.push_back(AnalysisStep{i, i + 1, std::move(chosen), std::move(sols)});
  }
  return steps;
}

std::string component_report(const std::vector<AnalysisStep>& steps, bool signed_labels) {
  std::ostringstream out;
  for (const auto& s : steps) {
    out << std::left << std::setw(8) << (std::to_string(s.from_index + 1) + "->" + std::to_string(s.to_index + 1))
        << std::setw(14) << morphism_label(s.morphism, signed_labels);
    for (const auto& c : component_table(s.morphism, signed_labels)) out << ' ' << c.object << ':' << c.label;
    if (s.alternatives.size() > 1) out << "  (" << s.alternatives.size() << " transports)";
    out << '\n';
  }
  return out.str();
}

PKNet pitch_net(const ChordClass& f, const std::vector<std::uint32_t>& pitches) {
  if (pitches.size() != f.delta().object_count())
    throw InputError("chord over " + f.name() + " needs " + std::to_string(f.delta().object_count()) + " pitches");
  return singleton_net(pitch_class_gset(), f, pitches);
}

std::vector<std::string> match_classes(const std::vector<ChordClass>& classes, const std::vector<std::uint32_t>& pitches) {
  std::vector<std::string> out;
  for (const auto& c : classes) {
    if (pitches.size() != c.delta().object_count()) continue;
    if (validate_pknet(pitch_net(c, pitches))) out.push_back(c.name());
  }
  return out;
}

namespace {

ChordClass gamma_class(const char* name, const char* f, const char* g) {
  return make_chord_class(name, ti_group(), build_gamma().category(), {{"f", f}, {"g", g}});
}

}  // namespace

BergFixture berg_fixture() {
  BergFixture b;
  b.classes = {gamma_class("U", "I3", "I10"), gamma_class("V", "I4", "I10"), gamma_class("U'", "I7", "I3"),
               gamma_class("W", "I8", "I3")};
  const auto& u = b.classes[0];
  const auto& v = b.classes[1];
  const auto& up = b.classes[2];
  const auto& w = b.classes[3];
  b.progression.nets = {pitch_net(u, {3, 0, 7}),    pitch_net(v, {1, 3, 9}),  pitch_net(v, {0, 4, 10}),
                        pitch_net(u, {2, 1, 8}),    pitch_net(u, {3, 0, 7}),  pitch_net(up, {0, 7, 3}),
                        pitch_net(w, {10, 10, 5}),  pitch_net(up, {11, 8, 4}), pitch_net(up, {0, 7, 3})};
  return b;
}

WebernFixture webern_fixture() {
  auto f = make_chord_class("F", ti_group(), build_delta3().category(), {{"f", "I8"}, {"g", "I9"}});
  std::vector<PKNet> nets{pitch_net(f, {9, 11, 10}), pitch_net(f, {1, 7, 2}), pitch_net(f, {5, 3, 6})};
  return WebernFixture{std::move(f), std::move(nets)};
}

std::vector<ChordClass> triad_classes() { return {gamma_class("U", "T4", "T7"), gamma_class("V", "T2", "T5")}; }

std::vector<ChordClass> hook_classes() { return {gamma_class("U", "T4", "T7"), gamma_class("V", "T3", "T7")}; }

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

// Non-identity morphisms that are not composites of two non-identities.
std::vector<MorphismId> generating_morphisms(const FinCategory& d) {
  std::vector<MorphismId> out;
  for (MorphismId m = 0; m < d.morphism_count(); ++m) {
    if (d.is_identity(m)) continue;
    bool composite = false;
    for (MorphismId a = 0; a < d.morphism_count() && !composite; ++a)
      for (MorphismId b = 0; b < d.morphism_count() && !composite; ++b)
        if (!d.is_identity(a) && !d.is_identity(b) && a != m && b != m && d.compose(a, b) == m) composite = true;
    if (!composite) out.push_back(m);
  }
  return out;
}

std::string net_values(const PKNet& net, ObjectId x, bool flats) {
  std::string s;
  for (std::size_t i = 0; i < net.phi[x].size(); ++i) s += (i ? "," : "") + pitch_name(net.phi[x][i], flats);
  return s;
}

}  // namespace

std::string progression_dot(const Progression& p, const std::vector<AnalysisStep>& steps, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph progression {\n  compound=true;\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < p.nets.size(); ++i) {
    const auto& net = p.nets[i];
    const auto& d = net.F.delta();
    out << "  subgraph cluster_" << i << " {\n    label=" << quoted(std::to_string(i + 1) + ": " + net.F.name()) << ";\n";
    for (ObjectId x = 0; x < d.object_count(); ++x)
      out << "    c" << i << '_' << x << " [label=" << quoted(d.object_name(x) + "\\n" + net_values(net, x, options.flats))
          << "];\n";
    for (auto m : generating_morphisms(d))
      out << "    c" << i << '_' << d.source(m) << " -> c" << i << '_' << d.target(m) << " [color=black, label="
          << quoted(element_label(net.F.group(), net.F.value(m), options.signed_labels)) << "];\n";
    out << "  }\n";
  }
  for (const auto& s : steps) {
    const auto& d = s.morphism.source.delta();
    for (ObjectId x = 0; x < d.object_count(); ++x)
      out << "  c" << s.from_index << '_' << x << " -> c" << s.to_index << '_' << x << " [color=violet, fontcolor=violet, label="
          << quoted(element_label(s.morphism.source.group(), s.morphism.components[x], options.signed_labels)) << "];\n";
    out << "  c" << s.from_index << "_0 -> c" << s.to_index << "_0 [color=red, fontcolor=red, ltail=cluster_" << s.from_index
        << ", lhead=cluster_" << s.to_index << ", label=" << quoted(morphism_label(s.morphism, options.signed_labels))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pknets
