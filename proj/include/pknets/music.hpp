#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pknets/functor_groupoid.hpp"
#include "pknets/pknet.hpp"

namespace pknets {

/// ASCII spelling of a pitch class: sharps by default ("C#"), flats on
/// request ("Db"). 0 is C.
std::string pitch_name(std::uint32_t pc, bool flats = false);

/// Integers 0..11, or a letter A..G followed by any number of #, b, ♯, ♭.
std::optional<std::uint32_t> parse_pitch(std::string_view text);

/// Consecutive nets over one shape, T/I and the pitch-class action. The
/// class of each chord is its net's F.
struct Progression {
  std::vector<PKNet> nets;

  /// Chords [first, last).
  Progression slice(std::size_t first, std::size_t last) const;
};

enum class Preference { transposition_first, all };

struct AnalysisStep {
  std::size_t from_index = 0;
  std::size_t to_index = 0;
  GDeltaMorphism morphism;
  /// Every transport between the two nets, in hom-set order.
  std::vector<GDeltaMorphism> alternatives;
};

/// One step per consecutive pair. The chosen morphism is the transport whose
/// label is a transposition when `transposition_first` (the first such in
/// hom-set order, or the first transport if none is a transposition), else
/// the first transport. Throws AnalysisError when a pair has no transport.
std::vector<AnalysisStep> analyze_progression(const Progression& p, Preference preference = Preference::transposition_first,
                                              const Limits& limits = {});

/// Plain-text table of steps and per-object components.
std::string component_report(const std::vector<AnalysisStep>& steps, bool signed_labels = true);

/// Names of the classes admitting a natural phi with φ(X) = pitches[X] over
/// singleton R.
std::vector<std::string> match_classes(const std::vector<ChordClass>& classes, const std::vector<std::uint32_t>& pitches);

struct BergFixture {
  /// U, V, U', W over Γ.
  std::vector<ChordClass> classes;
  /// The nine chords; 1–5 over {U, V} and 6–9 over {U', W}.
  Progression progression;
};

BergFixture berg_fixture();

struct WebernFixture {
  ChordClass chord_class;
  std::vector<PKNet> nets;
};

WebernFixture webern_fixture();

/// U(f↦T4, g↦T7) and V(f↦T2, g↦T5) over Γ.
std::vector<ChordClass> triad_classes();

/// Major (T4, T7) and minor (T3, T7) triads over Γ.
std::vector<ChordClass> hook_classes();

/// A singleton-R pitch-class net over `f` with φ(X) = pitches[X].
PKNet pitch_net(const ChordClass& f, const std::vector<std::uint32_t>& pitches);

struct DotOptions {
  bool flats = false;
  bool signed_labels = true;
};

/// Graphviz rendering: one cluster per chord with black arrows for the
/// generating morphisms labelled by F, violet component arrows between
/// consecutive chords, and red step labels.
std::string progression_dot(const Progression& p, const std::vector<AnalysisStep>& steps, const DotOptions& options = {});

}  // namespace pknets
