#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pknets/category.hpp"
#include "pknets/functor_groupoid.hpp"

namespace pknets {

/// R: Δ → Sets with finite labelled sets.
struct SetValuedDiagram {
  FinCategory delta;
  /// elements[X] names the members of R(X).
  std::vector<std::vector<std::string>> elements;
  /// maps[m][r] is the index of R(m)(r) in R(target(m)).
  std::vector<std::vector<std::uint32_t>> maps;
};

/// Nonempty sets, total maps, identities and composites preserved.
CheckResult check_diagram(const SetValuedDiagram& r);

/// Every R(X) a one-point set; the usual chord diagram.
std::shared_ptr<const SetValuedDiagram> singleton_diagram(const FinCategory& delta);

/// Throws StructureError unless check_diagram passes.
std::shared_ptr<const SetValuedDiagram> make_diagram(SetValuedDiagram r);

struct PKNet {
  std::shared_ptr<const SetValuedDiagram> R;
  GSet S;
  ChordClass F;
  /// phi[X][r] is the point of S that element r of R(X) is sent to.
  std::vector<std::vector<std::uint32_t>> phi;

  friend bool operator==(const PKNet& a, const PKNet& b) {
    return a.F == b.F && a.phi == b.phi && a.S == b.S;
  }
};

/// A net over a singleton diagram with phi(X) = points[X].
PKNet singleton_net(const GSet& s, const ChordClass& f, std::vector<std::uint32_t> points);

/// Throws InputError when R, S, F and phi do not fit together (shape,
/// group, sizes, ranges). Otherwise reports the first failing square.
CheckResult check_pknet(const PKNet& net);
/// True iff phi is natural; structural mismatches still throw.
bool validate_pknet(const PKNet& net);

/// N_F: every natural phi: R → SF, by backtracking with the squares checked
/// as soon as both ends are assigned. Throws ResourceError when the search
/// visits more than limits.max_search_nodes nodes.
std::vector<PKNet> enumerate_NF(const std::shared_ptr<const SetValuedDiagram>& r, const GSet& s, const ChordClass& f,
                                const Limits& limits = {});

/// P_{R,S}(η): phi ↦ Sη∘phi. Throws InputError unless net.F is the source
/// of η.
PKNet act(const GDeltaMorphism& eta, const PKNet& net);

/// Every η ∈ Hom(a.F, b.F) with act(η, a) = b, in hom-set order.
std::vector<GDeltaMorphism> solve_transport(const PKNet& a, const PKNet& b, const Limits& limits = {});

using ComposeFn = std::function<GDeltaMorphism(const GDeltaMorphism&, const GDeltaMorphism&)>;

/// Identities act trivially and act(η2∘η1) = act(η2)∘act(η1) on every net
/// of every N_F, for all composable pairs between `classes`. `composer`
/// defaults to pknets::compose.
CheckResult check_prs_functoriality(const std::vector<ChordClass>& classes,
                                    const std::shared_ptr<const SetValuedDiagram>& r, const GSet& s,
                                    const ComposeFn& composer = {}, const Limits& limits = {});

/// P_{R,S} restricted to a materialized groupoid: one N_F per object and,
/// per morphism, the induced map between them as net indices.
struct PRSFunctor {
  std::vector<std::vector<PKNet>> sets;
  std::vector<std::vector<std::uint32_t>> maps;
};

PRSFunctor prs_functor(const FunctorGroupoid& g, const std::shared_ptr<const SetValuedDiagram>& r, const GSet& s,
                       const Limits& limits = {});

}  // namespace pknets
