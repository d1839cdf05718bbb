#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "causalgames/histories.hpp"
#include "causalgames/scenario.hpp"

namespace causalgames {

/// Nature's plan: a down-closed set of histories over some restriction
/// M_U which, at every reachable position, fixes exactly one outcome for
/// every accessible measurement. Stored as canonical maximal elements plus
/// the materialised down-closure.
class NatureStrategy {
 public:
  NatureStrategy() = default;

  const Scenario& scenario() const { return scen_; }
  const MeasurementSet& domain() const { return scen_.measurements(); }
  const std::vector<Section>& histories() const { return all_; }
  const std::vector<Section>& maximal_elements() const { return maximal_; }

  bool contains(const Section& s) const;

  /// The unique o with s + (x,o) in the strategy, when s belongs to the
  /// strategy and x is accessible from s.
  std::optional<OutcomeIndex> response(const Section& s, MeasurementIndex x) const;

  /// The presheaf restriction: the intersection with the histories of M_U.
  NatureStrategy restrict(const MeasurementSet& U) const;

  bool operator==(const NatureStrategy& other) const;
  bool operator<(const NatureStrategy& other) const;

 private:
  friend NatureStrategy make_nature_strategy_unchecked(Scenario, std::vector<Section>);

  Scenario scen_;
  std::vector<Section> maximal_;
  std::vector<Section> all_;
};

/// The Experimenter's plan: a down-closed, outcome-complete set of
/// histories. `terminal` designates the maximal elements treated as ends
/// of play; the strict validator additionally demands the literal
/// co-totality condition (play continues until no measurement is
/// accessible at all).
class ExperimenterStrategy {
 public:
  ExperimenterStrategy() = default;

  const Scenario& scenario() const { return scen_; }
  const std::vector<Section>& histories() const { return all_; }
  const std::vector<Section>& maximal_elements() const { return maximal_; }
  const std::vector<Section>& terminal() const { return terminal_; }

  bool contains(const Section& s) const;

  /// The strategy permits measuring x at position s.
  bool allows(const Section& s, MeasurementIndex x) const;

  bool operator==(const ExperimenterStrategy& other) const;
  bool operator<(const ExperimenterStrategy& other) const;

 private:
  friend ExperimenterStrategy make_experimenter_strategy_unchecked(Scenario, std::vector<Section>,
                                                                   std::vector<Section>);

  Scenario scen_;
  std::vector<Section> all_;
  std::vector<Section> maximal_;
  std::vector<Section> terminal_;
};

struct GlueReport {
  enum class Outcome { unique, multiple_completions, not_applicable };

  Outcome outcome = Outcome::not_applicable;
  /// All total strategies extending the union of the family, in canonical
  /// enumeration order. Compatible families never produce a determinism
  /// conflict, so completions always extend the union verbatim.
  std::vector<NatureStrategy> completions;
  /// Whether the union itself was already total (then it is the unique
  /// gluing).
  bool union_total = false;
  bool truncated = false;
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Builds the down-closure of the given sections, then checks determinism
/// and totality. Errors: not_a_history, determinism_violation (position,
/// measurement and both outcomes reported), totality_violation.
NatureStrategy validate_nature_strategy(const Scenario& M_U, const std::vector<Section>& maximal);

/// All strategies over M_U, in canonical depth-first order (decision
/// points visited in (size, lexicographic) order, outcomes in declaration
/// order). Throws Errc::enumeration_limit when more than `limit`
/// strategies exist.
std::vector<NatureStrategy> enumerate_nature_strategies(const Scenario& M_U,
                                                        std::size_t limit = kNoLimit);

/// Number of strategies without materialising them (still bounded by
/// `limit`).
std::size_t count_nature_strategies(const Scenario& M_U, std::size_t limit = kNoLimit);

/// Test oracle: outcomes under a valid strategy are determined at the
/// minimal positions where a measurement becomes available. Never false
/// on validated input.
bool check_monotonicity(const NatureStrategy& strategy);

/// Glues a compatible family of strategies over restrictions of M, the
/// cover being the family's domains. Throws Errc::incompatible_family
/// (with the witnessing pair) when two members disagree on an overlap.
/// The outcome is classified by the number of total completions of the
/// union: one (unique), several (multiple_completions), none
/// (not_applicable; cannot arise for compatible families over well-formed
/// scenarios but is reported honestly rather than assumed away).
GlueReport glue(const Scenario& M, const std::vector<NatureStrategy>& family,
                std::size_t completion_limit = 1024);

/// Validates an explicitly given history set. Checks membership,
/// down-closure and outcome-completeness; `strict` additionally demands
/// co-totality in the literal sense (every member that is not maximal in
/// the full history poset has a continuation) and terminal elements that
/// are maximal in the full history poset.
ExperimenterStrategy validate_experimenter_strategy(const Scenario& M,
                                                    const std::vector<Section>& histories,
                                                    const std::vector<Section>& terminal,
                                                    bool strict = false);

/// Convenience: down-close the given maximal histories, default the
/// terminal set to the computed maximal elements, validate.
ExperimenterStrategy experimenter_strategy_from_maximal(const Scenario& M,
                                                        const std::vector<Section>& maximal,
                                                        std::vector<Section> terminal = {},
                                                        bool strict = false);

/// Plays Nature against the Experimenter: the maximal elements of the
/// intersection of the two history sets. Nature may live over a
/// restriction M_U of the Experimenter's scenario; the walk must then stay
/// inside U (Errc::scenario_mismatch otherwise).
HistorySet play(const NatureStrategy& nature, const ExperimenterStrategy& experimenter);

}  // namespace causalgames
