#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "causalgames/errors.hpp"

namespace causalgames {

/// Measurements and outcomes are referred to by their declaration index.
/// Symbolic ids live in the owning scenario and fix the canonical order.
using MeasurementIndex = std::uint32_t;
using OutcomeIndex = std::uint32_t;

/// One measurement performed with one observed outcome.
struct Event {
  MeasurementIndex measurement{};
  OutcomeIndex outcome{};

  auto operator<=>(const Event&) const = default;
};

/// A sorted set of measurement indices. Used for strategy domains, covers
/// and restriction arguments.
class MeasurementSet {
 public:
  MeasurementSet() = default;
  explicit MeasurementSet(std::vector<MeasurementIndex> elems);

  static MeasurementSet full(std::size_t n);

  bool contains(MeasurementIndex x) const;
  bool subset_of(const MeasurementSet& other) const;
  MeasurementSet intersect(const MeasurementSet& other) const;
  MeasurementSet unite(const MeasurementSet& other) const;

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<MeasurementIndex>& values() const { return elems_; }

  auto operator<=>(const MeasurementSet&) const = default;

 private:
  std::vector<MeasurementIndex> elems_;  // strictly increasing
};

/// A consistent set of events: at most one outcome per measurement.
/// Events are kept sorted by measurement index, so equal sections compare
/// equal and section lists have a canonical order.
class Section {
 public:
  Section() = default;

  /// Throws Errc::invalid_scenario if two events share a measurement.
  static Section from_events(std::vector<Event> events);

  /// Returns nothing instead of throwing when the events are inconsistent.
  static std::optional<Section> try_from_events(std::vector<Event> events);

  bool contains(const Event& e) const;
  bool measures(MeasurementIndex x) const;
  std::optional<OutcomeIndex> outcome_of(MeasurementIndex x) const;
  bool subset_of(const Section& other) const;

  Section with_event(const Event& e) const;
  Section without_measurement(MeasurementIndex x) const;

  MeasurementSet domain() const;

  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  auto begin() const { return events_.begin(); }
  auto end() const { return events_.end(); }
  const std::vector<Event>& events() const { return events_; }

  auto operator<=>(const Section&) const = default;

 private:
  std::vector<Event> events_;  // sorted by measurement index
};

/// true iff no measurement appears with two distinct outcomes.
bool is_consistent(std::span<const Event> events);

/// Canonical order for history sets: by size, then lexicographic.
struct SectionSizeLexLess {
  bool operator()(const Section& a, const Section& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct SectionHash {
  std::size_t operator()(const Section& s) const;
};

/// A single causal constraint: after the events of `premise`, `target`
/// may be performed.
struct EnablingEntry {
  Section premise;
  MeasurementIndex target{};

  auto operator<=>(const EnablingEntry&) const = default;
};

/// Raw description consumed by Scenario::validate. Fill in declaration
/// order; validation fixes all canonical orderings from it.
struct ScenarioDescription {
  struct Measurement {
    std::string id;
    std::vector<std::string> outcomes;
  };

  std::string name;
  std::vector<Measurement> measurements;
  /// Premises given as (measurement id, outcome id) pairs.
  std::vector<std::pair<std::vector<std::pair<std::string, std::string>>, std::string>> enabling;
  std::optional<std::vector<std::vector<std::string>>> cover;
  /// Optional groups of pairwise mutually exclusive measurements (at most
  /// one measurement per group can occur in a history). Used by encodings
  /// of site-based scenarios where the settings of one site are
  /// alternatives of a single apparatus.
  std::vector<std::vector<std::string>> exclusive;
};

/// A validated causal measurement scenario, possibly restricted to a
/// subset of its measurement universe. Immutable after validation; all
/// operations are pure, so sharing across threads is safe.
///
/// A restriction keeps the full declaration tables and narrows the active
/// set; enabling entries are filtered on the fly by the rule
/// "dom(premise) and target inside the active set".
class Scenario {
 public:
  Scenario() = default;

  /// Validates a raw description. Errors: duplicate measurement id, empty
  /// outcome list, inconsistent or dangling enabling premise, target
  /// occurring in its own premise, cover not covering the measurement set.
  static Scenario validate(const ScenarioDescription& raw);

  const std::string& name() const;

  /// Number of declared measurements (the universe, ignoring restriction).
  std::size_t universe_size() const;

  /// The active measurement set (equals the universe unless restricted).
  const MeasurementSet& measurements() const { return active_; }
  bool is_restricted() const;

  MeasurementIndex measurement_index(const std::string& id) const;
  const std::string& measurement_id(MeasurementIndex x) const;
  std::size_t outcome_count(MeasurementIndex x) const;
  OutcomeIndex outcome_index(MeasurementIndex x, const std::string& id) const;
  const std::string& outcome_id(MeasurementIndex x, OutcomeIndex o) const;

  /// Enabling entries of the restricted scenario, verbatim, declaration
  /// order. Entries whose premise or target leave the active set are
  /// dropped, which is exactly the restriction rule for enabling.
  std::vector<EnablingEntry> enabling_entries() const;

  /// Entries of the *unrestricted* scenario (used for serialisation of a
  /// full scenario).
  const std::vector<EnablingEntry>& universe_enabling() const;

  bool mutually_exclusive(MeasurementIndex a, MeasurementIndex b) const;
  bool has_exclusions() const;
  std::vector<std::vector<MeasurementIndex>> exclusive_groups() const;

  const std::optional<std::vector<MeasurementSet>>& cover() const;

  /// x is accessible from s: x is active, unperformed, not excluded by an
  /// event already in s, and some enabling premise inside the active set
  /// is contained in s.
  bool accessible(const Section& s, MeasurementIndex x) const;

  /// Measurements accessible from s, ascending.
  std::vector<MeasurementIndex> accessible_from(const Section& s) const;

  /// Restriction M_U. U must be contained in the active set. The cover is
  /// dropped. Restriction is functorial by construction.
  Scenario restrict(const MeasurementSet& U) const;

  /// Trivial enabling: every active measurement is enabled by the empty
  /// section and there are no exclusions.
  bool is_flat() const;

  /// Same declaration tables and same active set.
  bool operator==(const Scenario& other) const;
  bool same_universe(const Scenario& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  MeasurementSet active_;
};

}  // namespace causalgames
