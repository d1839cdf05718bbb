#include "causalgames/scenario.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace causalgames {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_scenario: return "invalid scenario";
    case Errc::unknown_measurement: return "unknown measurement";
    case Errc::not_a_history: return "not a history";
    case Errc::determinism_violation: return "determinism violation";
    case Errc::totality_violation: return "totality violation";
    case Errc::not_down_closed: return "not down-closed";
    case Errc::outcome_incomplete: return "outcome-incomplete";
    case Errc::strict_co_totality_violation: return "strict co-totality violation";
    case Errc::incompatible_family: return "incompatible family";
    case Errc::scenario_mismatch: return "scenario mismatch";
    case Errc::semiring_mismatch: return "semiring mismatch";
    case Errc::weight_sum_not_one: return "weight sum not one";
    case Errc::missing_measurement_in_playout: return "missing measurement in playout";
    case Errc::non_binary_outcome: return "non-binary outcome";
    case Errc::incompatible_model: return "incompatible model";
    case Errc::scenario_not_flat: return "scenario not flat";
    case Errc::enumeration_limit: return "enumeration limit exceeded";
    case Errc::parse_error: return "parse error";
  }
  return "error";
}

// ---------------------------------------------------------------------------
// MeasurementSet

MeasurementSet::MeasurementSet(std::vector<MeasurementIndex> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

MeasurementSet MeasurementSet::full(std::size_t n) {
  std::vector<MeasurementIndex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<MeasurementIndex>(i);
  MeasurementSet s;
  s.elems_ = std::move(v);
  return s;
}

bool MeasurementSet::contains(MeasurementIndex x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool MeasurementSet::subset_of(const MeasurementSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

MeasurementSet MeasurementSet::intersect(const MeasurementSet& other) const {
  MeasurementSet out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out.elems_));
  return out;
}

MeasurementSet MeasurementSet::unite(const MeasurementSet& other) const {
  MeasurementSet out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out.elems_));
  return out;
}

// ---------------------------------------------------------------------------
// Section

bool is_consistent(std::span<const Event> events) {
  std::unordered_map<MeasurementIndex, OutcomeIndex> seen;
  for (const Event& e : events) {
    auto [it, inserted] = seen.emplace(e.measurement, e.outcome);
    if (!inserted && it->second != e.outcome) return false;
  }
  return true;
}

Section Section::from_events(std::vector<Event> events) {
  auto s = try_from_events(std::move(events));
  if (!s) throw Error(Errc::invalid_scenario, "inconsistent event set (measurement repeated)");
  return *s;
}

std::optional<Section> Section::try_from_events(std::vector<Event> events) {
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i - 1].measurement == events[i].measurement) return std::nullopt;
  }
  Section s;
  s.events_ = std::move(events);
  return s;
}

bool Section::contains(const Event& e) const {
  auto o = outcome_of(e.measurement);
  return o && *o == e.outcome;
}

bool Section::measures(MeasurementIndex x) const { return outcome_of(x).has_value(); }

std::optional<OutcomeIndex> Section::outcome_of(MeasurementIndex x) const {
  auto it = std::lower_bound(events_.begin(), events_.end(), x,
                             [](const Event& e, MeasurementIndex m) { return e.measurement < m; });
  if (it == events_.end() || it->measurement != x) return std::nullopt;
  return it->outcome;
}

bool Section::subset_of(const Section& other) const {
  return std::includes(other.events_.begin(), other.events_.end(), events_.begin(), events_.end());
}

Section Section::with_event(const Event& e) const {
  Section out;
  out.events_.reserve(events_.size() + 1);
  auto it = std::lower_bound(events_.begin(), events_.end(), e);
  out.events_.assign(events_.begin(), it);
  out.events_.push_back(e);
  out.events_.insert(out.events_.end(), it, events_.end());
  return out;
}

Section Section::without_measurement(MeasurementIndex x) const {
  Section out;
  out.events_.reserve(events_.size());
  for (const Event& e : events_) {
    if (e.measurement != x) out.events_.push_back(e);
  }
  return out;
}

MeasurementSet Section::domain() const {
  std::vector<MeasurementIndex> v;
  v.reserve(events_.size());
  for (const Event& e : events_) v.push_back(e.measurement);
  return MeasurementSet(std::move(v));
}

std::size_t SectionHash::operator()(const Section& s) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Event& e : s.events()) {
    std::size_t k = (static_cast<std::size_t>(e.measurement) << 32) ^ e.outcome;
    h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Scenario

struct Scenario::Data {
  std::string name;
  std::vector<std::string> measurement_ids;
  std::vector<std::vector<std::string>> outcome_ids;
  std::unordered_map<std::string, MeasurementIndex> measurement_lookup;
  std::vector<EnablingEntry> entries;                      // declaration order, verbatim
  std::vector<std::vector<const EnablingEntry*>> by_target;
  std::vector<std::vector<bool>> exclusive;                // symmetric matrix
  bool any_exclusive = false;
  std::optional<std::vector<MeasurementSet>> cover;

  bool operator==(const Data& other) const {
    return name == other.name && measurement_ids == other.measurement_ids &&
           outcome_ids == other.outcome_ids && entries == other.entries &&
           exclusive == other.exclusive && cover == other.cover;
  }
};

Scenario Scenario::validate(const ScenarioDescription& raw) {
  auto data = std::make_shared<Data>();
  data->name = raw.name;

  for (const auto& m : raw.measurements) {
    if (data->measurement_lookup.count(m.id)) {
      throw Error(Errc::invalid_scenario, "duplicate measurement id '" + m.id + "'");
    }
    if (m.outcomes.empty()) {
      throw Error(Errc::invalid_scenario, "measurement '" + m.id + "' has an empty outcome list");
    }
    std::unordered_set<std::string> seen;
    for (const auto& o : m.outcomes) {
      if (!seen.insert(o).second) {
        throw Error(Errc::invalid_scenario,
                    "measurement '" + m.id + "' repeats outcome '" + o + "'");
      }
    }
    data->measurement_lookup.emplace(m.id, static_cast<MeasurementIndex>(data->measurement_ids.size()));
    data->measurement_ids.push_back(m.id);
    data->outcome_ids.push_back(m.outcomes);
  }

  const std::size_t n = data->measurement_ids.size();

  auto lookup_measurement = [&](const std::string& id) -> MeasurementIndex {
    auto it = data->measurement_lookup.find(id);
    if (it == data->measurement_lookup.end()) {
      throw Error(Errc::invalid_scenario, "unknown measurement id '" + id + "'");
    }
    return it->second;
  };
  auto lookup_outcome = [&](MeasurementIndex x, const std::string& id) -> OutcomeIndex {
    const auto& outs = data->outcome_ids[x];
    auto it = std::find(outs.begin(), outs.end(), id);
    if (it == outs.end()) {
      throw Error(Errc::invalid_scenario, "unknown outcome '" + id + "' for measurement '" +
                                              data->measurement_ids[x] + "'");
    }
    return static_cast<OutcomeIndex>(it - outs.begin());
  };

  for (const auto& [premise_raw, target_raw] : raw.enabling) {
    std::vector<Event> events;
    events.reserve(premise_raw.size());
    for (const auto& [mid, oid] : premise_raw) {
      MeasurementIndex x = lookup_measurement(mid);
      events.push_back(Event{x, lookup_outcome(x, oid)});
    }
    auto premise = Section::try_from_events(std::move(events));
    if (!premise) {
      throw Error(Errc::invalid_scenario,
                  "enabling premise for '" + target_raw + "' is inconsistent");
    }
    MeasurementIndex target = lookup_measurement(target_raw);
    if (premise->measures(target)) {
      throw Error(Errc::invalid_scenario,
                  "enabling premise for '" + target_raw + "' mentions its own target");
    }
    data->entries.push_back(EnablingEntry{std::move(*premise), target});
  }

  data->by_target.assign(n, {});
  for (const auto& entry : data->entries) data->by_target[entry.target].push_back(&entry);

  data->exclusive.assign(n, std::vector<bool>(n, false));
  for (const auto& group : raw.exclusive) {
    std::vector<MeasurementIndex> idx;
    idx.reserve(group.size());
    for (const auto& id : group) idx.push_back(lookup_measurement(id));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        if (idx[i] == idx[j]) {
          throw Error(Errc::invalid_scenario, "exclusive group repeats '" + group[i] + "'");
        }
        data->exclusive[idx[i]][idx[j]] = data->exclusive[idx[j]][idx[i]] = true;
        data->any_exclusive = true;
      }
    }
  }

  if (raw.cover) {
    std::vector<MeasurementSet> cover;
    std::vector<bool> covered(n, false);
    for (const auto& context : *raw.cover) {
      std::vector<MeasurementIndex> idx;
      idx.reserve(context.size());
      for (const auto& id : context) idx.push_back(lookup_measurement(id));
      MeasurementSet c(std::move(idx));
      for (MeasurementIndex x : c) covered[x] = true;
      cover.push_back(std::move(c));
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
      throw Error(Errc::invalid_scenario, "cover does not cover the measurement set");
    }
    data->cover = std::move(cover);
  }

  Scenario s;
  s.data_ = std::move(data);
  s.active_ = MeasurementSet::full(n);
  return s;
}

const std::string& Scenario::name() const { return data_->name; }

std::size_t Scenario::universe_size() const { return data_->measurement_ids.size(); }

bool Scenario::is_restricted() const { return active_.size() != universe_size(); }

MeasurementIndex Scenario::measurement_index(const std::string& id) const {
  auto it = data_->measurement_lookup.find(id);
  if (it == data_->measurement_lookup.end() || !active_.contains(it->second)) {
    throw Error(Errc::unknown_measurement, "'" + id + "' in scenario '" + data_->name + "'");
  }
  return it->second;
}

const std::string& Scenario::measurement_id(MeasurementIndex x) const {
  return data_->measurement_ids.at(x);
}

std::size_t Scenario::outcome_count(MeasurementIndex x) const {
  return data_->outcome_ids.at(x).size();
}

OutcomeIndex Scenario::outcome_index(MeasurementIndex x, const std::string& id) const {
  const auto& outs = data_->outcome_ids.at(x);
  auto it = std::find(outs.begin(), outs.end(), id);
  if (it == outs.end()) {
    throw Error(Errc::unknown_measurement,
                "outcome '" + id + "' of measurement '" + measurement_id(x) + "'");
  }
  return static_cast<OutcomeIndex>(it - outs.begin());
}

const std::string& Scenario::outcome_id(MeasurementIndex x, OutcomeIndex o) const {
  return data_->outcome_ids.at(x).at(o);
}

std::vector<EnablingEntry> Scenario::enabling_entries() const {
  std::vector<EnablingEntry> out;
  for (const auto& entry : data_->entries) {
    if (!active_.contains(entry.target)) continue;
    if (!entry.premise.domain().subset_of(active_)) continue;
    out.push_back(entry);
  }
  return out;
}

const std::vector<EnablingEntry>& Scenario::universe_enabling() const { return data_->entries; }

bool Scenario::mutually_exclusive(MeasurementIndex a, MeasurementIndex b) const {
  return data_->exclusive[a][b];
}

bool Scenario::has_exclusions() const { return data_->any_exclusive; }

std::vector<std::vector<MeasurementIndex>> Scenario::exclusive_groups() const {
  // Report maximal cliques of the exclusion relation restricted to the
  // active set; groups produced by encodings are disjoint, so a greedy
  // sweep recovers them exactly.
  std::vector<std::vector<MeasurementIndex>> groups;
  std::vector<bool> used(universe_size(), false);
  for (MeasurementIndex a : active_) {
    if (used[a]) continue;
    std::vector<MeasurementIndex> group{a};
    for (MeasurementIndex b : active_) {
      if (b <= a || used[b]) continue;
      bool fits = true;
      for (MeasurementIndex g : group) {
        if (!data_->exclusive[g][b]) { fits = false; break; }
      }
      if (fits) group.push_back(b);
    }
    if (group.size() > 1) {
      for (MeasurementIndex g : group) used[g] = true;
      groups.push_back(std::move(group));
    }
  }
  return groups;
}

const std::optional<std::vector<MeasurementSet>>& Scenario::cover() const {
  // Restriction drops the cover; the full scenario keeps it.
  static const std::optional<std::vector<MeasurementSet>> kNone;
  return is_restricted() ? kNone : data_->cover;
}

bool Scenario::accessible(const Section& s, MeasurementIndex x) const {
  if (!active_.contains(x)) return false;
  if (s.measures(x)) return false;
  if (data_->any_exclusive) {
    for (const Event& e : s) {
      if (data_->exclusive[e.measurement][x]) return false;
    }
  }
  for (const EnablingEntry* entry : data_->by_target[x]) {
    if (!entry->premise.domain().subset_of(active_)) continue;
    if (entry->premise.subset_of(s)) return true;
  }
  return false;
}

std::vector<MeasurementIndex> Scenario::accessible_from(const Section& s) const {
  std::vector<MeasurementIndex> out;
  for (MeasurementIndex x : active_) {
    if (accessible(s, x)) out.push_back(x);
  }
  return out;
}

Scenario Scenario::restrict(const MeasurementSet& U) const {
  if (!U.subset_of(active_)) {
    throw Error(Errc::unknown_measurement, "restriction set is not contained in the scenario");
  }
  Scenario out;
  out.data_ = data_;
  out.active_ = U;
  return out;
}

bool Scenario::is_flat() const {
  if (data_->any_exclusive) {
    for (MeasurementIndex a : active_) {
      for (MeasurementIndex b : active_) {
        if (a != b && data_->exclusive[a][b]) return false;
      }
    }
  }
  for (MeasurementIndex x : active_) {
    bool initially_enabled = false;
    for (const EnablingEntry* entry : data_->by_target[x]) {
      if (entry->premise.empty()) { initially_enabled = true; break; }
    }
    if (!initially_enabled) return false;
  }
  return true;
}

bool Scenario::operator==(const Scenario& other) const {
  return same_universe(other) && active_ == other.active_;
}

bool Scenario::same_universe(const Scenario& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return *data_ == *other.data_;
}

}  // namespace causalgames
