#include "causalgames/strategies.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace causalgames {

namespace {

bool section_list_less(const std::vector<Section>& a, const std::vector<Section>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      SectionSizeLexLess{});
}

bool sorted_contains(const std::vector<Section>& sorted, const Section& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, SectionSizeLexLess{});
}

/// Maximal elements of a down-closed history set: no one-event extension
/// stays inside the set.
std::vector<Section> maximal_of(const Scenario& M, const std::vector<Section>& all) {
  std::vector<Section> out;
  for (const Section& h : all) {
    bool extendable = false;
    for (MeasurementIndex x : M.accessible_from(h)) {
      for (OutcomeIndex o = 0; o < M.outcome_count(x) && !extendable; ++o) {
        if (sorted_contains(all, h.with_event(Event{x, o}))) extendable = true;
      }
      if (extendable) break;
    }
    if (!extendable) out.push_back(h);
  }
  return out;
}

std::string describe(const Scenario& M, const Section& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const Event& e : s) {
    if (!first) os << ", ";
    first = false;
    os << "(" << M.measurement_id(e.measurement) << "," << M.outcome_id(e.measurement, e.outcome)
       << ")";
  }
  os << "}";
  return os.str();
}

using HistoryTree = std::set<Section, SectionSizeLexLess>;

/// Inserts every history contained in `u` and reports whether determinism
/// still holds afterwards. The insertion keeps the set down-closed; a
/// conflict means the branch that proposed `u` is impossible.
bool add_with_closure(const Scenario& M, HistoryTree& hists, const Section& u) {
  std::vector<Section> added;
  for (Section& s : histories_within(M, u)) {
    if (hists.insert(s).second) added.push_back(std::move(s));
  }
  for (const Section& h : added) {
    for (const Event& e : h) {
      Section w = h.without_measurement(e.measurement);
      if (!hists.count(w)) continue;
      for (OutcomeIndex o = 0; o < M.outcome_count(e.measurement); ++o) {
        if (o == e.outcome) continue;
        if (hists.count(w.with_event(Event{e.measurement, o}))) return false;
      }
    }
  }
  return true;
}

/// The canonically least position with an accessible measurement that has
/// no response yet.
std::optional<std::pair<Section, MeasurementIndex>> next_decision(const Scenario& M,
                                                                  const HistoryTree& hists) {
  for (const Section& s : hists) {
    for (MeasurementIndex x : M.accessible_from(s)) {
      bool answered = false;
      for (OutcomeIndex o = 0; o < M.outcome_count(x); ++o) {
        if (hists.count(s.with_event(Event{x, o}))) {
          answered = true;
          break;
        }
      }
      if (!answered) return std::make_pair(s, x);
    }
  }
  return std::nullopt;
}

struct Enumerator {
  const Scenario& M;
  std::size_t limit;
  bool throw_on_limit;
  std::vector<NatureStrategy>* out;  // may be null when only counting
  std::size_t count = 0;
  bool truncated = false;

  // Returns false once the limit is reached and enumeration should stop.
  bool dfs(HistoryTree& hists);
};

}  // namespace

NatureStrategy make_nature_strategy_unchecked(Scenario scen, std::vector<Section> all) {
  std::sort(all.begin(), all.end(), SectionSizeLexLess{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  NatureStrategy s;
  s.maximal_ = maximal_of(scen, all);
  s.all_ = std::move(all);
  s.scen_ = std::move(scen);
  return s;
}

ExperimenterStrategy make_experimenter_strategy_unchecked(Scenario scen, std::vector<Section> all,
                                                          std::vector<Section> terminal) {
  std::sort(all.begin(), all.end(), SectionSizeLexLess{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::sort(terminal.begin(), terminal.end(), SectionSizeLexLess{});
  terminal.erase(std::unique(terminal.begin(), terminal.end()), terminal.end());
  ExperimenterStrategy t;
  t.maximal_ = maximal_of(scen, all);
  t.all_ = std::move(all);
  t.terminal_ = std::move(terminal);
  t.scen_ = std::move(scen);
  return t;
}

bool Enumerator::dfs(HistoryTree& hists) {
  auto decision = next_decision(M, hists);
  if (!decision) {
    ++count;
    if (count > limit) {
      if (throw_on_limit) {
        throw Error(Errc::enumeration_limit,
                    "more than " + std::to_string(limit) + " strategies");
      }
      truncated = true;
      --count;
      return false;
    }
    if (out) {
      out->push_back(make_nature_strategy_unchecked(
          M, std::vector<Section>(hists.begin(), hists.end())));
    }
    return true;
  }
  const auto& [s, x] = *decision;
  for (OutcomeIndex o = 0; o < M.outcome_count(x); ++o) {
    HistoryTree branch = hists;
    if (!add_with_closure(M, branch, s.with_event(Event{x, o}))) continue;
    if (!dfs(branch)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// NatureStrategy

bool NatureStrategy::contains(const Section& s) const { return sorted_contains(all_, s); }

std::optional<OutcomeIndex> NatureStrategy::response(const Section& s, MeasurementIndex x) const {
  for (OutcomeIndex o = 0; o < scen_.outcome_count(x); ++o) {
    if (contains(s.with_event(Event{x, o}))) return o;
  }
  return std::nullopt;
}

NatureStrategy NatureStrategy::restrict(const MeasurementSet& U) const {
  Scenario restricted = scen_.restrict(U);
  std::vector<Section> kept;
  for (const Section& h : all_) {
    if (h.domain().subset_of(U)) kept.push_back(h);
  }
  return make_nature_strategy_unchecked(std::move(restricted), std::move(kept));
}

bool NatureStrategy::operator==(const NatureStrategy& other) const {
  return scen_ == other.scen_ && maximal_ == other.maximal_;
}

bool NatureStrategy::operator<(const NatureStrategy& other) const {
  if (domain() != other.domain()) return domain() < other.domain();
  return section_list_less(maximal_, other.maximal_);
}

// ---------------------------------------------------------------------------
// ExperimenterStrategy

bool ExperimenterStrategy::contains(const Section& s) const { return sorted_contains(all_, s); }

bool ExperimenterStrategy::allows(const Section& s, MeasurementIndex x) const {
  for (OutcomeIndex o = 0; o < scen_.outcome_count(x); ++o) {
    if (contains(s.with_event(Event{x, o}))) return true;
  }
  return false;
}

bool ExperimenterStrategy::operator==(const ExperimenterStrategy& other) const {
  return scen_ == other.scen_ && maximal_ == other.maximal_ && terminal_ == other.terminal_;
}

bool ExperimenterStrategy::operator<(const ExperimenterStrategy& other) const {
  if (scenario().measurements() != other.scenario().measurements()) {
    return scenario().measurements() < other.scenario().measurements();
  }
  if (maximal_ != other.maximal_) return section_list_less(maximal_, other.maximal_);
  return section_list_less(terminal_, other.terminal_);
}

// ---------------------------------------------------------------------------
// Operations

NatureStrategy validate_nature_strategy(const Scenario& M_U, const std::vector<Section>& maximal) {
  HistoryTree hists;
  hists.insert(Section{});
  for (const Section& m : maximal) {
    if (!is_history(M_U, m)) {
      throw Error(Errc::not_a_history, describe(M_U, m));
    }
    for (Section& s : histories_within(M_U, m)) hists.insert(std::move(s));
  }

  for (const Section& h : hists) {
    for (MeasurementIndex x : M_U.accessible_from(h)) {
      std::vector<OutcomeIndex> present;
      for (OutcomeIndex o = 0; o < M_U.outcome_count(x); ++o) {
        if (hists.count(h.with_event(Event{x, o}))) present.push_back(o);
      }
      if (present.size() > 1) {
        throw Error(Errc::determinism_violation,
                    "at " + describe(M_U, h) + " measurement '" + M_U.measurement_id(x) +
                        "' has responses '" + M_U.outcome_id(x, present[0]) + "' and '" +
                        M_U.outcome_id(x, present[1]) + "'");
      }
      if (present.empty()) {
        throw Error(Errc::totality_violation,
                    "at " + describe(M_U, h) + " measurement '" + M_U.measurement_id(x) +
                        "' has no response");
      }
    }
  }

  return make_nature_strategy_unchecked(M_U, std::vector<Section>(hists.begin(), hists.end()));
}

std::vector<NatureStrategy> enumerate_nature_strategies(const Scenario& M_U, std::size_t limit) {
  std::vector<NatureStrategy> out;
  Enumerator e{M_U, limit, /*throw_on_limit=*/true, &out};
  HistoryTree seed;
  seed.insert(Section{});
  e.dfs(seed);
  return out;
}

std::size_t count_nature_strategies(const Scenario& M_U, std::size_t limit) {
  Enumerator e{M_U, limit, /*throw_on_limit=*/true, nullptr};
  HistoryTree seed;
  seed.insert(Section{});
  e.dfs(seed);
  return e.count;
}

bool check_monotonicity(const NatureStrategy& strategy) {
  const Scenario& M = strategy.scenario();
  const auto& all = strategy.histories();
  for (const Section& s : all) {
    for (MeasurementIndex x : M.accessible_from(s)) {
      auto o = strategy.response(s, x);
      if (!o) return false;  // totality failure; cannot happen on validated input
      for (const Section& t : all) {
        if (t.size() <= s.size() || !s.subset_of(t)) continue;
        if (auto performed = t.outcome_of(x)) {
          if (*performed != *o) return false;
        } else if (M.accessible(t, x)) {
          if (strategy.response(t, x) != o) return false;
        }
      }
    }
  }
  return true;
}

GlueReport glue(const Scenario& M, const std::vector<NatureStrategy>& family,
                std::size_t completion_limit) {
  for (const auto& member : family) {
    if (!member.scenario().same_universe(M)) {
      throw Error(Errc::scenario_mismatch, "family member over a different scenario");
    }
    if (!member.domain().subset_of(M.measurements())) {
      throw Error(Errc::scenario_mismatch, "family member domain leaves the scenario");
    }
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      MeasurementSet overlap = family[i].domain().intersect(family[j].domain());
      if (!(family[i].restrict(overlap) == family[j].restrict(overlap))) {
        throw Error(Errc::incompatible_family,
                    "members " + std::to_string(i) + " and " + std::to_string(j) +
                        " disagree on their overlap");
      }
    }
  }

  MeasurementSet U;
  for (const auto& member : family) U = U.unite(member.domain());
  Scenario M_U = [&] {
    // family domains may each be narrower than M's active set
    return M.measurements() == U ? M : M.restrict(U);
  }();

  HistoryTree united;
  united.insert(Section{});
  for (const auto& member : family) {
    for (const Section& h : member.histories()) united.insert(h);
  }

  // Determinism of the union holds for every compatible family; scan anyway
  // so a violated precondition surfaces as an error, not a wrong report.
  for (const Section& h : united) {
    for (const Event& e : h) {
      Section w = h.without_measurement(e.measurement);
      if (!united.count(w)) continue;
      for (OutcomeIndex o = 0; o < M_U.outcome_count(e.measurement); ++o) {
        if (o != e.outcome && united.count(w.with_event(Event{e.measurement, o}))) {
          throw Error(Errc::incompatible_family, "union of the family is not deterministic");
        }
      }
    }
  }

  GlueReport report;
  report.union_total = !next_decision(M_U, united).has_value();

  Enumerator e{M_U, completion_limit, /*throw_on_limit=*/false, &report.completions};
  HistoryTree seed = united;
  e.dfs(seed);
  report.truncated = e.truncated;

  if (report.completions.empty()) {
    report.outcome = GlueReport::Outcome::not_applicable;
  } else if (report.completions.size() == 1 && !report.truncated) {
    report.outcome = GlueReport::Outcome::unique;
  } else {
    report.outcome = GlueReport::Outcome::multiple_completions;
  }
  return report;
}

ExperimenterStrategy validate_experimenter_strategy(const Scenario& M,
                                                    const std::vector<Section>& histories,
                                                    const std::vector<Section>& terminal,
                                                    bool strict) {
  if (histories.empty()) {
    throw Error(Errc::invalid_scenario, "experimenter strategy must contain the empty history");
  }
  std::vector<Section> all = histories;
  std::sort(all.begin(), all.end(), SectionSizeLexLess{});
  all.erase(std::unique(all.begin(), all.end()), all.end());

  for (const Section& h : all) {
    if (!is_history(M, h)) throw Error(Errc::not_a_history, describe(M, h));
  }

  // Down-closure: removing one event, when the result is still a history,
  // must stay inside. Together with the one-step chain property of the
  // history poset this implies closure under all history subsets.
  for (const Section& h : all) {
    for (const Event& e : h) {
      Section w = h.without_measurement(e.measurement);
      if (is_history(M, w) && !sorted_contains(all, w)) {
        throw Error(Errc::not_down_closed,
                    describe(M, w) + " missing below " + describe(M, h));
      }
    }
  }

  for (const Section& h : all) {
    for (MeasurementIndex x : M.accessible_from(h)) {
      bool any = false, missing = false;
      OutcomeIndex missing_o = 0;
      for (OutcomeIndex o = 0; o < M.outcome_count(x); ++o) {
        if (sorted_contains(all, h.with_event(Event{x, o}))) {
          any = true;
        } else {
          missing = true;
          missing_o = o;
        }
      }
      if (any && missing) {
        throw Error(Errc::outcome_incomplete,
                    "at " + describe(M, h) + " measurement '" + M.measurement_id(x) +
                        "' lacks outcome '" + M.outcome_id(x, missing_o) + "'");
      }
    }
  }

  ExperimenterStrategy t = make_experimenter_strategy_unchecked(M, all, terminal);

  for (const Section& end : t.terminal()) {
    if (!sorted_contains(t.maximal_elements(), end)) {
      throw Error(Errc::invalid_scenario,
                  "terminal history " + describe(M, end) + " is not maximal in the strategy");
    }
  }

  if (strict) {
    for (const Section& h : t.histories()) {
      if (is_maximal(M, h)) continue;
      bool continues = false;
      for (MeasurementIndex x : M.accessible_from(h)) {
        if (t.allows(h, x)) {
          continues = true;
          break;
        }
      }
      if (!continues) {
        throw Error(Errc::strict_co_totality_violation,
                    describe(M, h) + " stops although a measurement is accessible");
      }
    }
    for (const Section& end : t.terminal()) {
      if (!is_maximal(M, end)) {
        throw Error(Errc::strict_co_totality_violation,
                    "terminal history " + describe(M, end) + " is not maximal in the scenario");
      }
    }
  }

  return t;
}

ExperimenterStrategy experimenter_strategy_from_maximal(const Scenario& M,
                                                        const std::vector<Section>& maximal,
                                                        std::vector<Section> terminal,
                                                        bool strict) {
  HistoryTree closed;
  closed.insert(Section{});
  for (const Section& m : maximal) {
    if (!is_history(M, m)) throw Error(Errc::not_a_history, describe(M, m));
    for (Section& s : histories_within(M, m)) closed.insert(std::move(s));
  }
  std::vector<Section> all(closed.begin(), closed.end());
  if (terminal.empty()) {
    terminal = maximal_of(M, all);
  }
  return validate_experimenter_strategy(M, all, terminal, strict);
}

HistorySet play(const NatureStrategy& nature, const ExperimenterStrategy& experimenter) {
  const Scenario& M = experimenter.scenario();
  if (!nature.scenario().same_universe(M)) {
    throw Error(Errc::scenario_mismatch, "strategies over different scenarios");
  }
  if (!nature.domain().subset_of(M.measurements())) {
    throw Error(Errc::scenario_mismatch, "nature domain leaves the experimenter's scenario");
  }

  std::vector<Section> finals;
  std::set<Section, SectionSizeLexLess> visited;
  std::vector<Section> stack{Section{}};
  visited.insert(Section{});

  while (!stack.empty()) {
    Section s = std::move(stack.back());
    stack.pop_back();

    bool moved = false;
    for (MeasurementIndex x : M.accessible_from(s)) {
      if (!experimenter.allows(s, x)) continue;
      if (!nature.domain().contains(x)) {
        throw Error(Errc::scenario_mismatch,
                    "experimenter plays '" + M.measurement_id(x) +
                        "' outside nature's domain");
      }
      auto o = nature.response(s, x);
      if (!o) continue;  // position not reachable under nature; cannot happen from the root
      moved = true;
      Section t = s.with_event(Event{x, *o});
      if (visited.insert(t).second) stack.push_back(std::move(t));
    }
    if (!moved) finals.push_back(std::move(s));
  }

  return HistorySet(std::move(finals));
}

}  // namespace causalgames
