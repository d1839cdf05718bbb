#pragma once

#include <algorithm>
#include <vector>

#include "causalgames/histories.hpp"
#include "causalgames/scenario.hpp"

namespace causalgames::testing {

/// Independent history oracle: s is a history iff some permutation of its
/// events is an admissible ordering. Exponential, for cross-checks only.
inline bool history_by_permutations(const Scenario& M, const Section& s) {
  std::vector<Event> events(s.begin(), s.end());
  std::sort(events.begin(), events.end());
  do {
    Section prefix;
    bool ok = true;
    for (const Event& e : events) {
      if (!M.accessible(prefix, e.measurement)) {
        ok = false;
        break;
      }
      prefix = prefix.with_event(e);
    }
    if (ok) return true;
  } while (std::next_permutation(events.begin(), events.end()));
  return false;
}

/// Independent enumeration oracle: every consistent event subset, filtered
/// by the permutation test.
inline std::vector<Section> histories_by_brute_force(const Scenario& M) {
  std::vector<Event> universe;
  for (MeasurementIndex x : M.measurements()) {
    for (OutcomeIndex o = 0; o < M.outcome_count(x); ++o) universe.push_back(Event{x, o});
  }
  std::vector<Section> out;
  const std::size_t n = universe.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Event> chosen;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t(1) << k)) chosen.push_back(universe[k]);
    }
    auto section = Section::try_from_events(std::move(chosen));
    if (!section) continue;
    if (history_by_permutations(M, *section)) out.push_back(std::move(*section));
  }
  std::sort(out.begin(), out.end(), SectionSizeLexLess{});
  return out;
}

}  // namespace causalgames::testing
