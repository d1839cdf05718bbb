#include "causalgames/histories.hpp"

#include <algorithm>
#include <unordered_set>

namespace causalgames {

HistorySet::HistorySet(std::vector<Section> sections) : sections_(std::move(sections)) {
  std::sort(sections_.begin(), sections_.end(), SectionSizeLexLess{});
  sections_.erase(std::unique(sections_.begin(), sections_.end()), sections_.end());
}

bool HistorySet::contains(const Section& s) const {
  return std::binary_search(sections_.begin(), sections_.end(), s, SectionSizeLexLess{});
}

HistorySet enumerate_histories(const Scenario& M) {
  std::unordered_set<Section, SectionHash> seen;
  std::vector<Section> frontier{Section{}};
  seen.insert(Section{});

  while (!frontier.empty()) {
    std::vector<Section> next;
    for (const Section& s : frontier) {
      for (MeasurementIndex x : M.accessible_from(s)) {
        for (OutcomeIndex o = 0; o < M.outcome_count(x); ++o) {
          Section t = s.with_event(Event{x, o});
          if (seen.insert(t).second) next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }

  return HistorySet(std::vector<Section>(seen.begin(), seen.end()));
}

std::vector<Section> histories_within(const Scenario& M, const Section& within) {
  std::unordered_set<Section, SectionHash> seen;
  std::vector<Section> frontier{Section{}};
  seen.insert(Section{});

  while (!frontier.empty()) {
    std::vector<Section> next;
    for (const Section& s : frontier) {
      for (const Event& e : within) {
        if (s.measures(e.measurement)) continue;
        if (!M.accessible(s, e.measurement)) continue;
        Section t = s.with_event(e);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Section> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), SectionSizeLexLess{});
  return out;
}

bool is_history(const Scenario& M, const Section& s) {
  for (const Event& e : s) {
    if (!M.measurements().contains(e.measurement)) return false;
    if (e.outcome >= M.outcome_count(e.measurement)) return false;
  }
  Section reached;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Event& e : s) {
      if (reached.measures(e.measurement)) continue;
      if (M.accessible(reached, e.measurement)) {
        reached = reached.with_event(e);
        grew = true;
      }
    }
  }
  return reached == s;
}

bool is_maximal(const Scenario& M, const Section& s) {
  for (MeasurementIndex x : M.measurements()) {
    if (M.accessible(s, x)) return false;
  }
  return true;
}

HistorySet maximal_histories(const Scenario& M) {
  std::vector<Section> out;
  for (const Section& s : enumerate_histories(M)) {
    if (is_maximal(M, s)) out.push_back(s);
  }
  return HistorySet(std::move(out));
}

}  // namespace causalgames
