#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "causalgames/scenario.hpp"

namespace causalgames::testing {

/// One initially enabled binary measurement.
inline Scenario s1_scenario() {
  ScenarioDescription raw;
  raw.name = "s1";
  raw.measurements.push_back({"x", {"0", "1"}});
  raw.enabling.push_back({{}, "x"});
  return Scenario::validate(raw);
}

/// Three binary measurements; z opens up only after x and y both answer 0.
inline Scenario s2_scenario() {
  ScenarioDescription raw;
  raw.name = "s2";
  for (const char* id : {"x", "y", "z"}) raw.measurements.push_back({id, {"0", "1"}});
  raw.enabling.push_back({{}, "x"});
  raw.enabling.push_back({{}, "y"});
  raw.enabling.push_back({{{"x", "0"}, {"y", "0"}}, "z"});
  return Scenario::validate(raw);
}

inline Event ev(const Scenario& M, const std::string& m, const std::string& o) {
  MeasurementIndex x = M.measurement_index(m);
  return Event{x, M.outcome_index(x, o)};
}

inline Section sec(const Scenario& M,
                   std::initializer_list<std::pair<const char*, const char*>> events) {
  std::vector<Event> out;
  for (const auto& [m, o] : events) out.push_back(ev(M, m, o));
  return Section::from_events(std::move(out));
}

inline MeasurementSet mset(const Scenario& M, std::initializer_list<const char*> ids) {
  std::vector<MeasurementIndex> idx;
  for (const char* id : ids) idx.push_back(M.measurement_index(id));
  return MeasurementSet(std::move(idx));
}

}  // namespace causalgames::testing
