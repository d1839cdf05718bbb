#pragma once

#include <random>
#include <string>
#include <vector>

#include "causalgames/scenario.hpp"

namespace causalgames::testing {

/// Random causal scenario with at most `max_events` events in total
/// (sum of outcome-set sizes). Enabling entries are random consistent
/// premises; some measurements may be unreachable, which is a legal
/// shape.
inline Scenario random_causal_scenario(std::mt19937& rng, std::size_t max_events = 8) {
  ScenarioDescription raw;
  raw.name = "random";

  std::uniform_int_distribution<int> meas_count(1, 4);
  const int n = meas_count(rng);
  std::size_t events = 0;
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<int> outcome_count(2, 3);
    std::size_t k = static_cast<std::size_t>(outcome_count(rng));
    if (events + k > max_events) k = std::max<std::size_t>(1, max_events - events);
    if (k == 0) break;
    events += k;
    std::vector<std::string> outcomes;
    for (std::size_t o = 0; o < k; ++o) outcomes.push_back(std::to_string(o));
    raw.measurements.push_back({"m" + std::to_string(i), std::move(outcomes)});
    if (events >= max_events) break;
  }

  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick_meas(0, raw.measurements.size() - 1);
  for (std::size_t t = 0; t < raw.measurements.size(); ++t) {
    if (coin(rng)) raw.enabling.push_back({{}, raw.measurements[t].id});
    std::uniform_int_distribution<int> extra(0, 2);
    const int extras = extra(rng);
    for (int e = 0; e < extras; ++e) {
      std::vector<std::pair<std::string, std::string>> premise;
      std::vector<bool> used(raw.measurements.size(), false);
      used[t] = true;
      std::uniform_int_distribution<int> premise_size(1, 2);
      const int ps = premise_size(rng);
      for (int p = 0; p < ps; ++p) {
        std::size_t m = pick_meas(rng);
        if (used[m]) continue;
        used[m] = true;
        const auto& meas = raw.measurements[m];
        std::uniform_int_distribution<std::size_t> pick_out(0, meas.outcomes.size() - 1);
        premise.emplace_back(meas.id, meas.outcomes[pick_out(rng)]);
      }
      raw.enabling.push_back({std::move(premise), raw.measurements[t].id});
    }
  }
  // Guarantee at least one launching point so the scenario is not trivial.
  if (raw.enabling.empty() ||
      std::none_of(raw.enabling.begin(), raw.enabling.end(),
                   [](const auto& e) { return e.first.empty(); })) {
    raw.enabling.push_back({{}, raw.measurements[0].id});
  }
  return Scenario::validate(raw);
}

/// Random flat scenario (<= 4 measurements, <= 3 outcomes each) with a
/// random cover.
inline Scenario random_flat_scenario(std::mt19937& rng) {
  std::uniform_int_distribution<int> meas_count(1, 4);
  const int n = meas_count(rng);
  std::vector<std::pair<std::string, std::vector<std::string>>> measurements;
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<int> outcome_count(2, 3);
    const int k = outcome_count(rng);
    std::vector<std::string> outcomes;
    for (int o = 0; o < k; ++o) outcomes.push_back(std::to_string(o));
    measurements.emplace_back("m" + std::to_string(i), std::move(outcomes));
  }

  std::uniform_int_distribution<int> context_count(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::vector<std::string>> cover;
  std::vector<bool> covered(measurements.size(), false);
  const int contexts = context_count(rng);
  for (int c = 0; c < contexts; ++c) {
    std::vector<std::string> context;
    for (std::size_t m = 0; m < measurements.size(); ++m) {
      if (coin(rng)) {
        context.push_back(measurements[m].first);
        covered[m] = true;
      }
    }
    if (!context.empty()) cover.push_back(std::move(context));
  }
  for (std::size_t m = 0; m < measurements.size(); ++m) {
    if (!covered[m]) cover.push_back({measurements[m].first});
  }

  ScenarioDescription raw;
  raw.name = "random-flat";
  for (auto& [id, outcomes] : measurements) {
    raw.measurements.push_back({id, outcomes});
    raw.enabling.push_back({{}, id});
  }
  raw.cover = cover;
  return Scenario::validate(raw);
}

}  // namespace causalgames::testing
