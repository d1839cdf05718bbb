#pragma once

#include <map>
#include <vector>

#include "causalgames/lp.hpp"
#include "causalgames/models.hpp"
#include "causalgames/scenario.hpp"

namespace causalgames::testing {

/// Assignment-based reference for flat scenarios: contexts carry outcome
/// tables over full context assignments, global objects are full
/// assignments over all measurements, and classicality is feasibility of
/// the assignment incidence system. No strategy machinery involved beyond
/// the boundary conversion done by the caller.
struct FlatReferenceModel {
  Scenario scenario;  // flat, with cover
  std::vector<std::map<Section, Rational>> tables;  // one per context
};

inline std::vector<Section> all_assignments(const Scenario& M, const MeasurementSet& U) {
  std::vector<Section> out{Section{}};
  for (MeasurementIndex x : U) {
    std::vector<Section> grown;
    for (const Section& partial : out) {
      for (OutcomeIndex o = 0; o < M.outcome_count(x); ++o) {
        grown.push_back(partial.with_event(Event{x, o}));
      }
    }
    out = std::move(grown);
  }
  return out;
}

inline RationalLP reference_incidence(const FlatReferenceModel& model, bool as_inequalities) {
  const Scenario& M = model.scenario;
  const auto& cover = *M.cover();
  std::vector<Section> globals = all_assignments(M, M.measurements());

  RationalLP lp;
  lp.num_vars = globals.size();
  auto& rows = as_inequalities ? lp.le_rows : lp.eq_rows;
  auto& rhs = as_inequalities ? lp.le_rhs : lp.eq_rhs;

  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (const Section& local : all_assignments(M, cover[i])) {
      std::vector<Rational> row(lp.num_vars, Rational(0));
      for (std::size_t g = 0; g < globals.size(); ++g) {
        if (local.subset_of(globals[g])) row[g] = 1;
      }
      rows.push_back(std::move(row));
      auto it = model.tables[i].find(local);
      rhs.push_back(it == model.tables[i].end() ? Rational(0) : it->second);
    }
  }
  if (!as_inequalities) {
    lp.eq_rows.emplace_back(lp.num_vars, Rational(1));
    lp.eq_rhs.emplace_back(1);
  }
  return lp;
}

inline bool reference_noncontextual(const FlatReferenceModel& model) {
  RationalLP lp = reference_incidence(model, /*as_inequalities=*/false);
  return solve(lp).status == LPStatus::optimal;
}

inline Rational reference_noncontextual_fraction(const FlatReferenceModel& model) {
  RationalLP lp = reference_incidence(model, /*as_inequalities=*/true);
  lp.objective.assign(lp.num_vars, Rational(1));
  LPResult res = solve(lp);
  return res.objective_value;
}

}  // namespace causalgames::testing
