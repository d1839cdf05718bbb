#include "causalgames/models.hpp"

#include <map>
#include <stdexcept>

namespace causalgames {

namespace {

/// Columns are global strategies deduplicated by their restriction
/// profile; rows constrain, per context, the total column weight mapping
/// onto each context-local strategy.
struct IncidenceSystem {
  std::vector<NatureStrategy> columns;                 // class representatives
  std::vector<std::vector<NatureStrategy>> profiles;   // per column, per context
  struct Row {
    std::size_t context;
    NatureStrategy restricted;
    Rational rhs;
  };
  std::vector<Row> rows;
  std::vector<std::vector<Rational>> matrix;
};

IncidenceSystem build_incidence(const EmpiricalModel<RationalSemiring>& model) {
  IncidenceSystem sys;
  const auto& cover = model.contexts();

  std::map<std::vector<NatureStrategy>, std::size_t> classes;
  for (const NatureStrategy& sigma : enumerate_nature_strategies(model.scenario)) {
    std::vector<NatureStrategy> profile;
    profile.reserve(cover.size());
    for (const MeasurementSet& context : cover) profile.push_back(sigma.restrict(context));
    if (classes.emplace(std::move(profile), sys.columns.size()).second) {
      sys.columns.push_back(sigma);
      sys.profiles.push_back({});
    }
  }
  for (const auto& [profile, idx] : classes) sys.profiles[idx] = profile;

  for (std::size_t i = 0; i < cover.size(); ++i) {
    std::map<NatureStrategy, Rational> row_keys;
    for (const auto& [tau, w] : model.context_dists[i]) row_keys[tau] = w;
    for (const auto& profile : sys.profiles) row_keys.try_emplace(profile[i], Rational(0));

    for (const auto& [tau, rhs] : row_keys) {
      std::vector<Rational> row(sys.columns.size(), Rational(0));
      for (std::size_t c = 0; c < sys.columns.size(); ++c) {
        if (sys.profiles[c][i] == tau) row[c] = 1;
      }
      sys.rows.push_back({i, tau, rhs});
      sys.matrix.push_back(std::move(row));
    }
  }
  return sys;
}

void require_compatible(const EmpiricalModel<RationalSemiring>& model) {
  if (!check_compatibility(model).compatible) {
    throw Error(Errc::incompatible_model, "context distributions disagree on overlaps");
  }
}

}  // namespace

ContextualityVerdict<RationalSemiring> decide_causal_contextuality(
    const EmpiricalModel<RationalSemiring>& model) {
  require_compatible(model);
  IncidenceSystem sys = build_incidence(model);

  RationalLP lp;
  lp.num_vars = sys.columns.size();
  lp.eq_rows = sys.matrix;
  for (const auto& row : sys.rows) lp.eq_rhs.push_back(row.rhs);
  // Explicit normalisation row; implied by any nonempty cover but kept so
  // certificates always have the same shape.
  lp.eq_rows.emplace_back(lp.num_vars, Rational(1));
  lp.eq_rhs.emplace_back(1);

  LPResult res = solve(lp);

  ContextualityVerdict<RationalSemiring> verdict;
  if (res.status == LPStatus::optimal) {
    verdict.status = ContextualityStatus::causally_noncontextual;
    std::vector<std::pair<NatureStrategy, Rational>> weights;
    for (std::size_t c = 0; c < sys.columns.size(); ++c) {
      if (res.primal[c] != 0) weights.emplace_back(sys.columns[c], res.primal[c]);
    }
    auto section = Dist<NatureStrategy, RationalSemiring>::from_weights(std::move(weights));
    // A returned section must reproduce every context distribution.
    for (std::size_t i = 0; i < model.contexts().size(); ++i) {
      if (!(pushforward(section, model.contexts()[i]) == model.context_dists[i])) {
        throw std::logic_error("global section fails to reproduce a context distribution");
      }
    }
    verdict.global_section = std::move(section);
  } else if (res.status == LPStatus::infeasible) {
    verdict.status = ContextualityStatus::causally_contextual;
    InfeasibilityCertificate cert;
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      if (res.dual_eq[r] == 0) continue;
      cert.rows.push_back({sys.rows[r].context, sys.rows[r].restricted, res.dual_eq[r]});
    }
    cert.normalisation_coefficient = res.dual_eq.back();
    verdict.certificate = std::move(cert);
  } else {
    throw std::logic_error("feasibility system cannot be unbounded");
  }
  return verdict;
}

FractionResult contextual_fraction(const EmpiricalModel<RationalSemiring>& model) {
  require_compatible(model);
  IncidenceSystem sys = build_incidence(model);

  RationalLP lp;
  lp.num_vars = sys.columns.size();
  lp.objective.assign(lp.num_vars, Rational(1));
  lp.le_rows = sys.matrix;
  for (const auto& row : sys.rows) lp.le_rhs.push_back(row.rhs);

  LPResult res = solve(lp);
  if (res.status != LPStatus::optimal) {
    throw std::logic_error("fraction program is always feasible and bounded");
  }

  FractionResult out;
  out.noncontextual_fraction = res.objective_value;
  out.contextual_fraction = Rational(1) - res.objective_value;
  for (std::size_t c = 0; c < sys.columns.size(); ++c) {
    if (res.primal[c] != 0) out.witness.emplace_back(sys.columns[c], res.primal[c]);
  }
  return out;
}

ContextualityVerdict<BooleanSemiring> decide_possibilistic(
    const EmpiricalModel<BooleanSemiring>& model) {
  if (!check_compatibility(model).compatible) {
    throw Error(Errc::incompatible_model, "context supports disagree on overlaps");
  }
  const auto& cover = model.contexts();

  // The union of all admissible global strategies is the canonical
  // candidate: admissibility is closed under union, so a boolean section
  // exists iff this largest candidate already covers every support.
  std::vector<NatureStrategy> admissible;
  std::vector<std::vector<NatureStrategy>> profiles;
  for (const NatureStrategy& sigma : enumerate_nature_strategies(model.scenario)) {
    std::vector<NatureStrategy> profile;
    bool ok = true;
    for (std::size_t i = 0; i < cover.size() && ok; ++i) {
      profile.push_back(sigma.restrict(cover[i]));
      ok = !BooleanSemiring::is_zero(model.context_dists[i].weight(profile.back()));
    }
    if (ok) {
      admissible.push_back(sigma);
      profiles.push_back(std::move(profile));
    }
  }

  ContextualityVerdict<BooleanSemiring> verdict;
  bool covers = !admissible.empty();
  for (std::size_t i = 0; i < cover.size() && covers; ++i) {
    for (const auto& [tau, w] : model.context_dists[i]) {
      bool hit = false;
      for (const auto& profile : profiles) {
        if (profile[i] == tau) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        covers = false;
        break;
      }
    }
  }

  if (covers) {
    verdict.status = ContextualityStatus::causally_noncontextual;
    std::vector<std::pair<NatureStrategy, bool>> weights;
    for (const auto& sigma : admissible) weights.emplace_back(sigma, true);
    verdict.global_section =
        Dist<NatureStrategy, BooleanSemiring>::from_weights(std::move(weights));
  } else {
    verdict.status = ContextualityStatus::causally_contextual;
  }
  return verdict;
}

EmpiricalModel<BooleanSemiring> to_possibilistic(const EmpiricalModel<RationalSemiring>& model) {
  std::vector<Dist<NatureStrategy, BooleanSemiring>> dists;
  dists.reserve(model.context_dists.size());
  for (const auto& d : model.context_dists) {
    std::vector<std::pair<NatureStrategy, bool>> weights;
    for (const auto& [sigma, w] : d) weights.emplace_back(sigma, true);
    dists.push_back(Dist<NatureStrategy, BooleanSemiring>::from_weights(std::move(weights)));
  }
  return EmpiricalModel<BooleanSemiring>{model.scenario, std::move(dists)};
}

}  // namespace causalgames
