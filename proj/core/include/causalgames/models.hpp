#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causalgames/dist.hpp"
#include "causalgames/lp.hpp"
#include "causalgames/scenario.hpp"
#include "causalgames/strategies.hpp"

namespace causalgames {

/// One strategy distribution per cover context, over a scenario that
/// carries the cover. The support of the i-th distribution lives over the
/// restriction to the i-th context.
template <class S>
struct EmpiricalModel {
  Scenario scenario;
  std::vector<Dist<NatureStrategy, S>> context_dists;

  const std::vector<MeasurementSet>& contexts() const { return *scenario.cover(); }
};

template <class S>
EmpiricalModel<S> make_empirical_model(Scenario scenario,
                                       std::vector<Dist<NatureStrategy, S>> context_dists) {
  if (!scenario.cover()) {
    throw Error(Errc::incompatible_model, "scenario has no cover");
  }
  if (scenario.cover()->size() != context_dists.size()) {
    throw Error(Errc::incompatible_model, "one distribution per cover context required");
  }
  for (std::size_t i = 0; i < context_dists.size(); ++i) {
    const Scenario wanted = scenario.restrict((*scenario.cover())[i]);
    for (const auto& [sigma, w] : context_dists[i]) {
      if (!(sigma.scenario() == wanted)) {
        throw Error(Errc::scenario_mismatch,
                    "support strategy of context " + std::to_string(i) +
                        " lives over the wrong restriction");
      }
    }
  }
  return EmpiricalModel<S>{std::move(scenario), std::move(context_dists)};
}

template <class S>
struct CompatibilityViolation {
  std::size_t context_i = 0;
  std::size_t context_j = 0;
  NatureStrategy overlap_strategy;
  typename S::Value lhs_weight{};
  typename S::Value rhs_weight{};
};

template <class S>
struct CompatibilityReport {
  bool compatible = true;
  std::vector<CompatibilityViolation<S>> violations;
};

/// Pushes every context distribution to every pairwise overlap and
/// compares exactly. Violations are data, not errors.
template <class S>
CompatibilityReport<S> check_compatibility(const EmpiricalModel<S>& model) {
  CompatibilityReport<S> report;
  const auto& cover = model.contexts();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::size_t j = i + 1; j < cover.size(); ++j) {
      MeasurementSet overlap = cover[i].intersect(cover[j]);
      auto lhs = pushforward(model.context_dists[i], overlap);
      auto rhs = pushforward(model.context_dists[j], overlap);
      if (lhs == rhs) continue;
      report.compatible = false;
      for (const auto& [sigma, w] : lhs) {
        if (rhs.weight(sigma) != w) {
          report.violations.push_back({i, j, sigma, w, rhs.weight(sigma)});
        }
      }
      for (const auto& [sigma, w] : rhs) {
        if (S::is_zero(lhs.weight(sigma))) {
          report.violations.push_back({i, j, sigma, S::zero(), w});
        }
      }
    }
  }
  return report;
}

enum class ContextualityStatus { causally_noncontextual, causally_contextual };

/// One multiplier per incidence row, labelled by the context and the
/// context-local strategy the row constrains.
struct CertificateRow {
  std::size_t context = 0;
  NatureStrategy restricted;
  Rational coefficient;
};

struct InfeasibilityCertificate {
  std::vector<CertificateRow> rows;
  Rational normalisation_coefficient;
};

template <class S>
struct ContextualityVerdict {
  ContextualityStatus status = ContextualityStatus::causally_contextual;
  std::optional<Dist<NatureStrategy, S>> global_section;
  std::optional<InfeasibilityCertificate> certificate;
};

/// Exact feasibility of the incidence system over the deterministic
/// strategy polytope: a global distribution restricting to every context
/// distribution, or a Farkas-style witness that none exists. The model
/// must be compatible (Errc::incompatible_model otherwise).
ContextualityVerdict<RationalSemiring> decide_causal_contextuality(
    const EmpiricalModel<RationalSemiring>& model);

struct FractionResult {
  Rational noncontextual_fraction;
  Rational contextual_fraction;
  /// Subnormalised weights over global strategies achieving the optimum.
  std::vector<std::pair<NatureStrategy, Rational>> witness;
};

/// Largest subprobability weight of a global strategy distribution fitting
/// under the model, solved exactly; contextual fraction is its complement.
FractionResult contextual_fraction(const EmpiricalModel<RationalSemiring>& model);

/// Boolean global section search: a set of global strategies whose
/// restrictions reproduce every context support exactly.
ContextualityVerdict<BooleanSemiring> decide_possibilistic(
    const EmpiricalModel<BooleanSemiring>& model);

/// Forgets weights, keeping supports.
EmpiricalModel<BooleanSemiring> to_possibilistic(const EmpiricalModel<RationalSemiring>& model);

/// The vertices of the classical polytope: one model per global strategy,
/// each context carrying the point distribution on the restriction.
/// Duplicates (strategies with equal restriction profiles) are kept.
template <class S>
std::vector<EmpiricalModel<S>> enumerate_deterministic_models(const Scenario& scenario,
                                                              std::size_t limit = kNoLimit) {
  if (!scenario.cover()) {
    throw Error(Errc::incompatible_model, "scenario has no cover");
  }
  std::vector<EmpiricalModel<S>> out;
  for (const NatureStrategy& sigma : enumerate_nature_strategies(scenario, limit)) {
    std::vector<Dist<NatureStrategy, S>> dists;
    dists.reserve(scenario.cover()->size());
    for (const MeasurementSet& context : *scenario.cover()) {
      dists.push_back(Dist<NatureStrategy, S>::point(sigma.restrict(context)));
    }
    out.push_back(EmpiricalModel<S>{scenario, std::move(dists)});
  }
  return out;
}

}  // namespace causalgames
