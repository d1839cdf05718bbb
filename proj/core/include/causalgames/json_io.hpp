#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "causalgames/encodings.hpp"
#include "causalgames/models.hpp"

namespace causalgames {

using Json = nlohmann::ordered_json;

Rational parse_rational_value(const Json& j);
Json rational_to_json(const Rational& r);

// Scenario format:
// {"name": str,
//  "measurements": [{"id": str, "outcomes": [str,...]}, ...],
//  "enabling": "flat" | [{"after": [[mid,oid],...], "enables": mid}, ...],
//  "cover": [[mid,...], ...]            (optional)
//  "exclusive": [[mid,...], ...]}       (optional, groups of mutually
//                                        exclusive measurements)
Json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const Json& j);

Json section_to_json(const Scenario& scenario, const Section& s);
Section section_from_json(const Scenario& scenario, const Json& j);

// Strategy format: {"kind": "N"|"E", "maximal_histories": [...],
// "terminal": [...] (E only)}. Reads additionally accept a "domain" list
// for N-strategies; without it the domain is the union of the measured
// measurements.
Json nature_strategy_to_json(const NatureStrategy& strategy);
NatureStrategy nature_strategy_from_json(const Scenario& scenario, const Json& j);
Json experimenter_strategy_to_json(const ExperimenterStrategy& strategy);
ExperimenterStrategy experimenter_strategy_from_json(const Scenario& scenario, const Json& j,
                                                     bool strict = false);

// Distribution format:
// {"semiring": "rational"|"boolean",
//  "support": [{"element": <strategy or playout>, "weight": "p/q"|bool}]}
Json dist_to_json(const Dist<NatureStrategy, RationalSemiring>& d);
Json dist_to_json(const Dist<NatureStrategy, BooleanSemiring>& d);
Json playout_dist_to_json(const Scenario& scenario, const Dist<HistorySet, RationalSemiring>& d);
Json playout_dist_to_json(const Scenario& scenario, const Dist<HistorySet, BooleanSemiring>& d);
Json bit_dist_to_json(const Dist<int, RationalSemiring>& d);
Json bit_dist_to_json(const Dist<int, BooleanSemiring>& d);

Dist<NatureStrategy, RationalSemiring> rational_strategy_dist_from_json(const Scenario& context,
                                                                        const Json& j);
Dist<NatureStrategy, BooleanSemiring> boolean_strategy_dist_from_json(const Scenario& context,
                                                                      const Json& j);

using LoadedModel =
    std::variant<EmpiricalModel<RationalSemiring>, EmpiricalModel<BooleanSemiring>>;

// Model format:
// {"scenario": <inline scenario or path string>,
//  "semiring": "rational"|"boolean",
//  "contexts": [{"context": [mid,...], "distribution": <dist>}]}
// or the flat-table convenience form
// {"format": "flat-table", "scenario": ..., "semiring": "rational",
//  "contexts": [{"context": [...], "rows": {"<outcomes joined>": "p/q"}}]}
// which is only meaningful over flat scenarios (converting history-level
// tables of properly causal contexts has no canonical strategy reading and
// is refused).
//
// `resolve` loads a referenced scenario path; `scenario_override`, when
// given, replaces whatever the file references.
LoadedModel model_from_json(const Json& j,
                            const std::function<Json(const std::string&)>& resolve,
                            std::optional<Scenario> scenario_override = std::nullopt);

Json model_to_json(const EmpiricalModel<RationalSemiring>& model);
Json model_to_json(const EmpiricalModel<BooleanSemiring>& model);

// Report serialisers shared by the CLI and tools.
Json glue_report_to_json(const GlueReport& report);
template <class S>
Json compatibility_to_json(const EmpiricalModel<S>& model, const CompatibilityReport<S>& report);
Json verdict_to_json(const ContextualityVerdict<RationalSemiring>& verdict,
                     const EmpiricalModel<RationalSemiring>& model);
Json verdict_to_json(const ContextualityVerdict<BooleanSemiring>& verdict,
                     const EmpiricalModel<BooleanSemiring>& model);
Json fraction_to_json(const FractionResult& result);

}  // namespace causalgames
