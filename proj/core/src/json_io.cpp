#include "causalgames/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace causalgames {

Rational parse_rational(const std::string& text) {
  auto parse_int = [](const std::string& part) -> Integer {
    if (part.empty()) throw Error(Errc::parse_error, "empty number");
    std::size_t start = part[0] == '-' || part[0] == '+' ? 1 : 0;
    if (start == part.size()) throw Error(Errc::parse_error, "bare sign");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw Error(Errc::parse_error, "malformed number '" + part + "'");
      }
    }
    return Integer(part);
  };

  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

Rational parse_rational_value(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(Errc::parse_error, "expected a rational as \"p/q\"");
}

Json rational_to_json(const Rational& r) { return to_string(r); }

// ---------------------------------------------------------------------------
// Scenario

Json scenario_to_json(const Scenario& scenario) {
  Json j;
  j["name"] = scenario.name();
  j["measurements"] = Json::array();
  for (MeasurementIndex x : scenario.measurements()) {
    Json m;
    m["id"] = scenario.measurement_id(x);
    Json outs = Json::array();
    for (OutcomeIndex o = 0; o < scenario.outcome_count(x); ++o) {
      outs.push_back(scenario.outcome_id(x, o));
    }
    m["outcomes"] = std::move(outs);
    j["measurements"].push_back(std::move(m));
  }

  const auto entries = scenario.enabling_entries();
  const bool flat = scenario.is_flat() && entries.size() == scenario.measurements().size() &&
                    std::all_of(entries.begin(), entries.end(),
                                [](const EnablingEntry& e) { return e.premise.empty(); });
  if (flat) {
    j["enabling"] = "flat";
  } else {
    Json rel = Json::array();
    for (const EnablingEntry& entry : entries) {
      Json e;
      e["after"] = section_to_json(scenario, entry.premise);
      e["enables"] = scenario.measurement_id(entry.target);
      rel.push_back(std::move(e));
    }
    j["enabling"] = std::move(rel);
  }

  if (scenario.cover() && !scenario.is_restricted()) {
    Json cover = Json::array();
    for (const MeasurementSet& context : *scenario.cover()) {
      Json c = Json::array();
      for (MeasurementIndex x : context) c.push_back(scenario.measurement_id(x));
      cover.push_back(std::move(c));
    }
    j["cover"] = std::move(cover);
  }

  if (scenario.has_exclusions()) {
    Json groups = Json::array();
    for (const auto& group : scenario.exclusive_groups()) {
      Json g = Json::array();
      for (MeasurementIndex x : group) g.push_back(scenario.measurement_id(x));
      groups.push_back(std::move(g));
    }
    if (!groups.empty()) j["exclusive"] = std::move(groups);
  }
  return j;
}

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("measurements")) {
    throw Error(Errc::parse_error, "scenario object with \"measurements\" expected");
  }
  ScenarioDescription raw;
  raw.name = j.value("name", "");
  for (const Json& m : j.at("measurements")) {
    ScenarioDescription::Measurement meas;
    meas.id = m.at("id").get<std::string>();
    for (const Json& o : m.at("outcomes")) meas.outcomes.push_back(o.get<std::string>());
    raw.measurements.push_back(std::move(meas));
  }

  const Json& enabling = j.at("enabling");
  if (enabling.is_string() && enabling.get<std::string>() == "flat") {
    for (const auto& m : raw.measurements) raw.enabling.push_back({{}, m.id});
  } else if (enabling.is_array()) {
    for (const Json& e : enabling) {
      std::vector<std::pair<std::string, std::string>> premise;
      for (const Json& ev : e.at("after")) {
        premise.emplace_back(ev.at(0).get<std::string>(), ev.at(1).get<std::string>());
      }
      raw.enabling.push_back({std::move(premise), e.at("enables").get<std::string>()});
    }
  } else {
    throw Error(Errc::parse_error, "\"enabling\" must be \"flat\" or an entry list");
  }

  if (j.contains("cover")) {
    raw.cover = std::vector<std::vector<std::string>>{};
    for (const Json& c : j.at("cover")) {
      raw.cover->push_back(c.get<std::vector<std::string>>());
    }
  }
  if (j.contains("exclusive")) {
    for (const Json& g : j.at("exclusive")) {
      raw.exclusive.push_back(g.get<std::vector<std::string>>());
    }
  }
  return Scenario::validate(raw);
}

// ---------------------------------------------------------------------------
// Sections and strategies

Json section_to_json(const Scenario& scenario, const Section& s) {
  Json j = Json::array();
  for (const Event& e : s) {
    j.push_back(Json::array(
        {scenario.measurement_id(e.measurement), scenario.outcome_id(e.measurement, e.outcome)}));
  }
  return j;
}

Section section_from_json(const Scenario& scenario, const Json& j) {
  std::vector<Event> events;
  for (const Json& ev : j) {
    MeasurementIndex x = scenario.measurement_index(ev.at(0).get<std::string>());
    events.push_back(Event{x, scenario.outcome_index(x, ev.at(1).get<std::string>())});
  }
  return Section::from_events(std::move(events));
}

namespace {

Json sections_to_json(const Scenario& scenario, const std::vector<Section>& sections) {
  Json j = Json::array();
  for (const Section& s : sections) j.push_back(section_to_json(scenario, s));
  return j;
}

std::vector<Section> sections_from_json(const Scenario& scenario, const Json& j) {
  std::vector<Section> out;
  for (const Json& s : j) out.push_back(section_from_json(scenario, s));
  return out;
}

}  // namespace

Json nature_strategy_to_json(const NatureStrategy& strategy) {
  Json j;
  j["kind"] = "N";
  j["maximal_histories"] = sections_to_json(strategy.scenario(), strategy.maximal_elements());
  return j;
}

NatureStrategy nature_strategy_from_json(const Scenario& scenario, const Json& j) {
  if (j.value("kind", "N") != "N") {
    throw Error(Errc::parse_error, "expected an N-strategy");
  }
  std::vector<Section> maxima = sections_from_json(scenario, j.at("maximal_histories"));
  MeasurementSet domain;
  if (j.contains("domain")) {
    std::vector<MeasurementIndex> idx;
    for (const Json& id : j.at("domain")) {
      idx.push_back(scenario.measurement_index(id.get<std::string>()));
    }
    domain = MeasurementSet(std::move(idx));
  } else {
    for (const Section& s : maxima) domain = domain.unite(s.domain());
  }
  Scenario ctx = scenario.measurements() == domain ? scenario : scenario.restrict(domain);
  return validate_nature_strategy(ctx, maxima);
}

Json experimenter_strategy_to_json(const ExperimenterStrategy& strategy) {
  Json j;
  j["kind"] = "E";
  j["maximal_histories"] = sections_to_json(strategy.scenario(), strategy.maximal_elements());
  j["terminal"] = sections_to_json(strategy.scenario(), strategy.terminal());
  return j;
}

ExperimenterStrategy experimenter_strategy_from_json(const Scenario& scenario, const Json& j,
                                                     bool strict) {
  if (j.value("kind", "E") != "E") {
    throw Error(Errc::parse_error, "expected an E-strategy");
  }
  std::vector<Section> maxima = sections_from_json(scenario, j.at("maximal_histories"));
  std::vector<Section> terminal;
  if (j.contains("terminal")) terminal = sections_from_json(scenario, j.at("terminal"));
  return experimenter_strategy_from_maximal(scenario, maxima, std::move(terminal), strict);
}

// ---------------------------------------------------------------------------
// Distributions

namespace {

template <class S>
Json strategy_dist_to_json_impl(const Dist<NatureStrategy, S>& d) {
  Json j;
  j["semiring"] = S::name;
  Json support = Json::array();
  for (const auto& [sigma, w] : d) {
    Json entry;
    entry["element"] = nature_strategy_to_json(sigma);
    if constexpr (std::is_same_v<S, RationalSemiring>) {
      entry["weight"] = rational_to_json(w);
    } else {
      entry["weight"] = w;
    }
    support.push_back(std::move(entry));
  }
  j["support"] = std::move(support);
  return j;
}

template <class S>
Json playout_dist_to_json_impl(const Scenario& scenario, const Dist<HistorySet, S>& d) {
  Json j;
  j["semiring"] = S::name;
  Json support = Json::array();
  for (const auto& [playout, w] : d) {
    Json entry;
    entry["element"] = sections_to_json(scenario, playout.sections());
    if constexpr (std::is_same_v<S, RationalSemiring>) {
      entry["weight"] = rational_to_json(w);
    } else {
      entry["weight"] = w;
    }
    support.push_back(std::move(entry));
  }
  j["support"] = std::move(support);
  return j;
}

template <class S>
Json bit_dist_to_json_impl(const Dist<int, S>& d) {
  Json j;
  j["semiring"] = S::name;
  Json support = Json::array();
  for (const auto& [bit, w] : d) {
    Json entry;
    entry["element"] = bit;
    if constexpr (std::is_same_v<S, RationalSemiring>) {
      entry["weight"] = rational_to_json(w);
    } else {
      entry["weight"] = w;
    }
    support.push_back(std::move(entry));
  }
  j["support"] = std::move(support);
  return j;
}

template <class S>
Dist<NatureStrategy, S> strategy_dist_from_json_impl(const Scenario& context, const Json& j) {
  if (j.value("semiring", S::name) != std::string(S::name)) {
    throw Error(Errc::semiring_mismatch, "distribution is over the other semiring");
  }
  std::vector<std::pair<NatureStrategy, typename S::Value>> weights;
  for (const Json& entry : j.at("support")) {
    const Json& element = entry.at("element");
    if (element.value("kind", "N") != "N") {
      throw Error(Errc::parse_error, "context distributions are over N-strategies");
    }
    // The context fixes the strategy domain even when the file omits it.
    NatureStrategy sigma = validate_nature_strategy(
        context, sections_from_json(context, element.at("maximal_histories")));
    if constexpr (std::is_same_v<S, RationalSemiring>) {
      weights.emplace_back(std::move(sigma), parse_rational_value(entry.at("weight")));
    } else {
      weights.emplace_back(std::move(sigma), entry.at("weight").get<bool>());
    }
  }
  return Dist<NatureStrategy, S>::from_weights(std::move(weights));
}

}  // namespace

Json dist_to_json(const Dist<NatureStrategy, RationalSemiring>& d) {
  return strategy_dist_to_json_impl(d);
}
Json dist_to_json(const Dist<NatureStrategy, BooleanSemiring>& d) {
  return strategy_dist_to_json_impl(d);
}
Json playout_dist_to_json(const Scenario& scenario, const Dist<HistorySet, RationalSemiring>& d) {
  return playout_dist_to_json_impl(scenario, d);
}
Json playout_dist_to_json(const Scenario& scenario, const Dist<HistorySet, BooleanSemiring>& d) {
  return playout_dist_to_json_impl(scenario, d);
}
Json bit_dist_to_json(const Dist<int, RationalSemiring>& d) { return bit_dist_to_json_impl(d); }
Json bit_dist_to_json(const Dist<int, BooleanSemiring>& d) { return bit_dist_to_json_impl(d); }

Dist<NatureStrategy, RationalSemiring> rational_strategy_dist_from_json(const Scenario& context,
                                                                        const Json& j) {
  return strategy_dist_from_json_impl<RationalSemiring>(context, j);
}
Dist<NatureStrategy, BooleanSemiring> boolean_strategy_dist_from_json(const Scenario& context,
                                                                      const Json& j) {
  return strategy_dist_from_json_impl<BooleanSemiring>(context, j);
}

// ---------------------------------------------------------------------------
// Models

namespace {

/// Parses a row key: outcome ids of the context's measurements joined
/// without separator. Requires a unique reading.
std::vector<OutcomeIndex> parse_row_key(const Scenario& scenario,
                                        const std::vector<MeasurementIndex>& context,
                                        const std::string& key) {
  std::vector<OutcomeIndex> result;
  std::vector<std::pair<std::size_t, std::vector<OutcomeIndex>>> stack{{0, {}}};
  std::vector<std::vector<OutcomeIndex>> parses;
  while (!stack.empty()) {
    auto [pos, prefix] = std::move(stack.back());
    stack.pop_back();
    if (prefix.size() == context.size()) {
      if (pos == key.size()) parses.push_back(prefix);
      continue;
    }
    MeasurementIndex x = context[prefix.size()];
    for (OutcomeIndex o = 0; o < scenario.outcome_count(x); ++o) {
      const std::string& id = scenario.outcome_id(x, o);
      if (key.compare(pos, id.size(), id) == 0) {
        auto next = prefix;
        next.push_back(o);
        stack.emplace_back(pos + id.size(), std::move(next));
      }
    }
  }
  if (parses.empty()) {
    throw Error(Errc::parse_error, "row key '" + key + "' does not match the context outcomes");
  }
  if (parses.size() > 1) {
    throw Error(Errc::parse_error, "row key '" + key + "' is ambiguous");
  }
  return parses.front();
}

EmpiricalModel<RationalSemiring> flat_table_model_from_json(const Json& j, Scenario scenario) {
  if (!scenario.is_flat()) {
    throw Error(Errc::scenario_not_flat,
                "flat-table input is only canonical over flat scenarios; express causal "
                "models as strategy distributions per context");
  }
  std::vector<MeasurementSet> cover_sets;
  std::vector<Dist<NatureStrategy, RationalSemiring>> dists;
  for (const Json& cj : j.at("contexts")) {
    std::vector<MeasurementIndex> context;
    for (const Json& id : cj.at("context")) {
      context.push_back(scenario.measurement_index(id.get<std::string>()));
    }
    MeasurementSet context_set(context);
    Scenario ctx = scenario.restrict(context_set);
    std::vector<std::pair<NatureStrategy, Rational>> weights;
    for (const auto& [key, weight] : cj.at("rows").items()) {
      std::vector<OutcomeIndex> outcomes = parse_row_key(scenario, context, key);
      std::vector<Event> events;
      for (std::size_t k = 0; k < context.size(); ++k) {
        events.push_back(Event{context[k], outcomes[k]});
      }
      weights.emplace_back(assignment_to_flat_strategy(ctx, Section::from_events(std::move(events))),
                           parse_rational_value(weight));
    }
    cover_sets.push_back(std::move(context_set));
    dists.push_back(Dist<NatureStrategy, RationalSemiring>::from_weights(std::move(weights)));
  }

  // Attach the table's contexts as the cover when the scenario has none.
  if (!scenario.cover()) {
    Json sj = scenario_to_json(scenario);
    Json cover = Json::array();
    for (const auto& context : cover_sets) {
      Json c = Json::array();
      for (MeasurementIndex x : context) c.push_back(scenario.measurement_id(x));
      cover.push_back(std::move(c));
    }
    sj["cover"] = std::move(cover);
    scenario = scenario_from_json(sj);
  }
  if (*scenario.cover() != cover_sets) {
    throw Error(Errc::incompatible_model, "table contexts must match the scenario cover");
  }
  return make_empirical_model(std::move(scenario), std::move(dists));
}

template <class S>
EmpiricalModel<S> model_from_json_impl(const Json& j, Scenario scenario) {
  std::vector<MeasurementSet> cover_sets;
  std::vector<Dist<NatureStrategy, S>> dists;
  for (const Json& cj : j.at("contexts")) {
    std::vector<MeasurementIndex> context;
    for (const Json& id : cj.at("context")) {
      context.push_back(scenario.measurement_index(id.get<std::string>()));
    }
    MeasurementSet context_set(context);
    Scenario ctx = scenario.restrict(context_set);
    dists.push_back(strategy_dist_from_json_impl<S>(ctx, cj.at("distribution")));
    cover_sets.push_back(std::move(context_set));
  }
  if (!scenario.cover()) {
    Json sj = scenario_to_json(scenario);
    Json cover = Json::array();
    for (const auto& context : cover_sets) {
      Json c = Json::array();
      for (MeasurementIndex x : context) c.push_back(scenario.measurement_id(x));
      cover.push_back(std::move(c));
    }
    sj["cover"] = std::move(cover);
    scenario = scenario_from_json(sj);
  }
  if (*scenario.cover() != cover_sets) {
    throw Error(Errc::incompatible_model, "model contexts must match the scenario cover");
  }
  return make_empirical_model(std::move(scenario), std::move(dists));
}

}  // namespace

LoadedModel model_from_json(const Json& j, const std::function<Json(const std::string&)>& resolve,
                            std::optional<Scenario> scenario_override) {
  Scenario scenario;
  if (scenario_override) {
    scenario = std::move(*scenario_override);
  } else if (j.contains("scenario")) {
    const Json& sj = j.at("scenario");
    scenario = sj.is_string() ? scenario_from_json(resolve(sj.get<std::string>()))
                              : scenario_from_json(sj);
  } else {
    throw Error(Errc::parse_error, "model needs a scenario (inline, path, or override)");
  }

  if (j.value("format", "") == "flat-table") {
    return flat_table_model_from_json(j, std::move(scenario));
  }

  const std::string semiring = j.value("semiring", "rational");
  if (semiring == "rational") {
    return model_from_json_impl<RationalSemiring>(j, std::move(scenario));
  }
  if (semiring == "boolean") {
    return model_from_json_impl<BooleanSemiring>(j, std::move(scenario));
  }
  throw Error(Errc::semiring_mismatch, "unknown semiring '" + semiring + "'");
}

namespace {

template <class S>
Json model_to_json_impl(const EmpiricalModel<S>& model) {
  Json j;
  j["scenario"] = scenario_to_json(model.scenario);
  j["semiring"] = S::name;
  Json contexts = Json::array();
  for (std::size_t i = 0; i < model.contexts().size(); ++i) {
    Json cj;
    Json ids = Json::array();
    for (MeasurementIndex x : model.contexts()[i]) {
      ids.push_back(model.scenario.measurement_id(x));
    }
    cj["context"] = std::move(ids);
    cj["distribution"] = strategy_dist_to_json_impl(model.context_dists[i]);
    contexts.push_back(std::move(cj));
  }
  j["contexts"] = std::move(contexts);
  return j;
}

}  // namespace

Json model_to_json(const EmpiricalModel<RationalSemiring>& model) {
  return model_to_json_impl(model);
}
Json model_to_json(const EmpiricalModel<BooleanSemiring>& model) {
  return model_to_json_impl(model);
}

// ---------------------------------------------------------------------------
// Reports

Json glue_report_to_json(const GlueReport& report) {
  Json j;
  switch (report.outcome) {
    case GlueReport::Outcome::unique: j["outcome"] = "unique"; break;
    case GlueReport::Outcome::multiple_completions: j["outcome"] = "multiple_completions"; break;
    case GlueReport::Outcome::not_applicable: j["outcome"] = "not_applicable"; break;
  }
  j["union_total"] = report.union_total;
  j["completion_count"] = report.completions.size();
  j["truncated"] = report.truncated;
  Json strategies = Json::array();
  for (const NatureStrategy& s : report.completions) {
    strategies.push_back(nature_strategy_to_json(s));
  }
  j["completions"] = std::move(strategies);
  return j;
}

template <class S>
Json compatibility_to_json(const EmpiricalModel<S>& model, const CompatibilityReport<S>& report) {
  Json j;
  j["compatible"] = report.compatible;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json vj;
    vj["context_i"] = v.context_i;
    vj["context_j"] = v.context_j;
    vj["strategy"] = nature_strategy_to_json(v.overlap_strategy);
    if constexpr (std::is_same_v<S, RationalSemiring>) {
      vj["lhs_weight"] = rational_to_json(v.lhs_weight);
      vj["rhs_weight"] = rational_to_json(v.rhs_weight);
    } else {
      vj["lhs_weight"] = v.lhs_weight;
      vj["rhs_weight"] = v.rhs_weight;
    }
    violations.push_back(std::move(vj));
  }
  j["violations"] = std::move(violations);
  return j;
}

template Json compatibility_to_json<RationalSemiring>(const EmpiricalModel<RationalSemiring>&,
                                                      const CompatibilityReport<RationalSemiring>&);
template Json compatibility_to_json<BooleanSemiring>(const EmpiricalModel<BooleanSemiring>&,
                                                     const CompatibilityReport<BooleanSemiring>&);

Json verdict_to_json(const ContextualityVerdict<RationalSemiring>& verdict,
                     const EmpiricalModel<RationalSemiring>& model) {
  Json j;
  j["status"] = verdict.status == ContextualityStatus::causally_noncontextual
                    ? "causally_noncontextual"
                    : "causally_contextual";
  if (verdict.global_section) {
    j["global_section"] = dist_to_json(*verdict.global_section);
  }
  if (verdict.certificate) {
    Json cert;
    Json rows = Json::array();
    for (const CertificateRow& row : verdict.certificate->rows) {
      Json rj;
      rj["context"] = row.context;
      rj["strategy"] = nature_strategy_to_json(row.restricted);
      rj["coefficient"] = rational_to_json(row.coefficient);
      rows.push_back(std::move(rj));
    }
    cert["rows"] = std::move(rows);
    cert["normalisation_coefficient"] =
        rational_to_json(verdict.certificate->normalisation_coefficient);
    j["certificate"] = std::move(cert);
  }
  (void)model;
  return j;
}

Json verdict_to_json(const ContextualityVerdict<BooleanSemiring>& verdict,
                     const EmpiricalModel<BooleanSemiring>& model) {
  Json j;
  j["status"] = verdict.status == ContextualityStatus::causally_noncontextual
                    ? "causally_noncontextual"
                    : "causally_contextual";
  if (verdict.global_section) {
    j["global_section"] = dist_to_json(*verdict.global_section);
  }
  (void)model;
  return j;
}

Json fraction_to_json(const FractionResult& result) {
  Json j;
  j["noncontextual_fraction"] = rational_to_json(result.noncontextual_fraction);
  j["contextual_fraction"] = rational_to_json(result.contextual_fraction);
  Json witness = Json::array();
  for (const auto& [sigma, w] : result.witness) {
    Json wj;
    wj["element"] = nature_strategy_to_json(sigma);
    wj["weight"] = rational_to_json(w);
    witness.push_back(std::move(wj));
  }
  j["witness_subdistribution"] = std::move(witness);
  return j;
}

}  // namespace causalgames
