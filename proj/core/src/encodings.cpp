#include "causalgames/encodings.hpp"

#include <algorithm>
#include <map>

namespace causalgames {

namespace {

std::string bit_name(const std::string& stem, int bit) { return stem + std::to_string(bit); }

}  // namespace

// ---------------------------------------------------------------------------
// Flat scenarios

Scenario flat_scenario(
    const std::string& name,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& measurements,
    const std::optional<std::vector<std::vector<std::string>>>& cover) {
  ScenarioDescription raw;
  raw.name = name;
  for (const auto& [id, outcomes] : measurements) {
    raw.measurements.push_back({id, outcomes});
    raw.enabling.push_back({{}, id});
  }
  raw.cover = cover;
  return Scenario::validate(raw);
}

Section flat_strategy_to_assignment(const NatureStrategy& strategy) {
  const Scenario& M = strategy.scenario();
  if (!M.is_flat()) {
    throw Error(Errc::scenario_not_flat, "assignment form requires a flat scenario");
  }
  std::vector<Event> events;
  for (MeasurementIndex x : M.measurements()) {
    auto o = strategy.response(Section{}, x);
    if (!o) throw Error(Errc::totality_violation, "no response for '" + M.measurement_id(x) + "'");
    events.push_back(Event{x, *o});
  }
  return Section::from_events(std::move(events));
}

NatureStrategy assignment_to_flat_strategy(const Scenario& M_U, const Section& assignment) {
  if (!M_U.is_flat()) {
    throw Error(Errc::scenario_not_flat, "assignment form requires a flat scenario");
  }
  if (assignment.domain() != M_U.measurements()) {
    throw Error(Errc::invalid_scenario, "assignment must cover every measurement");
  }
  return validate_nature_strategy(M_U, {assignment});
}

// ---------------------------------------------------------------------------
// Site-based scenarios

Scenario gp_to_causal(const GPScenario& gp) {
  const std::size_t n = gp.sites.size();
  std::map<std::string, std::size_t> site_index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!site_index.emplace(gp.sites[i].id, i).second) {
      throw Error(Errc::invalid_scenario, "duplicate site id '" + gp.sites[i].id + "'");
    }
    if (gp.sites[i].inputs.empty() || gp.sites[i].outputs.empty()) {
      throw Error(Errc::invalid_scenario, "site '" + gp.sites[i].id + "' needs inputs and outputs");
    }
  }

  // Strict order: transitive closure of the given precedences; a cycle
  // (including a reflexive pair) is rejected.
  std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : gp.order) {
    auto ia = site_index.find(a);
    auto ib = site_index.find(b);
    if (ia == site_index.end() || ib == site_index.end()) {
      throw Error(Errc::invalid_scenario, "order mentions unknown site");
    }
    before[ia->second][ib->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (before[i][k] && before[k][j]) before[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (before[i][i]) {
      throw Error(Errc::invalid_scenario, "site order contains a cycle through '" + gp.sites[i].id + "'");
    }
  }

  ScenarioDescription raw;
  raw.name = gp.name;

  auto measurement_name = [&](std::size_t site, const std::string& input) {
    return gp.sites[site].id + ":" + input;
  };

  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& input : gp.sites[s].inputs) {
      raw.measurements.push_back({measurement_name(s, input), gp.sites[s].outputs});
    }
  }

  // Premises: exactly one (input, output) event per strict predecessor.
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> preds;
    for (std::size_t p = 0; p < n; ++p) {
      if (before[p][s]) preds.push_back(p);
    }
    std::vector<std::vector<std::pair<std::string, std::string>>> premises{{}};
    for (std::size_t p : preds) {
      std::vector<std::vector<std::pair<std::string, std::string>>> grown;
      for (const auto& partial : premises) {
        for (const auto& input : gp.sites[p].inputs) {
          for (const auto& output : gp.sites[p].outputs) {
            auto next = partial;
            next.emplace_back(measurement_name(p, input), output);
            grown.push_back(std::move(next));
          }
        }
      }
      premises = std::move(grown);
    }
    for (const auto& input : gp.sites[s].inputs) {
      for (const auto& premise : premises) {
        raw.enabling.push_back({premise, measurement_name(s, input)});
      }
    }
  }

  // Settings of one site are alternatives of a single apparatus.
  for (std::size_t s = 0; s < n; ++s) {
    if (gp.sites[s].inputs.size() < 2) continue;
    std::vector<std::string> group;
    for (const auto& input : gp.sites[s].inputs) group.push_back(measurement_name(s, input));
    raw.exclusive.push_back(std::move(group));
  }

  // Cover: every nonempty down-closed site set, one input per site.
  std::vector<std::vector<std::string>> cover;
  const std::size_t subsets = std::size_t(1) << n;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    bool down_closed = true;
    for (std::size_t s = 0; s < n && down_closed; ++s) {
      if (!(mask & (std::size_t(1) << s))) continue;
      for (std::size_t p = 0; p < n; ++p) {
        if (before[p][s] && !(mask & (std::size_t(1) << p))) {
          down_closed = false;
          break;
        }
      }
    }
    if (!down_closed) continue;
    std::vector<std::vector<std::string>> contexts{{}};
    for (std::size_t s = 0; s < n; ++s) {
      if (!(mask & (std::size_t(1) << s))) continue;
      std::vector<std::vector<std::string>> grown;
      for (const auto& partial : contexts) {
        for (const auto& input : gp.sites[s].inputs) {
          auto next = partial;
          next.push_back(measurement_name(s, input));
          grown.push_back(std::move(next));
        }
      }
      contexts = std::move(grown);
    }
    for (auto& c : contexts) cover.push_back(std::move(c));
  }
  raw.cover = std::move(cover);

  return Scenario::validate(raw);
}

// ---------------------------------------------------------------------------
// Two-chain

GPScenario two_chain_gp() {
  GPScenario gp;
  gp.name = "two-chain";
  gp.sites = {{"A", {"x", "y"}, {"0", "1"}}, {"B", {"x", "y"}, {"0", "1"}}};
  gp.order = {{"A", "B"}};
  return gp;
}

Scenario two_chain_scenario() { return gp_to_causal(two_chain_gp()); }

namespace {

/// Strategy over a two-party context {A:z1, B:z2} answering a at the
/// first site and b at the second.
NatureStrategy two_chain_context_strategy(const Scenario& M, MeasurementIndex alice,
                                          MeasurementIndex bob, OutcomeIndex a, OutcomeIndex b) {
  Scenario ctx = M.restrict(MeasurementSet({alice, bob}));
  Section run = Section::from_events({Event{alice, a}, Event{bob, b}});
  return validate_nature_strategy(ctx, {run});
}

}  // namespace

EmpiricalModel<RationalSemiring> pr_two_chain_model() {
  Scenario M = two_chain_scenario();
  const auto& cover = *M.cover();

  std::vector<Dist<NatureStrategy, RationalSemiring>> dists;
  for (const MeasurementSet& context : cover) {
    std::vector<std::pair<NatureStrategy, Rational>> weights;
    if (context.size() == 1) {
      MeasurementIndex alice = context.values()[0];
      Scenario ctx = M.restrict(context);
      for (OutcomeIndex a = 0; a < 2; ++a) {
        Section run = Section::from_events({Event{alice, a}});
        weights.emplace_back(validate_nature_strategy(ctx, {run}), Rational(1, 2));
      }
    } else {
      MeasurementIndex alice = context.values()[0];
      MeasurementIndex bob = context.values()[1];
      int z1 = M.measurement_id(alice) == "A:y" ? 1 : 0;
      int z2 = M.measurement_id(bob) == "B:y" ? 1 : 0;
      for (OutcomeIndex a = 0; a < 2; ++a) {
        OutcomeIndex b = static_cast<OutcomeIndex>(a ^ (z1 & z2));
        weights.emplace_back(two_chain_context_strategy(M, alice, bob, a, b), Rational(1, 2));
      }
    }
    dists.push_back(Dist<NatureStrategy, RationalSemiring>::from_weights(std::move(weights)));
  }
  return make_empirical_model(std::move(M), std::move(dists));
}

Dist<NatureStrategy, RationalSemiring> pr_two_chain_global_mixture() {
  Scenario M = two_chain_scenario();
  auto global = [&](OutcomeIndex a, int flip) {
    std::vector<Section> runs;
    for (const std::string& z1 : {"x", "y"}) {
      for (const std::string& z2 : {"x", "y"}) {
        MeasurementIndex alice = M.measurement_index("A:" + z1);
        MeasurementIndex bob = M.measurement_index("B:" + z2);
        int prod = (z1 == "y" && z2 == "y") ? 1 : 0;
        OutcomeIndex b = static_cast<OutcomeIndex>(prod ^ flip);
        runs.push_back(Section::from_events({Event{alice, a}, Event{bob, b}}));
      }
    }
    return validate_nature_strategy(M, runs);
  };
  return mix<NatureStrategy, RationalSemiring>(
      {{Rational(1, 2), Dist<NatureStrategy, RationalSemiring>::point(global(0, 0))},
       {Rational(1, 2), Dist<NatureStrategy, RationalSemiring>::point(global(1, 1))}});
}

// ---------------------------------------------------------------------------
// Flat CHSH / PR box

Scenario chsh_scenario() {
  std::vector<std::pair<std::string, std::vector<std::string>>> ms;
  for (const char* stem : {"A", "B"}) {
    for (int bit : {0, 1}) ms.emplace_back(bit_name(stem, bit), std::vector<std::string>{"0", "1"});
  }
  std::vector<std::vector<std::string>> cover;
  for (int i : {0, 1}) {
    for (int j : {0, 1}) cover.push_back({bit_name("A", i), bit_name("B", j)});
  }
  return flat_scenario("chsh", ms, cover);
}

EmpiricalModel<RationalSemiring> pr_box_model() {
  Scenario M = chsh_scenario();
  std::vector<Dist<NatureStrategy, RationalSemiring>> dists;
  for (const MeasurementSet& context : *M.cover()) {
    MeasurementIndex a_meas = context.values()[0];
    MeasurementIndex b_meas = context.values()[1];
    int i = M.measurement_id(a_meas) == "A1" ? 1 : 0;
    int j = M.measurement_id(b_meas) == "B1" ? 1 : 0;
    Scenario ctx = M.restrict(context);
    std::vector<std::pair<NatureStrategy, Rational>> weights;
    for (OutcomeIndex a = 0; a < 2; ++a) {
      OutcomeIndex b = static_cast<OutcomeIndex>(a ^ (i & j));
      Section run = Section::from_events({Event{a_meas, a}, Event{b_meas, b}});
      weights.emplace_back(validate_nature_strategy(ctx, {run}), Rational(1, 2));
    }
    dists.push_back(Dist<NatureStrategy, RationalSemiring>::from_weights(std::move(weights)));
  }
  return make_empirical_model(std::move(M), std::move(dists));
}

// ---------------------------------------------------------------------------
// GHZ

namespace {

// Supports of the shipped three-party correlations per setting triple, as
// +/- strings over the measured sites: the all-0 setting triple has even
// minus-parity support, the aligned mixed triples odd.
const std::array<const char*, 4> kEvenSupport = {"+++", "+--", "-+-", "--+"};
const std::array<const char*, 4> kOddSupport = {"++-", "+-+", "-++", "---"};

/// Outcome index of a +/- symbol at a site measurement, with the bits of
/// the 1-settings of the first two sites relabelled.
OutcomeIndex ghz_bit(char pm, int site, int setting) {
  int bit = pm == '+' ? 0 : 1;
  if (site < 2 && setting == 1) bit ^= 1;
  return static_cast<OutcomeIndex>(bit);
}

Scenario ghz_block_scenario(const std::string& name, const std::array<std::string, 3>& stems,
                            bool with_cover) {
  std::vector<std::pair<std::string, std::vector<std::string>>> ms;
  for (const auto& stem : stems) {
    for (int bit : {0, 1}) ms.emplace_back(bit_name(stem, bit), std::vector<std::string>{"0", "1"});
  }
  std::optional<std::vector<std::vector<std::string>>> cover;
  if (with_cover) {
    cover = std::vector<std::vector<std::string>>{};
    for (int i : {0, 1}) {
      for (int j : {0, 1}) {
        cover->push_back({bit_name(stems[0], i), bit_name(stems[1], j), bit_name(stems[2], i ^ j)});
      }
    }
  }
  return flat_scenario(name, ms, cover);
}

Dist<NatureStrategy, RationalSemiring> ghz_context_dist(const Scenario& M,
                                                        const std::array<std::string, 3>& stems,
                                                        int i, int j, int k) {
  const std::array<int, 3> settings = {i, j, k};
  std::array<MeasurementIndex, 3> meas{};
  for (int s = 0; s < 3; ++s) meas[s] = M.measurement_index(bit_name(stems[s], settings[s]));
  Scenario ctx = M.restrict(MeasurementSet({meas[0], meas[1], meas[2]}));

  std::vector<std::pair<NatureStrategy, Rational>> weights;
  if (k == (i ^ j)) {
    const auto& rows = (i == 0 && j == 0) ? kEvenSupport : kOddSupport;
    for (const char* pm : rows) {
      std::vector<Event> events;
      for (int s = 0; s < 3; ++s) events.push_back(Event{meas[s], ghz_bit(pm[s], s, settings[s])});
      weights.emplace_back(validate_nature_strategy(ctx, {Section::from_events(std::move(events))}),
                           Rational(1, 4));
    }
  } else {
    // Off-alignment setting triples: uniform over all eight outcomes.
    for (OutcomeIndex o1 = 0; o1 < 2; ++o1) {
      for (OutcomeIndex o2 = 0; o2 < 2; ++o2) {
        for (OutcomeIndex o3 = 0; o3 < 2; ++o3) {
          Section run = Section::from_events(
              {Event{meas[0], o1}, Event{meas[1], o2}, Event{meas[2], o3}});
          weights.emplace_back(validate_nature_strategy(ctx, {run}), Rational(1, 8));
        }
      }
    }
  }
  return Dist<NatureStrategy, RationalSemiring>::from_weights(std::move(weights));
}

const std::array<std::string, 3> kGHZStems = {"A", "B", "C"};
const std::array<std::string, 3> kGHZPrimeStems = {"Ap", "Bp", "Cp"};

}  // namespace

Scenario ghz_scenario() { return ghz_block_scenario("ghz", kGHZStems, true); }

EmpiricalModel<RationalSemiring> ghz_model() {
  Scenario M = ghz_scenario();
  std::vector<Dist<NatureStrategy, RationalSemiring>> dists;
  for (int i : {0, 1}) {
    for (int j : {0, 1}) dists.push_back(ghz_context_dist(M, kGHZStems, i, j, i ^ j));
  }
  // Cover declaration order in ghz_block_scenario matches the (i, j) loop.
  return make_empirical_model(std::move(M), std::move(dists));
}

EmpiricalModel<RationalSemiring> ghz_model_all_contexts() {
  std::vector<std::pair<std::string, std::vector<std::string>>> ms;
  for (const auto& stem : kGHZStems) {
    for (int bit : {0, 1}) ms.emplace_back(bit_name(stem, bit), std::vector<std::string>{"0", "1"});
  }
  std::vector<std::vector<std::string>> cover;
  for (int i : {0, 1}) {
    for (int j : {0, 1}) {
      for (int k : {0, 1}) {
        cover.push_back({bit_name("A", i), bit_name("B", j), bit_name("C", k)});
      }
    }
  }
  Scenario M = flat_scenario("ghz-all-contexts", ms, cover);
  std::vector<Dist<NatureStrategy, RationalSemiring>> dists;
  for (int i : {0, 1}) {
    for (int j : {0, 1}) {
      for (int k : {0, 1}) dists.push_back(ghz_context_dist(M, kGHZStems, i, j, k));
    }
  }
  return make_empirical_model(std::move(M), std::move(dists));
}

std::vector<std::array<OutcomeIndex, 3>> ghz_context_support(int i, int j) {
  const auto& rows = (i == 0 && j == 0) ? kEvenSupport : kOddSupport;
  const std::array<int, 3> settings = {i, j, i ^ j};
  std::vector<std::array<OutcomeIndex, 3>> out;
  for (const char* pm : rows) {
    std::array<OutcomeIndex, 3> triple{};
    for (int s = 0; s < 3; ++s) triple[s] = ghz_bit(pm[s], s, settings[s]);
    out.push_back(triple);
  }
  return out;
}

namespace {

ExperimenterStrategy and_gate_strategy(const Scenario& M, const std::array<std::string, 3>& stems,
                                       int i, int j) {
  std::array<MeasurementIndex, 3> meas = {M.measurement_index(bit_name(stems[0], i)),
                                          M.measurement_index(bit_name(stems[1], j)),
                                          M.measurement_index(bit_name(stems[2], i ^ j))};
  std::vector<Section> terminals;
  for (OutcomeIndex o1 = 0; o1 < 2; ++o1) {
    for (OutcomeIndex o2 = 0; o2 < 2; ++o2) {
      for (OutcomeIndex o3 = 0; o3 < 2; ++o3) {
        terminals.push_back(Section::from_events(
            {Event{meas[0], o1}, Event{meas[1], o2}, Event{meas[2], o3}}));
      }
    }
  }
  return experimenter_strategy_from_maximal(M, terminals, terminals);
}

}  // namespace

ExperimenterStrategy anders_browne_strategy(const Scenario& ghz, int i, int j) {
  return and_gate_strategy(ghz, kGHZStems, i, j);
}

Scenario ghz_pair_scenario() {
  std::vector<std::pair<std::string, std::vector<std::string>>> ms;
  for (const auto& stems : {kGHZStems, kGHZPrimeStems}) {
    for (const auto& stem : stems) {
      for (int bit : {0, 1}) {
        ms.emplace_back(bit_name(stem, bit), std::vector<std::string>{"0", "1"});
      }
    }
  }
  std::vector<std::vector<std::string>> cover;
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<std::string> context;
    int bits[6] = {(mask >> 5) & 1, (mask >> 4) & 1, (mask >> 3) & 1,
                   (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
    const std::array<std::string, 6> stems = {"A", "B", "C", "Ap", "Bp", "Cp"};
    for (int s = 0; s < 6; ++s) context.push_back(bit_name(stems[s], bits[s]));
    cover.push_back(std::move(context));
  }
  return flat_scenario("ghz-pair", ms, cover);
}

ExperimenterStrategy chained_and_strategy(const Scenario& pair, int i, int j, int jp) {
  std::array<MeasurementIndex, 3> first = {pair.measurement_index(bit_name("A", i)),
                                           pair.measurement_index(bit_name("B", j)),
                                           pair.measurement_index(bit_name("C", i ^ j))};
  std::vector<Section> terminals;
  for (OutcomeIndex o1 = 0; o1 < 2; ++o1) {
    for (OutcomeIndex o2 = 0; o2 < 2; ++o2) {
      for (OutcomeIndex o3 = 0; o3 < 2; ++o3) {
        const int a = o1 ^ o2 ^ o3;  // gate-one output feeds the first primed setting
        std::array<MeasurementIndex, 3> second = {
            pair.measurement_index(bit_name("Ap", a)),
            pair.measurement_index(bit_name("Bp", jp)),
            pair.measurement_index(bit_name("Cp", a ^ jp))};
        for (OutcomeIndex o4 = 0; o4 < 2; ++o4) {
          for (OutcomeIndex o5 = 0; o5 < 2; ++o5) {
            for (OutcomeIndex o6 = 0; o6 < 2; ++o6) {
              terminals.push_back(Section::from_events({Event{first[0], o1}, Event{first[1], o2},
                                                        Event{first[2], o3}, Event{second[0], o4},
                                                        Event{second[1], o5},
                                                        Event{second[2], o6}}));
            }
          }
        }
      }
    }
  }
  return experimenter_strategy_from_maximal(pair, terminals, terminals);
}

Dist<NatureStrategy, RationalSemiring> ghz_pair_context_distribution(const Scenario& pair, int i,
                                                                     int j, int a, int jp) {
  std::array<MeasurementIndex, 3> first = {pair.measurement_index(bit_name("A", i)),
                                           pair.measurement_index(bit_name("B", j)),
                                           pair.measurement_index(bit_name("C", i ^ j))};
  std::array<MeasurementIndex, 3> second = {pair.measurement_index(bit_name("Ap", a)),
                                            pair.measurement_index(bit_name("Bp", jp)),
                                            pair.measurement_index(bit_name("Cp", a ^ jp))};
  Scenario ctx = pair.restrict(MeasurementSet(
      {first[0], first[1], first[2], second[0], second[1], second[2]}));

  std::vector<std::pair<NatureStrategy, Rational>> weights;
  for (const auto& block1 : ghz_context_support(i, j)) {
    for (const auto& block2 : ghz_context_support(a, jp)) {
      Section run = Section::from_events({Event{first[0], block1[0]}, Event{first[1], block1[1]},
                                          Event{first[2], block1[2]}, Event{second[0], block2[0]},
                                          Event{second[1], block2[1]},
                                          Event{second[2], block2[2]}});
      weights.emplace_back(validate_nature_strategy(ctx, {run}), Rational(1, 16));
    }
  }
  return Dist<NatureStrategy, RationalSemiring>::from_weights(std::move(weights));
}

// ---------------------------------------------------------------------------
// Gluing counterexample

GluingCounterexample gluing_counterexample() {
  ScenarioDescription raw;
  raw.name = "gluing";
  for (const char* id : {"x", "y", "z"}) {
    raw.measurements.push_back({id, {"0", "1"}});
  }
  raw.enabling.push_back({{}, "x"});
  raw.enabling.push_back({{}, "y"});
  raw.enabling.push_back({{{"x", "0"}, {"y", "0"}}, "z"});
  raw.cover = {{"x", "z"}, {"y", "z"}};
  Scenario M = Scenario::validate(raw);

  MeasurementIndex x = M.measurement_index("x");
  MeasurementIndex y = M.measurement_index("y");
  MeasurementIndex z = M.measurement_index("z");

  Scenario u1 = M.restrict(MeasurementSet({x, z}));
  Scenario u2 = M.restrict(MeasurementSet({y, z}));
  NatureStrategy s1 = validate_nature_strategy(u1, {Section::from_events({Event{x, 0}})});
  NatureStrategy s2 = validate_nature_strategy(u2, {Section::from_events({Event{y, 0}})});

  return GluingCounterexample{std::move(M), {std::move(s1), std::move(s2)}};
}

}  // namespace causalgames
