#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "causalgames/models.hpp"
#include "causalgames/scenario.hpp"
#include "causalgames/strategies.hpp"

namespace causalgames {

// ---------------------------------------------------------------------------
// Flat scenarios and the assignment correspondence

/// Scenario in which every measurement is initially enabled and nothing
/// else constrains play.
Scenario flat_scenario(
    const std::string& name,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& measurements,
    const std::optional<std::vector<std::vector<std::string>>>& cover = std::nullopt);

/// Over a flat scenario a strategy answers each measurement identically at
/// every position, so it is exactly a full outcome assignment.
/// Errc::scenario_not_flat otherwise.
Section flat_strategy_to_assignment(const NatureStrategy& strategy);
NatureStrategy assignment_to_flat_strategy(const Scenario& M_U, const Section& assignment);

// ---------------------------------------------------------------------------
// Site-based scenarios with a causal order

struct GPSite {
  std::string id;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

/// Sites with a strict causal order; inputs are measurement settings and
/// outputs their outcomes. The order may be given by any generating set of
/// precedences; its transitive closure is taken and cycles are rejected.
struct GPScenario {
  std::string name;
  std::vector<GPSite> sites;
  std::vector<std::pair<std::string, std::string>> order;  // (before, after)
};

/// Encodes a site-based scenario as a causal measurement scenario:
/// one measurement per (site, input), named "<site>:<input>"; a
/// measurement is enabled once exactly one (input, output) pair per
/// strict predecessor site has occurred; the settings of one site are
/// mutually exclusive; the cover has one context per down-closed site set
/// and per input choice over it.
Scenario gp_to_causal(const GPScenario& gp);

// ---------------------------------------------------------------------------
// Worked example: two parties with Alice preceding Bob

/// Binary-input, binary-output chain A < B.
GPScenario two_chain_gp();
Scenario two_chain_scenario();

/// Box correlations on the chain: per secured two-party context, uniform
/// weight on the pair of strategies whose outcomes XOR to the product of
/// the inputs; single-party contexts carry the matching marginals.
EmpiricalModel<RationalSemiring> pr_two_chain_model();

/// An explicit global distribution realising pr_two_chain_model: half
/// weight on "answer 0, Bob computes the product", half on the bitwise
/// complement.
Dist<NatureStrategy, RationalSemiring> pr_two_chain_global_mixture();

// ---------------------------------------------------------------------------
// Worked example: flat CHSH and the PR box

Scenario chsh_scenario();
EmpiricalModel<RationalSemiring> pr_box_model();

// ---------------------------------------------------------------------------
// Worked example: GHZ and AND-gate strategies
//
// Measurements A0,A1,B0,B1,C0,C1 (site letter, setting bit), binary
// outcomes "0"/"1". The shipped correlations are the standard three-qubit
// ones; outcome bits of A1 and B1 are relabelled so that the XOR readout
// of the adaptive AND strategy below is the conjunction of its inputs for
// every input pair.

Scenario ghz_scenario();

/// The four-context model (one context per gate input pair, settings
/// (i, j, i XOR j)), uniform weight 1/4 on each context's four supported
/// assignments.
EmpiricalModel<RationalSemiring> ghz_model();

/// Eight-context variant: the four aligned contexts above plus the four
/// remaining setting triples, which carry the uniform distribution over
/// all eight outcomes (values cross-checked against a state-vector
/// computation in scripts/ghz_state_oracle.py).
EmpiricalModel<RationalSemiring> ghz_model_all_contexts();

/// The supported outcome triples (as outcome indices) of the context with
/// settings (i, j, i XOR j), in the relabelled bit convention.
std::vector<std::array<OutcomeIndex, 3>> ghz_context_support(int i, int j);

/// Adaptive AND gate: measure A_i and B_j (all outcomes accepted), then
/// C_{i XOR j}; play ends after the three events.
ExperimenterStrategy anders_browne_strategy(const Scenario& ghz, int i, int j);

/// Two disjoint GHZ blocks; the second block's measurements carry a "p"
/// in their names (Ap0, ..., Cp1).
Scenario ghz_pair_scenario();

/// Feedforward composition of two AND gates: gate one as above, then
/// Ap indexed by the XOR of gate one's outcome bits, then Bp_{jp}, then
/// Cp indexed by the XOR of the two primed settings.
ExperimenterStrategy chained_and_strategy(const Scenario& pair, int i, int j, int jp);

/// Uniform distribution over the product support of one block-one context
/// (settings i, j, i XOR j) and one block-two context (settings a, jp,
/// a XOR jp), as strategies over the joint six-measurement context.
Dist<NatureStrategy, RationalSemiring> ghz_pair_context_distribution(const Scenario& pair, int i,
                                                                     int j, int a, int jp);

// ---------------------------------------------------------------------------
// Worked example: non-unique gluing

struct GluingCounterexample {
  Scenario scenario;  // three measurements; the third enabled by one branch only
  std::vector<NatureStrategy> family;
};

/// Two compatible one-branch strategies whose union is deterministic but
/// not total; it completes to a strategy in two ways.
GluingCounterexample gluing_counterexample();

}  // namespace causalgames
