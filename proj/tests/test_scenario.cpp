#include <doctest.h>

#include "causalgames/scenario.hpp"
#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

using namespace causalgames;
using namespace causalgames::testing;

TEST_CASE("validation accepts the minimal scenario") {
  Scenario s1 = s1_scenario();
  CHECK(s1.measurements().size() == 1);
  CHECK(s1.outcome_count(s1.measurement_index("x")) == 2);
  CHECK(s1.is_flat());
}

TEST_CASE("validation accepts the branching scenario") {
  Scenario s2 = s2_scenario();
  CHECK(s2.measurements().size() == 3);
  CHECK(!s2.is_flat());
  CHECK(s2.enabling_entries().size() == 3);
}

TEST_CASE("validation rejects malformed descriptions") {
  ScenarioDescription raw;
  raw.measurements.push_back({"x", {"0", "1"}});
  raw.measurements.push_back({"x", {"0"}});
  CHECK_THROWS_WITH_AS(Scenario::validate(raw), doctest::Contains("duplicate"), Error);

  ScenarioDescription empty_outcomes;
  empty_outcomes.measurements.push_back({"x", {}});
  CHECK_THROWS_AS(Scenario::validate(empty_outcomes), Error);

  ScenarioDescription inconsistent;
  inconsistent.measurements.push_back({"x", {"0", "1"}});
  inconsistent.measurements.push_back({"z", {"0"}});
  inconsistent.enabling.push_back({{{"x", "0"}, {"x", "1"}}, "z"});
  CHECK_THROWS_WITH_AS(Scenario::validate(inconsistent), doctest::Contains("inconsistent"), Error);

  ScenarioDescription dangling;
  dangling.measurements.push_back({"x", {"0"}});
  dangling.enabling.push_back({{{"ghost", "0"}}, "x"});
  CHECK_THROWS_AS(Scenario::validate(dangling), Error);

  ScenarioDescription self_premise;
  self_premise.measurements.push_back({"x", {"0"}});
  self_premise.enabling.push_back({{{"x", "0"}}, "x"});
  CHECK_THROWS_WITH_AS(Scenario::validate(self_premise), doctest::Contains("own target"), Error);

  ScenarioDescription bad_cover;
  bad_cover.measurements.push_back({"x", {"0"}});
  bad_cover.measurements.push_back({"y", {"0"}});
  bad_cover.enabling.push_back({{}, "x"});
  bad_cover.cover = {{"x"}};
  CHECK_THROWS_WITH_AS(Scenario::validate(bad_cover), doctest::Contains("cover"), Error);
}

TEST_CASE("event-set consistency") {
  Scenario s2 = s2_scenario();
  CHECK(is_consistent({}));
  Section xy = sec(s2, {{"x", "0"}, {"y", "0"}});
  CHECK(is_consistent(xy.events()));
  std::vector<Event> clash{ev(s2, "x", "0"), ev(s2, "x", "1")};
  CHECK(!is_consistent(clash));
  CHECK(!Section::try_from_events(clash).has_value());
}

TEST_CASE("section domains") {
  Scenario s2 = s2_scenario();
  CHECK(Section{}.domain().empty());
  CHECK(sec(s2, {{"x", "0"}, {"y", "0"}}).domain() == mset(s2, {"x", "y"}));
  CHECK(sec(s2, {{"x", "1"}}).domain() == mset(s2, {"x"}));
  CHECK(sec(s2, {{"x", "0"}, {"y", "0"}}).size() == 2);
}

TEST_CASE("accessibility in the branching scenario") {
  Scenario s2 = s2_scenario();
  MeasurementIndex x = s2.measurement_index("x");
  MeasurementIndex z = s2.measurement_index("z");
  CHECK(s2.accessible(Section{}, x));
  CHECK(!s2.accessible(Section{}, z));
  CHECK(s2.accessible(sec(s2, {{"x", "0"}, {"y", "0"}}), z));
  CHECK(!s2.accessible(sec(s2, {{"x", "0"}, {"y", "1"}}), z));
  CHECK(!s2.accessible(sec(s2, {{"x", "0"}}), x));
}

TEST_CASE("restriction filters enabling entries") {
  Scenario s2 = s2_scenario();

  Scenario full = s2.restrict(s2.measurements());
  CHECK(full == s2);

  Scenario xz = s2.restrict(mset(s2, {"x", "z"}));
  auto entries = xz.enabling_entries();
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].premise.empty());
  CHECK(entries[0].target == s2.measurement_index("x"));
  CHECK(!xz.cover().has_value());

  Scenario none = s2.restrict(MeasurementSet{});
  CHECK(none.measurements().empty());
  CHECK(none.enabling_entries().empty());

  CHECK_THROWS_AS(xz.restrict(mset(s2, {"y"})), Error);
}

TEST_CASE("restriction is functorial") {
  Scenario s2 = s2_scenario();
  MeasurementSet V = mset(s2, {"x", "z"});
  MeasurementSet U = mset(s2, {"z"});
  CHECK(s2.restrict(V).restrict(U) == s2.restrict(U));
}

TEST_CASE("accessibility is monotone along consistent growth") {
  std::mt19937 rng(7);
  for (int round = 0; round < 30; ++round) {
    Scenario M = random_causal_scenario(rng);
    for (const Section& s : enumerate_histories(M)) {
      for (const Section& t : enumerate_histories(M)) {
        if (!s.subset_of(t)) continue;
        for (MeasurementIndex x : M.measurements()) {
          if (!M.accessible(s, x) || t.measures(x)) continue;
          bool excluded = false;
          for (const Event& e : t) {
            if (M.mutually_exclusive(e.measurement, x)) excluded = true;
          }
          if (!excluded) CHECK(M.accessible(t, x));
        }
      }
    }
  }
}

TEST_CASE("flat scenarios enable everything unperformed") {
  std::mt19937 rng(13);
  Scenario M = random_flat_scenario(rng);
  for (const Section& s : enumerate_histories(M)) {
    for (MeasurementIndex x : M.measurements()) {
      CHECK(M.accessible(s, x) == !s.measures(x));
    }
  }
}
