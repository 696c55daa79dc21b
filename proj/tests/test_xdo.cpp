#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agt/best_response.hpp"
#include "agt/evaluate.hpp"
#include "agt/xdo.hpp"
#include "test_util.hpp"

using namespace agt;

// Oracle trace for the line fixture, outer pass by outer pass:
//
//   Pass 1. Populations hold only the defaults, so the restricted tree is the
//     single line (blue walks, red stays) with cost 2; its equilibrium is
//     trivially value 2. Extension plays defaults everywhere. Red's full-game
//     best response switches to graph 2 once blue stands on node 2, lifting J
//     to 6 (gap_red 4); blue cannot gain (gap_blue 0). The switcher joins
//     red's population.
//
//   Pass 2. The restricted tree now branches at red's node: stay (line cost
//     2) or switch (line cost 6). Restricted CFR pushes red onto the switch,
//     value 6. Blue still has a single action everywhere, so neither side's
//     full-game best response gains anything: gaps 0, converged, value 6.
//
// The two-type variant mixes the switcher (prior 1/2) with a stay-only type
// (prior 1/2): J = 0.5 * 6 + 0.5 * 2 = 4 by the same two passes.

TEST_CASE("xdo solves the line fixture in two outer passes") {
  Session s(testutil::make_l3());
  XdoConfig cfg;
  cfg.epsilon2 = 0.1;
  cfg.epsilon1 = 0.01;
  XdoResult r = xdo_solve(s, cfg);

  CHECK(r.converged);
  CHECK(r.outer_iterations == 2);
  CHECK(r.value == doctest::Approx(6).epsilon(0.02));
  CHECK(r.gap_red <= cfg.epsilon2);
  CHECK(r.gap_blue <= cfg.epsilon2);
  CHECK(r.gap_red >= -1e-9);
  CHECK(r.gap_blue >= -1e-9);

  REQUIRE(r.log.size() == 2);
  CHECK(r.log[0].added_red == 1);
  CHECK(r.log[0].added_blue == 0);
  CHECK(r.log[0].value == doctest::Approx(2));
  CHECK(r.log[0].gap_red == doctest::Approx(4));
  CHECK(r.log[1].added_red == 0);
  CHECK(r.log[1].added_blue == 0);
  CHECK(r.red_population.size() == 2);
  CHECK(r.blue_population.size() == 1);

  // The returned profile is the restricted equilibrium extended by defaults.
  auto [gap_red, gap_blue] = full_exploitability(s, r.red, r.blue);
  CHECK(gap_red <= cfg.epsilon2);
  CHECK(gap_blue <= cfg.epsilon2);
}

TEST_CASE("xdo mixes over red types on the two-type line") {
  Session s(testutil::make_l3_2t());
  XdoConfig cfg;
  cfg.epsilon2 = 0.1;
  cfg.epsilon1 = 0.01;
  XdoResult r = xdo_solve(s, cfg);
  CHECK(r.converged);
  CHECK(r.outer_iterations <= 3);
  CHECK(r.value == doctest::Approx(4).epsilon(0.03));
}

TEST_CASE("xdo on the diamond converges immediately to the default profile") {
  Session s(testutil::make_d4());
  XdoResult r = xdo_solve(s, {});
  CHECK(r.converged);
  CHECK(r.outer_iterations == 1);
  CHECK(r.value == doctest::Approx(2));
  CHECK(r.red_population.size() == 1);
  CHECK(r.blue_population.size() == 1);
}

TEST_CASE("config validation guards the epsilon relation and budgets") {
  Session s(testutil::make_l3());
  XdoConfig cfg;
  cfg.epsilon1 = 0.05;
  cfg.epsilon2 = 0.1;  // epsilon1 must be < epsilon2 / 2
  CHECK_THROWS_AS(xdo_solve(s, cfg), ConfigInvalid);
  cfg.epsilon1 = 0;
  CHECK_THROWS_AS(xdo_solve(s, cfg), ConfigInvalid);
  cfg.epsilon1 = 0.01;
  cfg.max_outer = 0;
  CHECK_THROWS_AS(xdo_solve(s, cfg), ConfigInvalid);
}

TEST_CASE("outer budget exhaustion reports converged = false, not an exception") {
  Session s(testutil::make_l3());
  XdoConfig cfg;
  cfg.epsilon2 = 0.1;
  cfg.epsilon1 = 0.01;
  cfg.max_outer = 1;
  XdoResult r = xdo_solve(s, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.outer_iterations == 1);
  CHECK(r.gap_red == doctest::Approx(4));  // the unexplored switch remains
}

TEST_CASE("duplicate best responses are not added twice") {
  Session s(testutil::make_l3());
  XdoConfig cfg;
  cfg.epsilon2 = 0.1;
  cfg.epsilon1 = 0.01;
  XdoResult r = xdo_solve(s, cfg);
  // Rerun from the converged state: nothing new can appear.
  for (const auto& row : r.log) {
    CHECK(row.added_red <= 1);
    CHECK(row.added_blue <= 1);
  }
  std::size_t unique_red = r.red_population.size();
  for (size_t i = 0; i < unique_red; ++i)
    for (size_t j = i + 1; j < unique_red; ++j)
      CHECK_FALSE(r.red_population[i].same_choices(r.red_population[j]));
}

TEST_CASE("iteration log carries the restricted-game diagnostics") {
  Session s(testutil::make_l3());
  XdoConfig cfg;
  cfg.epsilon2 = 0.1;
  cfg.epsilon1 = 0.01;
  XdoResult r = xdo_solve(s, cfg);
  REQUIRE(!r.log.empty());
  for (const auto& row : r.log) {
    CHECK(row.tree_nodes > 0);
    CHECK(row.infosets_blue > 0);
    CHECK(row.infosets_red > 0);
    CHECK(row.cfr_iterations >= 1);
    CHECK(row.cfr_gap_red <= cfg.epsilon1 + 1e-12);
    CHECK(row.cfr_gap_blue <= cfg.epsilon1 + 1e-12);
  }
  CHECK(r.log.back().index == r.outer_iterations);
  CHECK(r.log.front().index == 1);
}
