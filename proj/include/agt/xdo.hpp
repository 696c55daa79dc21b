#pragma once

#include <vector>

#include "agt/best_response.hpp"
#include "agt/cfr.hpp"

namespace agt {

struct XdoConfig {
  double epsilon1 = 1e-3;  // restricted-game target, must satisfy 0 < e1 < e2 / 2
  double epsilon2 = 1e-2;  // full-game gap both players must reach
  int max_outer = 64;
  CfrConfig cfr;                         // epsilon is overridden by epsilon1
  std::size_t tree_node_budget = 10'000'000;
};

struct XdoIteration {
  int index = 0;
  std::size_t tree_nodes = 0;
  std::size_t infosets_blue = 0;
  std::size_t infosets_red = 0;
  double restricted_value = 0;
  double cfr_gap_red = 0;
  double cfr_gap_blue = 0;
  int cfr_iterations = 0;
  double value = 0;     // J of the extended average profile in the full game
  double gap_red = 0;   // full-game exploitability of Blue's strategy
  double gap_blue = 0;  // full-game exploitability of Red's strategy
  bool added_red = false;
  bool added_blue = false;
};

struct XdoResult {
  BehavioralStrategy red;
  BehavioralStrategy blue;
  double value = 0;
  double gap_red = 0;
  double gap_blue = 0;
  bool converged = false;  // false when the outer budget ran out first
  int outer_iterations = 0;
  std::vector<XdoIteration> log;
  std::vector<PureStrategy> red_population;
  std::vector<PureStrategy> blue_population;
};

// Double-oracle loop over restricted games. Populations start from the default
// strategies; each pass equilibrates the restricted game, extends the average
// profile by the default fallback, and adds both full-game best responses
// unless their choices already sit in the population.
XdoResult xdo_solve(Session& s, const XdoConfig& cfg = {});

}  // namespace agt
