#pragma once

#include <utility>

#include "agt/tree.hpp"

namespace agt {

struct CfrConfig {
  double epsilon = 1e-3;       // stop once max(gap_red, gap_blue) <= epsilon
  int max_iterations = 1'000'000;
  int check_period = 1;        // exploitability check cadence
};

struct CfrResult {
  TreePolicy average;
  double value = 0;  // J under the average profile within the tree
  double gap_red = 0;
  double gap_blue = 0;
  int iterations = 0;
};

// Expected J of the tree under the policy.
double tree_value(const TreeGame& g, const TreePolicy& policy);

// J when `responder` best-responds within the tree against the policy,
// aggregating counterfactual values over each info set before choosing.
double tree_best_response_value(const TreeGame& g, const TreePolicy& policy, Player responder);

// (gap_red, gap_blue) of the policy within the restricted game; both >= 0 up
// to rounding.
std::pair<double, double> restricted_exploitability(const TreeGame& g, const TreePolicy& policy);

// Vanilla counterfactual regret minimization: full tree traversals, regret
// matching (negative cumulative regret floored at zero only when forming the
// current policy), alternating per-player updates, linear strategy averaging.
CfrResult cfr_solve(const TreeGame& g, const CfrConfig& cfg);

}  // namespace agt
