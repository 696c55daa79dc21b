#pragma once

#include <string>
#include <vector>

#include "agt/xdo.hpp"

namespace agt {

struct BeliefUpdateResult {
  BeliefVector posterior;
  bool off_support = false;  // the action had zero probability under every live type
};

// Bayes update of the observer's belief over the acting player's types after
// seeing `action` at `hist`: posterior mass is prior times the action's
// probability under each type. Blue types already at their goals cannot have
// acted and are zeroed. An off-support observation returns the prior as is.
BeliefUpdateResult belief_update(const Session& s, const BeliefVector& prior,
                                 const BehavioralStrategy& acting, int hist, int action);

struct BeliefRow {
  int hist = -1;
  int t = 0;  // plies from the root
  GameState state;
  double prob = 0;        // reach probability summed over type pairs
  BeliefVector mu_blue;   // Blue's belief over Red types at this history
  BeliefVector mu_red;    // Red's belief over Blue types at this history
  bool terminal = false;  // all mass that arrives here has reached its goals
};

// Every positive-probability history under the profile in breadth-first order,
// with the public beliefs both players hold there.
std::vector<BeliefRow> belief_trajectories(Session& s, const BehavioralStrategy& red,
                                           const BehavioralStrategy& blue);

// Exact alternating-move value iteration over (position, graph) states, which
// covers the game when each side has a single type. v is Blue to move, w is
// Red to move.
struct ShapleyResult {
  std::vector<std::vector<double>> v;         // [position][graph - 1]
  std::vector<std::vector<double>> w;
  std::vector<std::vector<NodeId>> blue_policy;
  std::vector<std::vector<GraphId>> red_policy;
  double start_value = 0;
  int sweeps = 0;
};

ShapleyResult shapley_value_iteration(const ValidatedGame& g, double tol = 1e-12,
                                      int max_sweeps = 100'000);

// Equilibrium value of the depth-capped expansion of the full game, computed
// with its own tree builder, regret solver, and best responses so it can stand
// as an independent check on the main pipeline. Past the cap both players are
// forced onto their defaults, which ends every line.
double brute_force_value(const GameSpec& spec, std::size_t node_budget = 1'500'000,
                         double gap = 1e-6);

// Benchmark values across information conditions. Complete information solves
// every type pair as its own game; one-sided keeps the informed player's prior
// and fixes the other side's type; two-sided solves the game as given. Each
// sub-solve must converge or NonConvergence is thrown.
double value_complete_information(const GameSpec& spec, const XdoConfig& cfg);
double value_one_sided(const GameSpec& spec, Player informed, const XdoConfig& cfg);
double value_two_sided(const GameSpec& spec, const XdoConfig& cfg);

enum class VoiVerdict { consistent, indeterminate, violated };

struct VoiReport {
  double v_ci = 0;
  double v_1s_red = 0;   // only Red's type is private
  double v_1s_blue = 0;  // only Blue's type is private
  double v_2s = 0;
  double voi_1s_red = 0;   // (v_1s_red - v_ci) / v_ci
  double voi_1s_blue = 0;  // (v_ci - v_1s_blue) / v_ci
  double voi_2s_red = 0;   // (v_2s - v_1s_blue) / v_1s_blue
  double voi_2s_blue = 0;  // (v_1s_red - v_2s) / v_1s_red
  // Whether Red's two-sided gain exceeds its one-sided gain exactly when
  // Blue's falls short; both comparisons share the sign of `determinant`.
  bool ordering_consistent = false;
  double determinant = 0;  // v_2s * v_ci - v_1s_red * v_1s_blue
  double guard_band = 0;   // epsilon2 * (v_ci + v_2s + v_1s_red + v_1s_blue)
  VoiVerdict verdict = VoiVerdict::indeterminate;
};

// Value-of-information ratios from four benchmark values. All four must be
// positive (DegenerateValue otherwise). The verdict downgrades to
// indeterminate when the determinant sits inside the guard band.
VoiReport voi_report(double v_ci, double v_1s_red, double v_1s_blue, double v_2s,
                     double epsilon2);
VoiReport voi_report(const GameSpec& spec, const XdoConfig& cfg);

// Re-keys a strategy into another session over the same dynamics: mapped
// histories are re-interned by their action path and types renamed through
// type_map (new type = type_map[old type]).
BehavioralStrategy transfer_strategy(const Session& from, Session& to,
                                     const BehavioralStrategy& strat,
                                     const std::vector<TypeId>& type_map);

struct DeltaEntry {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double delta = 0;  // lhs - rhs
};

struct DeceptionReport {
  double v_1s_blue = 0;
  double v_1s_red = 0;
  std::vector<DeltaEntry> deltas;
};

// How much a side loses by committing to strategies prepared under the wrong
// information condition while the other side best-responds:
//   blue_ci_vs_1s: Blue plays its per-pair strategies in the Blue-private
//     game, Red exploits, versus that game's equilibrium value.
//   blue_ci_vs_2s: the same exploited value versus Blue playing its two-sided
//     strategy and being exploited.
//   red_1s_vs_ci: the Red-private equilibrium value versus Red playing its
//     per-pair strategies against an exploiting Blue.
//   red_2s_vs_ci: Red playing its two-sided strategy against an exploiting
//     Blue, versus the per-pair version.
DeceptionReport deception_deltas(const GameSpec& spec, const XdoConfig& cfg);

}  // namespace agt
