#pragma once

#include <cstdint>

#include "agt/strategy.hpp"

namespace agt {

// Exact expected total Blue cost J of a strategy profile, the chance root
// weighting type pairs by the product of priors. U_red = J, U_blue = -J.
double evaluate_profile(Session& s, const BehavioralStrategy& red, const BehavioralStrategy& blue);

struct Playout {
  TypeId red_type = 0;
  TypeId blue_type = 0;
  std::vector<int> actions;
  std::vector<int> hists;             // history after each ply, hists[0] == root
  double cost = 0;
  int plies = 0;
  std::vector<BeliefVector> mu_blue;  // Blue's belief over Red types after ply t
  std::vector<BeliefVector> mu_red;   // Red's belief over Blue types after ply t
};

// One seeded playout: types drawn from the priors, actions sampled from the
// profile, beliefs tracked by Bayes updates on the observed actions.
Playout simulate_playout(Session& s, const BehavioralStrategy& red, const BehavioralStrategy& blue,
                         std::uint64_t seed);

}  // namespace agt
