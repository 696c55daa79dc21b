#pragma once

#include <utility>

#include "agt/strategy.hpp"

namespace agt {

struct BrOptions {
  // Once every live Red type is past its mapped domain the graph can never
  // change again, so Blue's continuation is the frozen-graph shortest path.
  // Disabled, the subgame is expanded explicitly instead (identity testable).
  bool frozen_closed_form = true;
};

struct BestResponseResult {
  PureStrategy strategy;     // choices at the info sets reached under them
  double value = 0;          // responder's utility: +J for Red, -J for Blue
  long nodes_visited = 0;
};

// Exact best response against the opponent's extended strategy, weighting the
// opponent's types by prior times their reach probability of each history.
BestResponseResult best_response(Session& s, Player responder, const BehavioralStrategy& opponent,
                                 BrOptions opts = {});

// (gap_red, gap_blue) in the full game: how much each side gains by deviating
// from the profile to its exact best response.
std::pair<double, double> full_exploitability(Session& s, const BehavioralStrategy& red,
                                              const BehavioralStrategy& blue);

}  // namespace agt
