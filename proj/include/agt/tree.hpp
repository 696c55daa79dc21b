#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "agt/strategy.hpp"

namespace agt {

// Explicit finite extensive-form tree over interned histories. Nodes of one
// info set share the mover's (type, history) key and therefore one action list;
// the same history appears once per chance branch that reaches it.
struct TreeGame {
  struct InfoSet {
    TypeId type = 0;
    int hist = -1;
    std::vector<int> actions;
    std::vector<int> nodes;
  };
  struct Node {
    int hist = -1;
    Player mover = Player::blue;
    int infoset = -1;
    std::vector<int> children;     // >= 0: node index, < 0: ~terminal index
    std::vector<double> edge_cost; // Blue stage cost per action
  };
  struct Terminal {
    int hist = -1;
    double cost = 0;  // total Blue cost accumulated along the history
  };
  struct Branch {
    double prob = 1;
    TypeId red_type = 0;
    TypeId blue_type = 0;
    int child = 0;  // encoded like Node::children
  };

  std::vector<Branch> branches;
  std::vector<Node> nodes;
  std::vector<Terminal> terminals;
  std::array<std::vector<InfoSet>, 2> infosets;
  std::array<std::unordered_map<ISKey, int>, 2> infoset_index;

  int find_infoset(Player p, TypeId type, int hist) const {
    auto& m = infoset_index[idx(p)];
    auto it = m.find(iskey(type, hist));
    return it == m.end() ? -1 : it->second;
  }
  size_t decision_count() const { return nodes.size(); }
};

// Per-player, per-info-set action probabilities aligned with InfoSet::actions.
using TreePolicy = std::array<std::vector<std::vector<double>>, 2>;

TreePolicy uniform_policy(const TreeGame& g);

// Union of the actions the population's pure strategies play at this key.
std::vector<int> restricted_action_set(const Session& s, Player player, TypeId type, int hist,
                                       const std::vector<PureStrategy>& population);

// The restricted game the populations induce: at every reachable info set the
// mover chooses among restricted_action_set; leaves carry accumulated cost.
TreeGame build_restricted_game(Session& s, const std::vector<PureStrategy>& red_population,
                               const std::vector<PureStrategy>& blue_population,
                               std::size_t node_budget = 10'000'000);

// Behavioral strategy holding the policy's rows for every info set of `player`.
BehavioralStrategy policy_to_strategy(const TreeGame& g, const TreePolicy& policy, Player player);

}  // namespace agt
