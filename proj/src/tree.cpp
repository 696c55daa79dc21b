#include "agt/tree.hpp"

#include <algorithm>
#include <set>

namespace agt {

TreePolicy uniform_policy(const TreeGame& g) {
  TreePolicy policy;
  for (int p = 0; p < 2; ++p) {
    policy[p].resize(g.infosets[p].size());
    for (size_t i = 0; i < g.infosets[p].size(); ++i) {
      size_t n = g.infosets[p][i].actions.size();
      policy[p][i].assign(n, 1.0 / static_cast<double>(n));
    }
  }
  return policy;
}

std::vector<int> restricted_action_set(const Session& s, Player, TypeId type, int hist,
                                       const std::vector<PureStrategy>& population) {
  std::set<int> actions;
  for (const PureStrategy& member : population) actions.insert(member.action_at(s, type, hist));
  return {actions.begin(), actions.end()};
}

namespace {

struct Builder {
  Session& s;
  const std::vector<PureStrategy>& red_pop;
  const std::vector<PureStrategy>& blue_pop;
  std::size_t budget;
  TreeGame g;

  int intern_infoset(Player mover, TypeId type, int hist, const std::vector<int>& actions) {
    auto& index = g.infoset_index[idx(mover)];
    auto [it, inserted] = index.try_emplace(iskey(type, hist),
                                            static_cast<int>(g.infosets[idx(mover)].size()));
    if (inserted) {
      TreeGame::InfoSet is;
      is.type = type;
      is.hist = hist;
      is.actions = actions;
      g.infosets[idx(mover)].push_back(std::move(is));
    }
    return it->second;
  }

  int expand(int hist, TypeId red_type, TypeId blue_type) {
    const auto node = s.arena.at(hist);  // by value: child() below may grow the arena
    if (is_terminal(s.game, node.position, blue_type)) {
      g.terminals.push_back({hist, node.cost});
      return ~static_cast<int>(g.terminals.size() - 1);
    }
    if (node.depth >= s.bounds.depth_cap)
      throw DepthCapExceeded("restricted game grew past " + std::to_string(s.bounds.depth_cap) +
                             " plies");
    if (g.nodes.size() + g.terminals.size() > budget)
      throw SizeLimitExceeded("restricted game exceeded the node budget");

    Player mover = node.parity == 0 ? Player::blue : Player::red;
    TypeId type = mover == Player::blue ? blue_type : red_type;
    std::vector<int> actions = restricted_action_set(
        s, mover, type, hist, mover == Player::blue ? blue_pop : red_pop);
    int infoset = intern_infoset(mover, type, hist, actions);

    int id = static_cast<int>(g.nodes.size());
    g.nodes.push_back({});
    {
      TreeGame::Node& n = g.nodes[id];
      n.hist = hist;
      n.mover = mover;
      n.infoset = infoset;
      n.children.resize(actions.size());
      n.edge_cost.resize(actions.size());
    }
    g.infosets[idx(mover)][infoset].nodes.push_back(id);
    GameState st = s.arena.state(hist);
    for (size_t i = 0; i < actions.size(); ++i) {
      double cost = stage_cost(s.game, st, actions[i]);
      int child_hist = s.arena.child(s.game, hist, actions[i]);
      int child = expand(child_hist, red_type, blue_type);
      g.nodes[id].children[i] = child;
      g.nodes[id].edge_cost[i] = cost;
    }
    return id;
  }
};

}  // namespace

TreeGame build_restricted_game(Session& s, const std::vector<PureStrategy>& red_population,
                               const std::vector<PureStrategy>& blue_population,
                               std::size_t node_budget) {
  Builder b{s, red_population, blue_population, node_budget, {}};
  for (TypeId r = 0; r < s.game.red_type_count(); ++r) {
    for (TypeId bl = 0; bl < s.game.blue_type_count(); ++bl) {
      TreeGame::Branch branch;
      branch.prob = s.game.spec.red_types[r].prior * s.game.spec.blue_types[bl].prior;
      branch.red_type = r;
      branch.blue_type = bl;
      branch.child = b.expand(s.arena.root(), r, bl);
      b.g.branches.push_back(branch);
    }
  }
  return std::move(b.g);
}

BehavioralStrategy policy_to_strategy(const TreeGame& g, const TreePolicy& policy, Player player) {
  BehavioralStrategy strat;
  strat.player = player;
  const auto& sets = g.infosets[idx(player)];
  for (size_t i = 0; i < sets.size(); ++i) {
    BehavioralStrategy::Entry entry;
    entry.actions = sets[i].actions;
    entry.probs = policy[idx(player)][i];
    strat.table[iskey(sets[i].type, sets[i].hist)] = std::move(entry);
  }
  return strat;
}

}  // namespace agt
