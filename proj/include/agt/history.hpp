#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "agt/game.hpp"

namespace agt {

// Interned public histories. Every distinct action sequence from the root gets
// exactly one id; the derived state and accumulated Blue cost are stored once.
class HistoryArena {
 public:
  struct Node {
    int parent = -1;
    int action = -1;
    NodeId position = 0;
    GraphId graph = 0;
    int parity = 0;
    double cost = 0;  // Blue cost accumulated from the root
    int depth = 0;    // plies from the root
    int first_child = -1;
    int next_sibling = -1;
  };

  explicit HistoryArena(const ValidatedGame& g) {
    Node root;
    root.position = g.spec.start_position;
    root.graph = g.spec.start_graph;
    nodes_.push_back(root);
  }

  int root() const { return 0; }
  const Node& at(int h) const { return nodes_[h]; }
  size_t size() const { return nodes_.size(); }

  GameState state(int h) const {
    const Node& n = nodes_[h];
    return {n.position, n.graph, n.parity};
  }

  int find_child(int h, int action) const {
    for (int c = nodes_[h].first_child; c >= 0; c = nodes_[c].next_sibling)
      if (nodes_[c].action == action) return c;
    return -1;
  }

  // Interns the successor history, deriving state and cost on first visit.
  int child(const ValidatedGame& g, int h, int action) {
    int existing = find_child(h, action);
    if (existing >= 0) return existing;
    GameState cur = state(h);
    GameState nxt = apply_action(g, cur, action);
    Node n;
    n.parent = h;
    n.action = action;
    n.position = nxt.position;
    n.graph = nxt.graph;
    n.parity = nxt.parity;
    n.cost = nodes_[h].cost + stage_cost(g, cur, action);
    n.depth = nodes_[h].depth + 1;
    int id = static_cast<int>(nodes_.size());
    n.next_sibling = nodes_[h].first_child;
    nodes_.push_back(n);
    nodes_[h].first_child = id;
    return id;
  }

  std::vector<int> actions_from_root(int h) const {
    std::vector<int> actions;
    for (int cur = h; cur > 0; cur = nodes_[cur].parent) actions.push_back(nodes_[cur].action);
    std::reverse(actions.begin(), actions.end());
    return actions;
  }

  int intern_path(const ValidatedGame& g, std::span<const int> actions) {
    int h = root();
    for (int a : actions) h = child(g, h, a);
    return h;
  }

 private:
  std::vector<Node> nodes_;
};

// Everything a solve needs: the validated game plus derived tables and the
// shared history arena all strategies key into.
struct Session {
  ValidatedGame game;
  DistanceTable dbar;
  HorizonBounds bounds;
  HistoryArena arena;
  std::vector<std::vector<std::vector<double>>> goal_dist;  // [graph k-1][blue type][node]

  explicit Session(GameSpec spec)
      : game(validate_spec(std::move(spec))),
        dbar(max_weight_distances(game)),
        bounds(horizon_bounds(game, dbar)),
        arena(game) {
    goal_dist.resize(game.graphs());
    for (int k = 1; k <= game.graphs(); ++k) {
      goal_dist[k - 1].resize(game.blue_type_count());
      for (int b = 0; b < game.blue_type_count(); ++b)
        goal_dist[k - 1][b] = goal_distances(game, k, b);
    }
  }
};

}  // namespace agt
