#include "agt/best_response.hpp"

#include <algorithm>
#include <unordered_set>

#include "agt/evaluate.hpp"

namespace agt {

namespace {

// Cheapest next hop toward the type's goals on the fixed graph k.
NodeId frozen_step(const Session& s, NodeId pos, GraphId k, TypeId blue_type) {
  const std::vector<double>& dist = s.goal_dist[k - 1][blue_type];
  double best = kInf;
  NodeId pick = -1;
  for (NodeId nxt : s.game.out.neighbors(pos)) {
    if (nxt == pos) continue;
    double score = s.game.weight_between(k, pos, nxt) + dist[nxt];
    if (score < best || (score == best && nxt < pick)) {
      best = score;
      pick = nxt;
    }
  }
  return pick;
}

// Cost of walking the Blue default from pos with the graph frozen at k.
double default_walk_cost(const Session& s, NodeId pos, GraphId k, TypeId blue_type) {
  double cost = 0;
  NodeId p = pos;
  while (!is_terminal(s.game, p, blue_type)) {
    NodeId nxt = blue_default_action(s.game, s.dbar, {p, k, 0}, blue_type);
    cost += s.game.weight_between(k, p, nxt);
    p = nxt;
  }
  return cost;
}

struct BlueBr {
  Session& s;
  const BehavioralStrategy& red;
  BrOptions opts;
  TypeId blue_type = 0;
  long visited = 0;
  std::unordered_map<ISKey, int> choice;            // staged picks per (type, hist)
  std::unordered_set<ISKey> red_mapped_below;       // (red type, hist) with mapped keys in the subtree

  BlueBr(Session& session, const BehavioralStrategy& opponent, BrOptions options)
      : s(session), red(opponent), opts(options) {
    for (const auto& [key, entry] : red.table) {
      (void)entry;
      TypeId type = static_cast<TypeId>(key >> 40);
      int hist = static_cast<int>(key & ((1ull << 40) - 1));
      for (int h = hist; h >= 0; h = s.arena.at(h).parent)
        if (!red_mapped_below.insert(iskey(type, h)).second) break;
    }
  }

  bool frozen(int hist, const std::vector<double>& w) const {
    for (TypeId r = 0; r < s.game.red_type_count(); ++r)
      if (w[r] > 0 && red_mapped_below.count(iskey(r, hist))) return false;
    return true;
  }

  double solve(int hist, const std::vector<double>& w) {
    ++visited;
    const auto node = s.arena.at(hist);  // by value: child() below may grow the arena
    if (is_terminal(s.game, node.position, blue_type)) return 0;
    double mass = 0;
    for (double x : w) mass += x;
    if (mass <= 0) return 0;

    if (node.parity == 0) {
      if (node.depth >= s.bounds.depth_cap)
        return mass * default_walk_cost(s, node.position, node.graph, blue_type);
      double best = kInf;
      int best_action = -1;
      for (NodeId a : legal_actions(s.game, {node.position, node.graph, 0}, Player::blue, 0)) {
        double v = mass * s.game.weight_between(node.graph, node.position, a) +
                   solve(s.arena.child(s.game, hist, a), w);
        if (v < best) {
          best = v;
          best_action = a;
        }
      }
      choice[iskey(blue_type, hist)] = best_action;
      return best;
    }

    if (opts.frozen_closed_form && frozen(hist, w))
      return mass * s.goal_dist[node.graph - 1][blue_type][node.position];
    double v = 0;
    // Expand once per action in the union of the live types' supports.
    std::vector<int> actions;
    std::vector<std::vector<double>> weights;
    for (TypeId r = 0; r < s.game.red_type_count(); ++r) {
      if (w[r] <= 0) continue;
      BehavioralStrategy::Entry entry = red.act(s, r, hist);
      for (size_t i = 0; i < entry.actions.size(); ++i) {
        if (entry.probs[i] <= 0) continue;
        auto it = std::find(actions.begin(), actions.end(), entry.actions[i]);
        size_t slot;
        if (it == actions.end()) {
          actions.push_back(entry.actions[i]);
          weights.emplace_back(w.size(), 0.0);
          slot = actions.size() - 1;
        } else {
          slot = static_cast<size_t>(it - actions.begin());
        }
        weights[slot][r] = w[r] * entry.probs[i];
      }
    }
    std::vector<size_t> order(actions.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return actions[x] < actions[y]; });
    for (size_t i : order) v += solve(s.arena.child(s.game, hist, actions[i]), weights[i]);
    return v;
  }

  // Records the picks along play, including the frozen-graph shortest path.
  void mark(int hist, const std::vector<double>& w, PureStrategy& out) {
    const auto node = s.arena.at(hist);  // by value: child() below may grow the arena
    if (is_terminal(s.game, node.position, blue_type)) return;
    double mass = 0;
    for (double x : w) mass += x;
    if (mass <= 0) return;

    if (node.parity == 0) {
      auto it = choice.find(iskey(blue_type, hist));
      if (it == choice.end()) return;  // depth-capped leaf: defaults from here on
      out.set(s, blue_type, hist, it->second);
      mark(s.arena.child(s.game, hist, it->second), w, out);
      return;
    }

    if (opts.frozen_closed_form && frozen(hist, w)) {
      // Red stays forever; record the shortest-path walk on the frozen graph.
      int h = hist;
      NodeId pos = node.position;
      while (!is_terminal(s.game, pos, blue_type)) {
        h = s.arena.child(s.game, h, s.arena.at(h).graph);  // red stays
        NodeId nxt = frozen_step(s, pos, node.graph, blue_type);
        if (nxt < 0) break;
        out.set(s, blue_type, h, nxt);
        h = s.arena.child(s.game, h, nxt);
        pos = nxt;
      }
      return;
    }
    std::vector<int> actions;
    std::vector<std::vector<double>> weights;
    for (TypeId r = 0; r < s.game.red_type_count(); ++r) {
      if (w[r] <= 0) continue;
      BehavioralStrategy::Entry entry = red.act(s, r, hist);
      for (size_t i = 0; i < entry.actions.size(); ++i) {
        if (entry.probs[i] <= 0) continue;
        auto it = std::find(actions.begin(), actions.end(), entry.actions[i]);
        size_t slot;
        if (it == actions.end()) {
          actions.push_back(entry.actions[i]);
          weights.emplace_back(w.size(), 0.0);
          slot = actions.size() - 1;
        } else {
          slot = static_cast<size_t>(it - actions.begin());
        }
        weights[slot][r] = w[r] * entry.probs[i];
      }
    }
    for (size_t i = 0; i < actions.size(); ++i)
      mark(s.arena.child(s.game, hist, actions[i]), weights[i], out);
  }
};

struct RedBr {
  Session& s;
  const BehavioralStrategy& blue;
  TypeId red_type = 0;
  long visited = 0;
  std::unordered_map<ISKey, int> choice{};

  double solve(int hist, std::vector<double> w) {
    ++visited;
    const auto node = s.arena.at(hist);  // by value: child() below may grow the arena
    double mass = 0;
    for (TypeId b = 0; b < s.game.blue_type_count(); ++b) {
      if (w[b] > 0 && is_terminal(s.game, node.position, b)) w[b] = 0;
      mass += w[b];
    }
    if (mass <= 0) return 0;
    if (node.depth >= s.bounds.depth_cap)
      throw DepthCapExceeded("red best response ran past the depth cap");

    if (node.parity == 0) {
      std::vector<int> actions;
      std::vector<std::vector<double>> weights;
      for (TypeId b = 0; b < s.game.blue_type_count(); ++b) {
        if (w[b] <= 0) continue;
        BehavioralStrategy::Entry entry = blue.act(s, b, hist);
        for (size_t i = 0; i < entry.actions.size(); ++i) {
          if (entry.probs[i] <= 0) continue;
          auto it = std::find(actions.begin(), actions.end(), entry.actions[i]);
          size_t slot;
          if (it == actions.end()) {
            actions.push_back(entry.actions[i]);
            weights.emplace_back(w.size(), 0.0);
            slot = actions.size() - 1;
          } else {
            slot = static_cast<size_t>(it - actions.begin());
          }
          weights[slot][b] = w[b] * entry.probs[i];
        }
      }
      double v = 0;
      for (size_t i = 0; i < actions.size(); ++i) {
        double wa_mass = 0;
        for (double x : weights[i]) wa_mass += x;
        v += wa_mass * s.game.weight_between(node.graph, node.position, actions[i]) +
             solve(s.arena.child(s.game, hist, actions[i]), weights[i]);
      }
      return v;
    }

    double best = -kInf;
    int best_action = -1;
    for (GraphId a : legal_actions(s.game, {node.position, node.graph, 1}, Player::red, red_type)) {
      double v = solve(s.arena.child(s.game, hist, a), w);
      if (v > best) {
        best = v;
        best_action = a;
      }
    }
    choice[iskey(red_type, hist)] = best_action;
    return best;
  }

  void mark(int hist, std::vector<double> w, PureStrategy& out) {
    const auto node = s.arena.at(hist);  // by value: child() below may grow the arena
    double mass = 0;
    for (TypeId b = 0; b < s.game.blue_type_count(); ++b) {
      if (w[b] > 0 && is_terminal(s.game, node.position, b)) w[b] = 0;
      mass += w[b];
    }
    if (mass <= 0) return;

    if (node.parity == 0) {
      std::vector<int> actions;
      std::vector<std::vector<double>> weights;
      for (TypeId b = 0; b < s.game.blue_type_count(); ++b) {
        if (w[b] <= 0) continue;
        BehavioralStrategy::Entry entry = blue.act(s, b, hist);
        for (size_t i = 0; i < entry.actions.size(); ++i) {
          if (entry.probs[i] <= 0) continue;
          auto it = std::find(actions.begin(), actions.end(), entry.actions[i]);
          size_t slot;
          if (it == actions.end()) {
            actions.push_back(entry.actions[i]);
            weights.emplace_back(w.size(), 0.0);
            slot = actions.size() - 1;
          } else {
            slot = static_cast<size_t>(it - actions.begin());
          }
          weights[slot][b] = w[b] * entry.probs[i];
        }
      }
      for (size_t i = 0; i < actions.size(); ++i)
        mark(s.arena.child(s.game, hist, actions[i]), weights[i], out);
      return;
    }

    auto it = choice.find(iskey(red_type, hist));
    if (it == choice.end()) return;
    out.set(s, red_type, hist, it->second);
    mark(s.arena.child(s.game, hist, it->second), w, out);
  }
};

}  // namespace

BestResponseResult best_response(Session& s, Player responder, const BehavioralStrategy& opponent,
                                 BrOptions opts) {
  BestResponseResult result;
  result.strategy.player = responder;

  if (responder == Player::blue) {
    if (opponent.player != Player::red) throw ConfigInvalid("blue best response needs a red opponent");
    BlueBr br(s, opponent, opts);
    double total = 0;
    for (TypeId b = 0; b < s.game.blue_type_count(); ++b) {
      br.blue_type = b;
      std::vector<double> w;
      for (const auto& rt : s.game.spec.red_types) w.push_back(rt.prior);
      double v = br.solve(s.arena.root(), w);
      total += s.game.spec.blue_types[b].prior * v;
      br.mark(s.arena.root(), w, result.strategy);
    }
    result.value = -total;
    result.nodes_visited = br.visited;
    return result;
  }

  if (opponent.player != Player::blue) throw ConfigInvalid("red best response needs a blue opponent");
  RedBr br{s, opponent};
  double total = 0;
  for (TypeId r = 0; r < s.game.red_type_count(); ++r) {
    br.red_type = r;
    std::vector<double> w;
    for (const auto& bt : s.game.spec.blue_types) w.push_back(bt.prior);
    double v = br.solve(s.arena.root(), w);
    total += s.game.spec.red_types[r].prior * v;
    br.mark(s.arena.root(), w, result.strategy);
  }
  result.value = total;
  result.nodes_visited = br.visited;
  return result;
}

std::pair<double, double> full_exploitability(Session& s, const BehavioralStrategy& red,
                                              const BehavioralStrategy& blue) {
  double j = evaluate_profile(s, red, blue);
  double br_red = best_response(s, Player::red, blue).value;
  double br_blue = best_response(s, Player::blue, red).value;
  return {br_red - j, br_blue + j};
}

}  // namespace agt
