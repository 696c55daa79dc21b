#include "agt/cfr.hpp"

#include <algorithm>
#include <cmath>

namespace agt {

namespace {

double policy_value(const TreeGame& g, const TreePolicy& policy, int child) {
  if (child < 0) return g.terminals[~child].cost;
  const TreeGame::Node& n = g.nodes[child];
  const std::vector<double>& sigma = policy[idx(n.mover)][n.infoset];
  double v = 0;
  for (size_t a = 0; a < sigma.size(); ++a)
    if (sigma[a] > 0) v += sigma[a] * policy_value(g, policy, n.children[a]);
  return v;
}

// Best response inside the tree. Reach weights of the opponent and chance are
// fixed by the policy, so each info set's action can be chosen by aggregating
// its nodes' weighted continuation values.
struct TreeBr {
  const TreeGame& g;
  const TreePolicy& policy;
  Player responder;
  std::vector<double> node_weight;
  std::vector<int> br_action;

  TreeBr(const TreeGame& game, const TreePolicy& pol, Player resp)
      : g(game), policy(pol), responder(resp) {
    node_weight.assign(g.nodes.size(), 0.0);
    br_action.assign(g.infosets[idx(responder)].size(), -1);
    for (const auto& branch : g.branches) push_weights(branch.child, branch.prob);
  }

  void push_weights(int child, double w) {
    if (child < 0) return;
    const TreeGame::Node& n = g.nodes[child];
    node_weight[child] += w;
    if (n.mover == responder) {
      for (int c : n.children) push_weights(c, w);
    } else {
      const std::vector<double>& sigma = policy[idx(n.mover)][n.infoset];
      for (size_t a = 0; a < sigma.size(); ++a) push_weights(n.children[a], w * sigma[a]);
    }
  }

  void resolve(int infoset) {
    if (br_action[infoset] >= 0) return;
    const TreeGame::InfoSet& is = g.infosets[idx(responder)][infoset];
    int best = 0;
    double best_q = 0;
    for (size_t a = 0; a < is.actions.size(); ++a) {
      double q = 0;
      for (int m : is.nodes) q += node_weight[m] * value(g.nodes[m].children[a]);
      bool better = responder == Player::red ? q > best_q : q < best_q;
      if (a == 0 || better) {
        best = static_cast<int>(a);
        best_q = q;
      }
    }
    br_action[infoset] = best;
  }

  double value(int child) {
    if (child < 0) return g.terminals[~child].cost;
    const TreeGame::Node& n = g.nodes[child];
    if (n.mover == responder) {
      resolve(n.infoset);
      return value(n.children[br_action[n.infoset]]);
    }
    const std::vector<double>& sigma = policy[idx(n.mover)][n.infoset];
    double v = 0;
    for (size_t a = 0; a < sigma.size(); ++a)
      if (sigma[a] > 0) v += sigma[a] * value(n.children[a]);
    return v;
  }

  double run() {
    double v = 0;
    for (const auto& branch : g.branches) v += branch.prob * value(branch.child);
    return v;
  }
};

struct CfrState {
  std::array<std::vector<std::vector<double>>, 2> regret;
  std::array<std::vector<std::vector<double>>, 2> strat_sum;

  explicit CfrState(const TreeGame& g) {
    for (int p = 0; p < 2; ++p) {
      regret[p].resize(g.infosets[p].size());
      strat_sum[p].resize(g.infosets[p].size());
      for (size_t i = 0; i < g.infosets[p].size(); ++i) {
        regret[p][i].assign(g.infosets[p][i].actions.size(), 0.0);
        strat_sum[p][i].assign(g.infosets[p][i].actions.size(), 0.0);
      }
    }
  }

  void current(int p, int infoset, std::vector<double>& out) const {
    const std::vector<double>& r = regret[p][infoset];
    out.resize(r.size());
    double sum = 0;
    for (size_t a = 0; a < r.size(); ++a) {
      out[a] = r[a] > 0 ? r[a] : 0.0;
      sum += out[a];
    }
    if (sum > 0)
      for (double& x : out) x /= sum;
    else
      std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(r.size()));
  }

  TreePolicy average(const TreeGame&) const {
    TreePolicy avg;
    for (int p = 0; p < 2; ++p) {
      avg[p].resize(strat_sum[p].size());
      for (size_t i = 0; i < strat_sum[p].size(); ++i) {
        const std::vector<double>& s = strat_sum[p][i];
        double sum = 0;
        for (double x : s) sum += x;
        avg[p][i].resize(s.size());
        if (sum > 0)
          for (size_t a = 0; a < s.size(); ++a) avg[p][i][a] = s[a] / sum;
        else
          std::fill(avg[p][i].begin(), avg[p][i].end(), 1.0 / static_cast<double>(s.size()));
      }
    }
    return avg;
  }
};

struct CfrRun {
  const TreeGame& g;
  CfrState state;
  int iteration = 0;

  explicit CfrRun(const TreeGame& game) : g(game), state(game) {}

  // Returns expected J of the subtree under the current policies while
  // accumulating regrets and average-strategy weight for `u`.
  double walk(int child, Player u, double pi_me, double pi_other) {
    if (child < 0) return g.terminals[~child].cost;
    const TreeGame::Node& n = g.nodes[child];
    int p = idx(n.mover);
    std::vector<double> sigma;
    state.current(p, n.infoset, sigma);
    if (n.mover != u) {
      double v = 0;
      for (size_t a = 0; a < sigma.size(); ++a)
        v += sigma[a] * walk(n.children[a], u, pi_me, pi_other * sigma[a]);
      return v;
    }
    std::vector<double> va(sigma.size());
    double v = 0;
    for (size_t a = 0; a < sigma.size(); ++a) {
      va[a] = walk(n.children[a], u, pi_me * sigma[a], pi_other);
      v += sigma[a] * va[a];
    }
    double sign = u == Player::red ? 1.0 : -1.0;
    std::vector<double>& reg = state.regret[p][n.infoset];
    std::vector<double>& sum = state.strat_sum[p][n.infoset];
    double weight = static_cast<double>(iteration);
    for (size_t a = 0; a < sigma.size(); ++a) {
      reg[a] += pi_other * sign * (va[a] - v);
      sum[a] += weight * pi_me * sigma[a];
    }
    return v;
  }
};

}  // namespace

double tree_value(const TreeGame& g, const TreePolicy& policy) {
  double v = 0;
  for (const auto& branch : g.branches) v += branch.prob * policy_value(g, policy, branch.child);
  return v;
}

double tree_best_response_value(const TreeGame& g, const TreePolicy& policy, Player responder) {
  TreeBr br(g, policy, responder);
  return br.run();
}

std::pair<double, double> restricted_exploitability(const TreeGame& g, const TreePolicy& policy) {
  double j = tree_value(g, policy);
  double gap_red = tree_best_response_value(g, policy, Player::red) - j;
  double gap_blue = j - tree_best_response_value(g, policy, Player::blue);
  return {gap_red, gap_blue};
}

CfrResult cfr_solve(const TreeGame& g, const CfrConfig& cfg) {
  if (cfg.epsilon <= 0 || cfg.max_iterations < 1 || cfg.check_period < 1)
    throw ConfigInvalid("cfr_solve needs epsilon > 0 and positive budgets");
  CfrRun run(g);
  double best_gap = kInf;
  for (int t = 1; t <= cfg.max_iterations; ++t) {
    run.iteration = t;
    for (Player u : {Player::blue, Player::red})
      for (const auto& branch : g.branches) run.walk(branch.child, u, 1.0, branch.prob);
    if (t % cfg.check_period == 0) {
      TreePolicy avg = run.state.average(g);
      auto [gap_red, gap_blue] = restricted_exploitability(g, avg);
      best_gap = std::min(best_gap, std::max(gap_red, gap_blue));
      if (std::max(gap_red, gap_blue) <= cfg.epsilon) {
        CfrResult result;
        result.average = std::move(avg);
        result.value = tree_value(g, result.average);
        result.gap_red = gap_red;
        result.gap_blue = gap_blue;
        result.iterations = t;
        return result;
      }
    }
  }
  throw IterationBudgetExhausted("cfr_solve: gap " + std::to_string(best_gap) + " > " +
                                     std::to_string(cfg.epsilon) + " after " +
                                     std::to_string(cfg.max_iterations) + " iterations",
                                 best_gap, cfg.max_iterations);
}

}  // namespace agt
