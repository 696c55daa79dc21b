#include "agt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>

namespace agt {

namespace {

constexpr ISKey kHistMask = (1ull << 40) - 1;

}  // namespace

BeliefUpdateResult belief_update(const Session& s, const BeliefVector& prior,
                                 const BehavioralStrategy& acting, int hist, int action) {
  const NodeId pos = s.arena.at(hist).position;
  BeliefUpdateResult r;
  r.posterior.assign(prior.size(), 0.0);
  double z = 0;
  bool identity = true;  // every live type plays the action with probability one
  for (size_t t = 0; t < prior.size(); ++t) {
    if (prior[t] <= 0) continue;
    if (acting.player == Player::blue && is_terminal(s.game, pos, static_cast<TypeId>(t))) {
      identity = false;
      continue;
    }
    double gamma = acting.prob_of(s, static_cast<TypeId>(t), hist, action);
    if (gamma != 1.0) identity = false;
    r.posterior[t] = prior[t] * gamma;
    z += r.posterior[t];
  }
  if (identity && z > 0) {
    // An observation no type could have avoided carries no information; keep
    // the prior bit for bit instead of renormalizing through z.
    r.posterior = prior;
    return r;
  }
  if (z <= 0) {
    r.posterior = prior;
    r.off_support = true;
    return r;
  }
  for (double& x : r.posterior) x /= z;
  return r;
}

std::vector<BeliefRow> belief_trajectories(Session& s, const BehavioralStrategy& red,
                                           const BehavioralStrategy& blue) {
  if (red.player != Player::red || blue.player != Player::blue)
    throw ConfigInvalid("belief trajectories need a red and a blue strategy");

  struct Item {
    int hist = 0;
    std::vector<double> wr, wb;  // prior times own action probabilities so far
    BeliefVector mu_blue, mu_red;
  };
  Item root;
  root.hist = s.arena.root();
  for (const auto& rt : s.game.spec.red_types) root.wr.push_back(rt.prior);
  for (const auto& bt : s.game.spec.blue_types) root.wb.push_back(bt.prior);
  root.mu_blue = root.wr;
  root.mu_red = root.wb;

  std::deque<Item> queue;
  queue.push_back(std::move(root));
  std::vector<BeliefRow> rows;

  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    const auto node = s.arena.at(it.hist);  // by value: child() below may grow the arena

    BeliefRow row;
    row.hist = it.hist;
    row.t = node.depth;
    row.state = s.arena.state(it.hist);
    double red_mass = 0, blue_mass = 0;
    for (double x : it.wr) red_mass += x;
    for (double x : it.wb) blue_mass += x;
    row.prob = red_mass * blue_mass;
    row.mu_blue = it.mu_blue;
    row.mu_red = it.mu_red;

    std::vector<double> live = it.wb;
    double live_mass = 0;
    for (size_t b = 0; b < live.size(); ++b) {
      if (live[b] > 0 && is_terminal(s.game, node.position, static_cast<TypeId>(b))) live[b] = 0;
      live_mass += live[b];
    }
    row.terminal = live_mass <= 0;
    rows.push_back(row);
    if (row.terminal) continue;
    if (node.depth >= s.bounds.depth_cap)
      throw DepthCapExceeded("belief trajectories ran past the depth cap");

    std::vector<int> actions;
    std::vector<std::vector<double>> forward;
    auto add = [&](int action, size_t type, double mass) {
      auto pos_it = std::find(actions.begin(), actions.end(), action);
      size_t slot;
      if (pos_it == actions.end()) {
        actions.push_back(action);
        forward.emplace_back(node.parity == 0 ? live.size() : it.wr.size(), 0.0);
        slot = actions.size() - 1;
      } else {
        slot = static_cast<size_t>(pos_it - actions.begin());
      }
      forward[slot][type] += mass;
    };
    if (node.parity == 0) {
      for (size_t b = 0; b < live.size(); ++b) {
        if (live[b] <= 0) continue;
        BehavioralStrategy::Entry entry = blue.act(s, static_cast<TypeId>(b), it.hist);
        for (size_t i = 0; i < entry.actions.size(); ++i)
          if (entry.probs[i] > 0) add(entry.actions[i], b, live[b] * entry.probs[i]);
      }
    } else {
      for (size_t r = 0; r < it.wr.size(); ++r) {
        if (it.wr[r] <= 0) continue;
        BehavioralStrategy::Entry entry = red.act(s, static_cast<TypeId>(r), it.hist);
        for (size_t i = 0; i < entry.actions.size(); ++i)
          if (entry.probs[i] > 0) add(entry.actions[i], r, it.wr[r] * entry.probs[i]);
      }
    }
    std::vector<size_t> order(actions.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return actions[x] < actions[y]; });
    for (size_t i : order) {
      Item child;
      child.hist = s.arena.child(s.game, it.hist, actions[i]);
      if (node.parity == 0) {
        child.wr = it.wr;
        child.wb = forward[i];
        child.mu_blue = it.mu_blue;
        child.mu_red = belief_update(s, it.mu_red, blue, it.hist, actions[i]).posterior;
      } else {
        child.wr = forward[i];
        child.wb = live;
        child.mu_blue = belief_update(s, it.mu_blue, red, it.hist, actions[i]).posterior;
        child.mu_red = it.mu_red;
      }
      queue.push_back(std::move(child));
    }
  }
  return rows;
}

ShapleyResult shapley_value_iteration(const ValidatedGame& g, double tol, int max_sweeps) {
  if (g.red_type_count() != 1 || g.blue_type_count() != 1)
    throw ConfigInvalid("value iteration covers the single-type game only");
  const int n = g.nodes();
  const int kcount = g.graphs();
  const std::vector<char>& goal = g.goal[0];

  ShapleyResult r;
  r.v.assign(n + 1, std::vector<double>(kcount, 0.0));
  r.w.assign(n + 1, std::vector<double>(kcount, 0.0));

  bool settled = false;
  while (r.sweeps < max_sweeps && !settled) {
    ++r.sweeps;
    double delta = 0;
    for (NodeId p = 1; p <= n; ++p) {
      if (goal[p]) continue;
      for (GraphId k = 1; k <= kcount; ++k) {
        double best = -kInf;
        for (GraphId k2 : g.red_out[0].neighbors(k)) best = std::max(best, r.v[p][k2 - 1]);
        delta = std::max(delta, std::abs(best - r.w[p][k - 1]));
        r.w[p][k - 1] = best;
      }
      for (GraphId k = 1; k <= kcount; ++k) {
        double best = kInf;
        for (NodeId a : g.out.neighbors(p))
          best = std::min(best, g.weight_between(k, p, a) + r.w[a][k - 1]);
        delta = std::max(delta, std::abs(best - r.v[p][k - 1]));
        r.v[p][k - 1] = best;
      }
    }
    settled = delta <= tol;
  }
  if (!settled) throw NonConvergence("value iteration did not settle within the sweep budget");

  r.blue_policy.assign(n + 1, std::vector<NodeId>(kcount, -1));
  r.red_policy.assign(n + 1, std::vector<GraphId>(kcount, -1));
  for (NodeId p = 1; p <= n; ++p) {
    if (goal[p]) continue;
    for (GraphId k = 1; k <= kcount; ++k) {
      double best = kInf;
      for (NodeId a : g.out.neighbors(p)) {
        double cand = g.weight_between(k, p, a) + r.w[a][k - 1];
        if (cand < best) {
          best = cand;
          r.blue_policy[p][k - 1] = a;
        }
      }
      double worst = -kInf;
      for (GraphId k2 : g.red_out[0].neighbors(k)) {
        if (r.v[p][k2 - 1] > worst) {
          worst = r.v[p][k2 - 1];
          r.red_policy[p][k - 1] = k2;
        }
      }
    }
  }
  r.start_value = r.v[g.spec.start_position][g.spec.start_graph - 1];
  return r;
}

namespace {

// Depth-capped expansion of the full game with every legal action available
// until the cap, then the defaults alone. Independent of the restricted-game
// builder on purpose.
struct CappedBuilder {
  Session& s;
  std::size_t budget;
  TreeGame g;

  int intern_infoset(Player p, TypeId type, int hist, std::vector<int> actions) {
    auto& index = g.infoset_index[idx(p)];
    auto [it, fresh] =
        index.try_emplace(iskey(type, hist), static_cast<int>(g.infosets[idx(p)].size()));
    if (fresh) {
      TreeGame::InfoSet is;
      is.type = type;
      is.hist = hist;
      is.actions = std::move(actions);
      g.infosets[idx(p)].push_back(std::move(is));
    }
    return it->second;
  }

  int expand(int hist, TypeId red_type, TypeId blue_type) {
    const auto node = s.arena.at(hist);  // by value: child() below may grow the arena
    if (is_terminal(s.game, node.position, blue_type)) {
      g.terminals.push_back({hist, node.cost});
      return ~static_cast<int>(g.terminals.size() - 1);
    }
    if (g.nodes.size() + g.terminals.size() >= budget)
      throw SizeLimitExceeded("capped game tree exceeded its node budget");

    Player mover = node.parity == 0 ? Player::blue : Player::red;
    TypeId own = mover == Player::blue ? blue_type : red_type;
    std::vector<int> actions;
    if (node.depth >= s.bounds.depth_cap)
      actions = {default_action(s, mover, own, hist)};
    else
      actions = legal_actions(s.game, s.arena.state(hist), mover, own);

    int id = static_cast<int>(g.nodes.size());
    TreeGame::Node tn;
    tn.hist = hist;
    tn.mover = mover;
    tn.infoset = intern_infoset(mover, own, hist, actions);
    g.nodes.push_back(std::move(tn));
    g.infosets[idx(mover)][g.nodes[id].infoset].nodes.push_back(id);

    std::vector<int> children;
    std::vector<double> costs;
    children.reserve(actions.size());
    costs.reserve(actions.size());
    for (int a : actions) {
      costs.push_back(stage_cost(s.game, s.arena.state(hist), a));
      children.push_back(expand(s.arena.child(s.game, hist, a), red_type, blue_type));
    }
    g.nodes[id].children = std::move(children);
    g.nodes[id].edge_cost = std::move(costs);
    return id;
  }
};

// Regret-matching+ with alternating updates and quadratically weighted
// averages; the solve is accepted only once its own best responses agree.
struct PlusSolver {
  const TreeGame& g;
  TreePolicy regret;
  TreePolicy sum;

  explicit PlusSolver(const TreeGame& game) : g(game) {
    for (int p = 0; p < 2; ++p) {
      regret[p].resize(g.infosets[p].size());
      sum[p].resize(g.infosets[p].size());
      for (size_t i = 0; i < g.infosets[p].size(); ++i) {
        regret[p][i].assign(g.infosets[p][i].actions.size(), 0.0);
        sum[p][i].assign(g.infosets[p][i].actions.size(), 0.0);
      }
    }
  }

  std::vector<double> current(Player p, int infoset) const {
    const auto& row = regret[idx(p)][infoset];
    double total = 0;
    for (double x : row) total += x;
    std::vector<double> sigma(row.size());
    if (total > 0)
      for (size_t i = 0; i < row.size(); ++i) sigma[i] = row[i] / total;
    else
      std::fill(sigma.begin(), sigma.end(), 1.0 / row.size());
    return sigma;
  }

  TreePolicy average() const {
    TreePolicy avg;
    for (int p = 0; p < 2; ++p) {
      avg[p].resize(sum[p].size());
      for (size_t i = 0; i < sum[p].size(); ++i) {
        const auto& row = sum[p][i];
        double total = 0;
        for (double x : row) total += x;
        avg[p][i].assign(row.size(), 1.0 / row.size());
        if (total > 0)
          for (size_t j = 0; j < row.size(); ++j) avg[p][i][j] = row[j] / total;
      }
    }
    return avg;
  }

  double walk(int enc, Player up, double pi_me, double pi_other, double weight) {
    if (enc < 0) return g.terminals[~enc].cost;
    const auto& n = g.nodes[enc];
    std::vector<double> sigma = current(n.mover, n.infoset);
    if (n.mover != up) {
      double v = 0;
      for (size_t i = 0; i < n.children.size(); ++i)
        v += sigma[i] * walk(n.children[i], up, pi_me, pi_other * sigma[i], weight);
      return v;
    }
    double v = 0;
    std::vector<double> va(n.children.size());
    for (size_t i = 0; i < n.children.size(); ++i) {
      va[i] = walk(n.children[i], up, pi_me * sigma[i], pi_other, weight);
      v += sigma[i] * va[i];
    }
    const double sign = up == Player::red ? 1.0 : -1.0;
    auto& reg = regret[idx(up)][n.infoset];
    auto& acc = sum[idx(up)][n.infoset];
    for (size_t i = 0; i < n.children.size(); ++i) {
      reg[i] = std::max(0.0, reg[i] + pi_other * sign * (va[i] - v));
      acc[i] += weight * pi_me * sigma[i];
    }
    return v;
  }
};

// Best response within a finite tree, chosen per info set against the
// opponent's reach-weighted counterfactual values.
struct TreeExploit {
  const TreeGame& g;
  const TreePolicy& avg;
  Player responder;
  std::vector<double> reach{};
  std::vector<double> memo{};
  std::vector<char> have{};
  std::vector<int> pick{};

  void push(int enc, double w) {
    if (enc < 0) return;
    const auto& n = g.nodes[enc];
    reach[enc] += w;
    if (n.mover == responder) {
      for (int c : n.children) push(c, w);
    } else {
      const auto& sigma = avg[idx(n.mover)][n.infoset];
      for (size_t i = 0; i < n.children.size(); ++i) push(n.children[i], w * sigma[i]);
    }
  }

  int decide(int is_id) {
    if (pick[is_id] >= 0) return pick[is_id];
    const auto& is = g.infosets[idx(responder)][is_id];
    double best = responder == Player::red ? -kInf : kInf;
    int best_i = 0;
    for (size_t i = 0; i < is.actions.size(); ++i) {
      double q = 0;
      for (int m : is.nodes) q += reach[m] * value(g.nodes[m].children[i]);
      if (responder == Player::red ? q > best : q < best) {
        best = q;
        best_i = static_cast<int>(i);
      }
    }
    pick[is_id] = best_i;
    return best_i;
  }

  double value(int enc) {
    if (enc < 0) return g.terminals[~enc].cost;
    if (have[enc]) return memo[enc];
    const auto& n = g.nodes[enc];
    double v = 0;
    if (n.mover == responder) {
      v = value(n.children[decide(n.infoset)]);
    } else {
      const auto& sigma = avg[idx(n.mover)][n.infoset];
      for (size_t i = 0; i < n.children.size(); ++i)
        if (sigma[i] > 0) v += sigma[i] * value(n.children[i]);
    }
    have[enc] = 1;
    memo[enc] = v;
    return v;
  }

  double run() {
    reach.assign(g.nodes.size(), 0.0);
    memo.assign(g.nodes.size(), 0.0);
    have.assign(g.nodes.size(), 0);
    pick.assign(g.infosets[idx(responder)].size(), -1);
    for (const auto& br : g.branches) push(br.child, br.prob);
    double j = 0;
    for (const auto& br : g.branches) j += br.prob * value(br.child);
    return j;
  }
};

}  // namespace

double brute_force_value(const GameSpec& spec, std::size_t node_budget, double gap) {
  if (!(gap > 0)) throw ConfigInvalid("gap target must be positive");
  Session s(spec);
  CappedBuilder builder{s, node_budget, {}};
  for (TypeId r = 0; r < s.game.red_type_count(); ++r)
    for (TypeId b = 0; b < s.game.blue_type_count(); ++b) {
      double prob = s.game.spec.red_types[r].prior * s.game.spec.blue_types[b].prior;
      int child = builder.expand(s.arena.root(), r, b);
      builder.g.branches.push_back({prob, r, b, child});
    }

  const TreeGame& g = builder.g;
  PlusSolver solver(g);
  const int max_iterations = 200'000;
  const int check_period = 25;
  for (int tau = 1; tau <= max_iterations; ++tau) {
    const double weight = static_cast<double>(tau) * static_cast<double>(tau);
    for (Player up : {Player::blue, Player::red})
      for (const auto& br : g.branches) solver.walk(br.child, up, 1.0, br.prob, weight);
    if (tau % check_period == 0) {
      TreePolicy avg = solver.average();
      double j_red = TreeExploit{g, avg, Player::red}.run();
      double j_blue = TreeExploit{g, avg, Player::blue}.run();
      if (j_red - j_blue <= gap) return (j_red + j_blue) / 2;
    }
  }
  throw NonConvergence("capped-tree solve missed its gap target");
}

namespace {

GameSpec sub_spec(const GameSpec& base, int red_type, int blue_type) {
  GameSpec sub = base;
  if (red_type >= 0) {
    sub.red_types = {base.red_types[red_type]};
    sub.red_types[0].prior = 1.0;
  }
  if (blue_type >= 0) {
    sub.blue_types = {base.blue_types[blue_type]};
    sub.blue_types[0].prior = 1.0;
  }
  return sub;
}

XdoResult solve_or_throw(Session& s, const XdoConfig& cfg, const char* what) {
  XdoResult res = xdo_solve(s, cfg);
  if (!res.converged)
    throw NonConvergence(std::string(what) + " solve stopped short of both gap targets");
  return res;
}

std::vector<TypeId> identity_map(int n) {
  std::vector<TypeId> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace

double value_complete_information(const GameSpec& spec, const XdoConfig& cfg) {
  GameSpec base = validate_spec(spec).spec;
  double total = 0;
  for (size_t r = 0; r < base.red_types.size(); ++r)
    for (size_t b = 0; b < base.blue_types.size(); ++b) {
      Session ss(sub_spec(base, static_cast<int>(r), static_cast<int>(b)));
      total += base.red_types[r].prior * base.blue_types[b].prior *
               solve_or_throw(ss, cfg, "complete-information pair").value;
    }
  return total;
}

double value_one_sided(const GameSpec& spec, Player informed, const XdoConfig& cfg) {
  GameSpec base = validate_spec(spec).spec;
  double total = 0;
  if (informed == Player::red) {
    for (size_t b = 0; b < base.blue_types.size(); ++b) {
      Session ss(sub_spec(base, -1, static_cast<int>(b)));
      total += base.blue_types[b].prior * solve_or_throw(ss, cfg, "red-private").value;
    }
  } else {
    for (size_t r = 0; r < base.red_types.size(); ++r) {
      Session ss(sub_spec(base, static_cast<int>(r), -1));
      total += base.red_types[r].prior * solve_or_throw(ss, cfg, "blue-private").value;
    }
  }
  return total;
}

double value_two_sided(const GameSpec& spec, const XdoConfig& cfg) {
  Session ss(spec);
  return solve_or_throw(ss, cfg, "two-sided").value;
}

VoiReport voi_report(double v_ci, double v_1s_red, double v_1s_blue, double v_2s,
                     double epsilon2) {
  if (!(epsilon2 >= 0)) throw ConfigInvalid("epsilon2 must be nonnegative");
  if (!(v_ci > 0) || !(v_1s_red > 0) || !(v_1s_blue > 0) || !(v_2s > 0))
    throw DegenerateValue("value-of-information ratios need positive benchmark values");
  VoiReport rep;
  rep.v_ci = v_ci;
  rep.v_1s_red = v_1s_red;
  rep.v_1s_blue = v_1s_blue;
  rep.v_2s = v_2s;
  rep.voi_1s_red = (v_1s_red - v_ci) / v_ci;
  rep.voi_1s_blue = (v_ci - v_1s_blue) / v_ci;
  rep.voi_2s_red = (v_2s - v_1s_blue) / v_1s_blue;
  rep.voi_2s_blue = (v_1s_red - v_2s) / v_1s_red;
  rep.determinant = v_2s * v_ci - v_1s_red * v_1s_blue;
  rep.guard_band = epsilon2 * (v_ci + v_2s + v_1s_red + v_1s_blue);
  double red_gain = rep.voi_2s_red - rep.voi_1s_red;
  double blue_shortfall = rep.voi_1s_blue - rep.voi_2s_blue;
  rep.ordering_consistent = (red_gain >= 0) == (blue_shortfall >= 0);
  if (std::abs(rep.determinant) <= rep.guard_band)
    rep.verdict = VoiVerdict::indeterminate;
  else
    rep.verdict = rep.ordering_consistent ? VoiVerdict::consistent : VoiVerdict::violated;
  return rep;
}

VoiReport voi_report(const GameSpec& spec, const XdoConfig& cfg) {
  double v_ci = value_complete_information(spec, cfg);
  double v_1s_red = value_one_sided(spec, Player::red, cfg);
  double v_1s_blue = value_one_sided(spec, Player::blue, cfg);
  double v_2s = value_two_sided(spec, cfg);
  return voi_report(v_ci, v_1s_red, v_1s_blue, v_2s, cfg.epsilon2);
}

BehavioralStrategy transfer_strategy(const Session& from, Session& to,
                                     const BehavioralStrategy& strat,
                                     const std::vector<TypeId>& type_map) {
  BehavioralStrategy out;
  out.player = strat.player;
  for (const auto& [key, entry] : strat.table) {
    TypeId type = static_cast<TypeId>(key >> 40);
    int hist = static_cast<int>(key & kHistMask);
    if (type < 0 || static_cast<size_t>(type) >= type_map.size())
      throw StrategyDomainMismatch("transferred entry names a type outside the mapping");
    TypeId renamed = type_map[type];
    int dest_types = out.player == Player::blue ? to.game.blue_type_count()
                                                : to.game.red_type_count();
    if (renamed < 0 || renamed >= dest_types)
      throw StrategyDomainMismatch("type map targets a type the destination game lacks");
    std::vector<int> path = from.arena.actions_from_root(hist);
    int re_hist = to.arena.intern_path(to.game, path);
    out.table[iskey(renamed, re_hist)] = entry;
  }
  return out;
}

DeceptionReport deception_deltas(const GameSpec& spec, const XdoConfig& cfg) {
  GameSpec base = validate_spec(spec).spec;
  const int nr = static_cast<int>(base.red_types.size());
  const int nb = static_cast<int>(base.blue_types.size());

  std::vector<std::vector<std::unique_ptr<Session>>> pair_sessions(nr);
  std::vector<std::vector<XdoResult>> pair_results(nr);
  for (int r = 0; r < nr; ++r)
    for (int b = 0; b < nb; ++b) {
      pair_sessions[r].push_back(std::make_unique<Session>(sub_spec(base, r, b)));
      pair_results[r].push_back(
          solve_or_throw(*pair_sessions[r][b], cfg, "complete-information pair"));
    }

  Session full(base);
  XdoResult two_sided = solve_or_throw(full, cfg, "two-sided");

  double v_1s_blue = 0, exposed_ci_blue = 0, exposed_2s_blue = 0;
  for (int r = 0; r < nr; ++r) {
    Session sr(sub_spec(base, r, -1));
    double v = solve_or_throw(sr, cfg, "blue-private").value;
    BehavioralStrategy ci;
    ci.player = Player::blue;
    for (int b = 0; b < nb; ++b) {
      BehavioralStrategy part = transfer_strategy(*pair_sessions[r][b], sr,
                                                  pair_results[r][b].blue, {static_cast<TypeId>(b)});
      ci.table.insert(part.table.begin(), part.table.end());
    }
    BehavioralStrategy two = transfer_strategy(full, sr, two_sided.blue, identity_map(nb));
    double weight = base.red_types[r].prior;
    v_1s_blue += weight * v;
    exposed_ci_blue += weight * best_response(sr, Player::red, ci).value;
    exposed_2s_blue += weight * best_response(sr, Player::red, two).value;
  }

  double v_1s_red = 0, exposed_ci_red = 0, exposed_2s_red = 0;
  for (int b = 0; b < nb; ++b) {
    Session sb(sub_spec(base, -1, b));
    double v = solve_or_throw(sb, cfg, "red-private").value;
    BehavioralStrategy ci;
    ci.player = Player::red;
    for (int r = 0; r < nr; ++r) {
      BehavioralStrategy part = transfer_strategy(*pair_sessions[r][b], sb,
                                                  pair_results[r][b].red, {static_cast<TypeId>(r)});
      ci.table.insert(part.table.begin(), part.table.end());
    }
    BehavioralStrategy two = transfer_strategy(full, sb, two_sided.red, identity_map(nr));
    double weight = base.blue_types[b].prior;
    v_1s_red += weight * v;
    exposed_ci_red += weight * -best_response(sb, Player::blue, ci).value;
    exposed_2s_red += weight * -best_response(sb, Player::blue, two).value;
  }

  DeceptionReport rep;
  rep.v_1s_blue = v_1s_blue;
  rep.v_1s_red = v_1s_red;
  rep.deltas = {
      {"blue_ci_vs_1s", exposed_ci_blue, v_1s_blue, exposed_ci_blue - v_1s_blue},
      {"blue_ci_vs_2s", exposed_ci_blue, exposed_2s_blue, exposed_ci_blue - exposed_2s_blue},
      {"red_1s_vs_ci", v_1s_red, exposed_ci_red, v_1s_red - exposed_ci_red},
      {"red_2s_vs_ci", exposed_2s_red, exposed_ci_red, exposed_2s_red - exposed_ci_red},
  };
  return rep;
}

}  // namespace agt
