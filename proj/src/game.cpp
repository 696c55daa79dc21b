#include "agt/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

namespace agt {

namespace {

std::string edge_str(const Edge& e) {
  return std::to_string(e.from) + "->" + std::to_string(e.to);
}

Adjacency build_adjacency(int id_count, const std::vector<Edge>& edges) {
  Adjacency a;
  a.row.assign(id_count + 2, 0);
  a.to.resize(edges.size());
  a.eid.resize(edges.size());
  for (const Edge& e : edges) a.row[e.from + 1]++;
  for (int i = 1; i <= id_count + 1; ++i) a.row[i] += a.row[i - 1];
  std::vector<int> cursor(a.row.begin(), a.row.end());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    int slot = cursor[edges[e].from]++;
    a.to[slot] = edges[e].to;
    a.eid[slot] = e;
  }
  return a;
}

Adjacency build_reverse_adjacency(int id_count, const std::vector<Edge>& edges) {
  std::vector<Edge> rev(edges.size());
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  for (size_t e = 0; e < edges.size(); ++e) rev[e] = {edges[e].to, edges[e].from};
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return rev[x] < rev[y]; });
  Adjacency a;
  a.row.assign(id_count + 2, 0);
  a.to.resize(edges.size());
  a.eid.resize(edges.size());
  for (const Edge& e : rev) a.row[e.from + 1]++;
  for (int i = 1; i <= id_count + 1; ++i) a.row[i] += a.row[i - 1];
  std::vector<int> cursor(a.row.begin(), a.row.end());
  for (int o : order) {
    int slot = cursor[rev[o].from]++;
    a.to[slot] = rev[o].to;
    a.eid[slot] = o;
  }
  return a;
}

// Single-source shortest paths; weight(edge_index) must be positive.
template <typename WeightFn>
std::vector<double> dijkstra(int n, const Adjacency& adj, int source, WeightFn weight) {
  std::vector<double> dist(n + 1, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    auto nbrs = adj.neighbors(u);
    auto eids = adj.edge_ids(u);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      double nd = d + weight(eids[i]);
      if (nd < dist[nbrs[i]]) {
        dist[nbrs[i]] = nd;
        heap.emplace(nd, nbrs[i]);
      }
    }
  }
  return dist;
}

// Multi-source over reversed edges: distance from each node TO the closest source.
template <typename WeightFn>
std::vector<double> reverse_dijkstra(int n, const Adjacency& in_adj,
                                     const std::vector<NodeId>& sources, WeightFn weight) {
  std::vector<double> dist(n + 1, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (NodeId s : sources) {
    dist[s] = 0;
    heap.emplace(0.0, s);
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    auto nbrs = in_adj.neighbors(u);
    auto eids = in_adj.edge_ids(u);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      double nd = d + weight(eids[i]);
      if (nd < dist[nbrs[i]]) {
        dist[nbrs[i]] = nd;
        heap.emplace(nd, nbrs[i]);
      }
    }
  }
  return dist;
}

void check_prior_sum(const std::vector<double>& priors, const char* side) {
  double sum = 0;
  for (double p : priors) {
    if (p < 0 || !std::isfinite(p))
      throw PriorNotNormalized(std::string(side) + " prior entries must be finite and nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw PriorNotNormalized(std::string(side) + " priors sum to " + std::to_string(sum));
}

}  // namespace

ValidatedGame validate_spec(const GameSpec& input) {
  ValidatedGame g;
  g.spec = input;
  TerrainGraphFamily& t = g.spec.terrain;

  if (t.node_count < 1) throw ValidationError("terrain needs at least one node");
  if (t.graph_count() < 1) throw ValidationError("terrain needs at least one weight graph");

  for (const Edge& e : t.edges) {
    if (e.from < 1 || e.from > t.node_count || e.to < 1 || e.to > t.node_count)
      throw ValidationError("terrain edge out of range: " + edge_str(e));
  }
  // Sort edges, keeping every weight column aligned.
  {
    std::vector<int> order(t.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return t.edges[a] < t.edges[b]; });
    std::vector<Edge> edges;
    edges.reserve(t.edges.size());
    std::vector<std::vector<double>> weights(t.weights.size());
    for (auto& w : weights) w.reserve(t.edges.size());
    for (int o : order) {
      edges.push_back(t.edges[o]);
      for (size_t k = 0; k < t.weights.size(); ++k) {
        if (t.weights[k].size() != t.edges.size())
          throw ValidationError("graph " + std::to_string(k + 1) + " is missing edge weights");
        weights[k].push_back(t.weights[k][o]);
      }
    }
    t.edges = std::move(edges);
    t.weights = std::move(weights);
  }
  for (size_t e = 1; e < t.edges.size(); ++e)
    if (t.edges[e] == t.edges[e - 1])
      throw ValidationError("duplicate terrain edge " + edge_str(t.edges[e]));
  for (int k = 1; k <= t.graph_count(); ++k) {
    for (size_t e = 0; e < t.edges.size(); ++e) {
      double w = t.weights[k - 1][e];
      if (!(w > 0) || !std::isfinite(w))
        throw NonPositiveWeight("graph " + std::to_string(k) + " edge " + edge_str(t.edges[e]) +
                                " has weight " + std::to_string(w));
    }
  }

  if (g.spec.red_types.empty()) throw ValidationError("at least one Red type required");
  if (g.spec.blue_types.empty()) throw ValidationError("at least one Blue type required");
  {
    std::vector<double> pr, pb;
    for (const auto& rt : g.spec.red_types) pr.push_back(rt.prior);
    for (const auto& bt : g.spec.blue_types) pb.push_back(bt.prior);
    check_prior_sum(pr, "red");
    check_prior_sum(pb, "blue");
  }
  // Drop zero-prior types, remembering the original indices.
  {
    std::vector<RedType> live_r;
    for (int i = 0; i < static_cast<int>(g.spec.red_types.size()); ++i) {
      if (g.spec.red_types[i].prior > 0)
        live_r.push_back(g.spec.red_types[i]);
      else
        g.dropped_red_types.push_back(i);
    }
    std::vector<BlueType> live_b;
    for (int i = 0; i < static_cast<int>(g.spec.blue_types.size()); ++i) {
      if (g.spec.blue_types[i].prior > 0)
        live_b.push_back(g.spec.blue_types[i]);
      else
        g.dropped_blue_types.push_back(i);
    }
    g.spec.red_types = std::move(live_r);
    g.spec.blue_types = std::move(live_b);
  }

  int K = t.graph_count();
  for (size_t r = 0; r < g.spec.red_types.size(); ++r) {
    auto& rt = g.spec.red_types[r];
    std::sort(rt.action_edges.begin(), rt.action_edges.end());
    rt.action_edges.erase(std::unique(rt.action_edges.begin(), rt.action_edges.end()),
                          rt.action_edges.end());
    std::vector<char> has_loop(K + 1, 0);
    for (const Edge& e : rt.action_edges) {
      if (e.from < 1 || e.from > K || e.to < 1 || e.to > K)
        throw ValidationError("red type " + std::to_string(r) + " action edge out of range: " +
                              edge_str(e));
      if (e.from == e.to) has_loop[e.from] = 1;
    }
    for (int k = 1; k <= K; ++k)
      if (!has_loop[k])
        throw MissingSelfLoop("red type " + std::to_string(r) + " lacks self-loop at graph " +
                              std::to_string(k));
  }

  if (g.spec.start_position < 1 || g.spec.start_position > t.node_count)
    throw ValidationError("start position out of range");
  if (g.spec.start_graph < 1 || g.spec.start_graph > K)
    throw ValidationError("start graph out of range");

  g.out = build_adjacency(t.node_count, t.edges);
  g.in = build_reverse_adjacency(t.node_count, t.edges);
  for (const auto& rt : g.spec.red_types)
    g.red_out.push_back(build_adjacency(K, rt.action_edges));

  // Every node must be able to reach some goal of every Blue type.
  g.goal.resize(g.spec.blue_types.size());
  for (size_t b = 0; b < g.spec.blue_types.size(); ++b) {
    auto& bt = g.spec.blue_types[b];
    std::sort(bt.goals.begin(), bt.goals.end());
    bt.goals.erase(std::unique(bt.goals.begin(), bt.goals.end()), bt.goals.end());
    if (bt.goals.empty())
      throw GoalUnreachable("blue type " + std::to_string(b) + " has an empty goal set");
    for (NodeId n : bt.goals)
      if (n < 1 || n > t.node_count)
        throw GoalUnreachable("blue type " + std::to_string(b) + " goal node " +
                              std::to_string(n) + " absent");
    g.goal[b].assign(t.node_count + 1, 0);
    for (NodeId n : bt.goals) g.goal[b][n] = 1;
    // BFS over reversed edges from the goal set.
    std::vector<char> seen(t.node_count + 1, 0);
    std::vector<int> stack(bt.goals.begin(), bt.goals.end());
    for (NodeId n : bt.goals) seen[n] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.in.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    for (int n = 1; n <= t.node_count; ++n)
      if (!seen[n])
        throw GoalUnreachable("node " + std::to_string(n) + " cannot reach any goal of blue type " +
                              std::to_string(b));
  }

  return g;
}

DistanceTable max_weight_distances(const ValidatedGame& g) {
  const TerrainGraphFamily& t = g.spec.terrain;
  std::vector<double> wbar(t.edges.size(), 0);
  for (size_t e = 0; e < t.edges.size(); ++e) {
    double m = 0;
    for (int k = 1; k <= t.graph_count(); ++k) m = std::max(m, g.weight(k, static_cast<int>(e)));
    wbar[e] = m;
  }
  DistanceTable table;
  table.n = t.node_count;
  table.d.resize(static_cast<size_t>(t.node_count) * t.node_count);
  for (int s = 1; s <= t.node_count; ++s) {
    auto dist = dijkstra(t.node_count, g.out, s, [&](int e) { return wbar[e]; });
    for (int j = 1; j <= t.node_count; ++j)
      table.d[static_cast<size_t>(s - 1) * t.node_count + (j - 1)] = dist[j];
  }
  return table;
}

std::vector<double> goal_distances(const ValidatedGame& g, GraphId k, TypeId blue_type) {
  return reverse_dijkstra(g.nodes(), g.in, g.spec.blue_types[blue_type].goals,
                          [&](int e) { return g.weight(k, e); });  // indexed by node id
}

NodeId blue_default_action(const ValidatedGame& g, const DistanceTable& dbar,
                           const GameState& s, TypeId blue_type) {
  if (s.parity != 0) throw IllegalAction("blue_default_action called at Red's turn");
  auto nbrs = g.out.neighbors(s.position);
  if (nbrs.empty()) throw NoOutgoingEdge("node " + std::to_string(s.position) + " has no successors");
  const auto& goals = g.spec.blue_types[blue_type].goals;
  double best = kInf;
  NodeId pick = -1;
  for (NodeId nxt : nbrs) {
    if (nxt == s.position && nbrs.size() > 1) continue;  // a self-loop is never on a shortest path
    double via = dbar.at(s.position, nxt);
    double tail = kInf;
    for (NodeId goal : goals) tail = std::min(tail, dbar.at(nxt, goal));
    double score = via + tail;
    if (score < best || (score == best && nxt < pick)) {
      best = score;
      pick = nxt;
    }
  }
  if (pick < 0 || !std::isfinite(best))
    throw NoOutgoingEdge("no successor of node " + std::to_string(s.position) +
                         " reaches a goal of blue type " + std::to_string(blue_type));
  return pick;
}

GraphId red_default_action(const ValidatedGame&, const GameState& s, TypeId) {
  if (s.parity != 1) throw IllegalAction("red_default_action called at Blue's turn");
  return s.graph;
}

std::vector<int> legal_actions(const ValidatedGame& g, const GameState& s, Player player,
                               TypeId type) {
  if (idx(player) != s.parity) throw IllegalAction("player does not match state parity");
  std::span<const int> nbrs = player == Player::blue ? g.out.neighbors(s.position)
                                                     : g.red_out[type].neighbors(s.graph);
  std::vector<int> actions(nbrs.begin(), nbrs.end());
  std::sort(actions.begin(), actions.end());
  return actions;
}

GameState apply_action(const ValidatedGame& g, const GameState& s, int action) {
  if (s.parity == 0) {
    if (g.out.find_edge(s.position, action) < 0)
      throw IllegalAction("no terrain edge " + std::to_string(s.position) + "->" +
                          std::to_string(action));
    return {action, s.graph, 1};
  }
  if (action < 1 || action > g.graphs())
    throw IllegalAction("graph index " + std::to_string(action) + " out of range");
  return {s.position, action, 0};
}

double stage_cost(const ValidatedGame& g, const GameState& s, int action) {
  if (s.parity != 0) return 0.0;
  return g.weight_between(s.graph, s.position, action);
}

bool is_terminal(const ValidatedGame& g, NodeId position, TypeId blue_type) {
  return g.goal[blue_type][position] != 0;
}

HorizonBounds horizon_bounds(const ValidatedGame& g, const DistanceTable& dbar) {
  HorizonBounds hb;
  for (int p = 1; p <= g.nodes(); ++p) {
    for (int b = 0; b < g.blue_type_count(); ++b) {
      double nearest = kInf;
      for (NodeId goal : g.spec.blue_types[b].goals) nearest = std::min(nearest, dbar.at(p, goal));
      hb.d_bar_max = std::max(hb.d_bar_max, nearest);
    }
  }
  hb.c_min = kInf;
  for (int k = 1; k <= g.graphs(); ++k)
    for (size_t e = 0; e < g.spec.terrain.edges.size(); ++e)
      hb.c_min = std::min(hb.c_min, g.weight(k, static_cast<int>(e)));
  hb.v_bar = 2 * hb.d_bar_max;
  hb.depth_cap = 2 * static_cast<int>(std::ceil(hb.v_bar / hb.c_min)) + 2;
  return hb;
}

TerrainGraphFamily joint_graph(const TerrainGraphFamily& base, int m, MoveModel model,
                               std::size_t node_budget) {
  if (m < 1) throw ConfigInvalid("joint graph needs m >= 1");
  if (model != MoveModel::all_move) throw ConfigInvalid("unsupported move model");
  if (m == 1) return base;

  double count = 1;
  for (int i = 0; i < m; ++i) count *= base.node_count;
  if (count > static_cast<double>(node_budget))
    throw SizeLimitExceeded("joint graph would have " + std::to_string(count) + " nodes");
  int n_joint = static_cast<int>(count);
  int n = base.node_count;
  int K = base.graph_count();

  Adjacency out = build_adjacency(n, base.edges);

  TerrainGraphFamily joint;
  joint.node_count = n_joint;
  joint.weights.resize(K);

  // Joint node id: 1 + sum over agents of (u_i - 1) * n^i.
  std::vector<int> tuple(m, 1);
  std::vector<int> choice(m, 0);
  for (int id = 1; id <= n_joint; ++id) {
    // Enumerate the cross product of per-agent out-edges.
    std::vector<std::span<const int>> nbrs(m);
    std::vector<std::span<const int>> eids(m);
    bool dead = false;
    for (int i = 0; i < m; ++i) {
      nbrs[i] = out.neighbors(tuple[i]);
      eids[i] = out.edge_ids(tuple[i]);
      if (nbrs[i].empty()) dead = true;
    }
    if (!dead) {
      std::fill(choice.begin(), choice.end(), 0);
      while (true) {
        int target = 1, stride = 1;
        for (int i = 0; i < m; ++i) {
          target += (nbrs[i][choice[i]] - 1) * stride;
          stride *= n;
        }
        joint.edges.push_back({id, target});
        for (int k = 0; k < K; ++k) {
          double w = 0;
          for (int i = 0; i < m; ++i) w += base.weights[k][eids[i][choice[i]]];
          joint.weights[k].push_back(w);
        }
        int pos = 0;
        while (pos < m) {
          if (++choice[pos] < static_cast<int>(nbrs[pos].size())) break;
          choice[pos] = 0;
          ++pos;
        }
        if (pos == m) break;
      }
    }
    int pos = 0;
    while (pos < m) {
      if (++tuple[pos] <= n) break;
      tuple[pos] = 1;
      ++pos;
    }
  }

  // Restore sorted edge order with aligned weight columns.
  std::vector<int> order(joint.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return joint.edges[a] < joint.edges[b]; });
  TerrainGraphFamily sorted;
  sorted.node_count = joint.node_count;
  sorted.edges.reserve(joint.edges.size());
  sorted.weights.assign(K, {});
  for (int k = 0; k < K; ++k) sorted.weights[k].reserve(joint.edges.size());
  for (int o : order) {
    sorted.edges.push_back(joint.edges[o]);
    for (int k = 0; k < K; ++k) sorted.weights[k].push_back(joint.weights[k][o]);
  }
  return sorted;
}

}  // namespace agt
