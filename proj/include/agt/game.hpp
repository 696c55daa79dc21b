#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "agt/errors.hpp"

namespace agt {

using NodeId = int;   // terrain node, 1-based
using GraphId = int;  // weight-graph index, 1-based
using TypeId = int;   // index into the validated type lists
using BeliefVector = std::vector<double>;

enum class Player : int { blue = 0, red = 1 };

inline Player other(Player p) { return p == Player::blue ? Player::red : Player::blue; }
inline int idx(Player p) { return static_cast<int>(p); }

struct Edge {
  int from = 0;
  int to = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// K positive weight functions sharing one node set and one edge set.
struct TerrainGraphFamily {
  int node_count = 0;
  std::vector<Edge> edges;                   // sorted, unique
  std::vector<std::vector<double>> weights;  // weights[k-1][edge index] for graph k
  int graph_count() const { return static_cast<int>(weights.size()); }
};

struct RedType {
  double prior = 1.0;
  std::vector<Edge> action_edges;  // directed moves over graph indices, self-loops required
};

struct BlueType {
  double prior = 1.0;
  std::vector<NodeId> goals;  // sorted, unique
};

struct GameSpec {
  TerrainGraphFamily terrain;
  std::vector<RedType> red_types;
  std::vector<BlueType> blue_types;
  NodeId start_position = 1;
  GraphId start_graph = 1;
};

// parity 0: Blue moves (position changes), parity 1: Red moves (graph changes).
struct GameState {
  NodeId position = 1;
  GraphId graph = 1;
  int parity = 0;
  friend bool operator==(const GameState&, const GameState&) = default;
};

// Out-adjacency in compressed rows, indexed by 1-based ids.
struct Adjacency {
  std::vector<int> row;  // size id_count + 2
  std::vector<int> to;
  std::vector<int> eid;  // index of the edge in the owning edge list

  std::span<const int> neighbors(int id) const {
    return {to.data() + row[id], to.data() + row[id + 1]};
  }
  std::span<const int> edge_ids(int id) const {
    return {eid.data() + row[id], eid.data() + row[id + 1]};
  }
  // Index of edge (id -> target) within the owning edge list, -1 if absent.
  int find_edge(int id, int target) const {
    for (int i = row[id]; i < row[id + 1]; ++i)
      if (to[i] == target) return eid[i];
    return -1;
  }
};

struct ValidatedGame {
  GameSpec spec;  // normalized: edges sorted, goal lists sorted
  Adjacency out;                         // terrain
  Adjacency in;                          // terrain, reversed
  std::vector<Adjacency> red_out;        // per red type, over graph ids
  std::vector<std::vector<char>> goal;   // goal[blue type][node id]
  std::vector<int> dropped_red_types;    // original indices removed for zero prior
  std::vector<int> dropped_blue_types;

  int nodes() const { return spec.terrain.node_count; }
  int graphs() const { return spec.terrain.graph_count(); }
  int red_type_count() const { return static_cast<int>(spec.red_types.size()); }
  int blue_type_count() const { return static_cast<int>(spec.blue_types.size()); }
  double weight(GraphId k, int edge_index) const {
    return spec.terrain.weights[k - 1][edge_index];
  }
  double weight_between(GraphId k, NodeId from, NodeId to) const {
    int e = out.find_edge(from, to);
    if (e < 0) throw IllegalAction("no terrain edge " + std::to_string(from) + "->" + std::to_string(to));
    return weight(k, e);
  }
  GameState start_state() const { return {spec.start_position, spec.start_graph, 0}; }
};

struct DistanceTable {
  int n = 0;
  std::vector<double> d;  // row-major over 1-based pairs
  double at(NodeId i, NodeId j) const { return d[static_cast<size_t>(i - 1) * n + (j - 1)]; }
};

struct HorizonBounds {
  double d_bar_max = 0;  // worst-case nearest-goal distance under max weights
  double c_min = 0;      // cheapest edge over all graphs
  double v_bar = 0;      // 2 * d_bar_max
  int depth_cap = 0;     // plies
};

enum class MoveModel { all_move };

ValidatedGame validate_spec(const GameSpec& spec);

// All-pairs shortest paths under the pointwise maximum of the K weight functions.
DistanceTable max_weight_distances(const ValidatedGame& g);

// Shortest distance from every node to the nearest goal of blue_type under graph k.
std::vector<double> goal_distances(const ValidatedGame& g, GraphId k, TypeId blue_type);

NodeId blue_default_action(const ValidatedGame& g, const DistanceTable& dbar,
                           const GameState& s, TypeId blue_type);
GraphId red_default_action(const ValidatedGame& g, const GameState& s, TypeId red_type);

std::vector<int> legal_actions(const ValidatedGame& g, const GameState& s, Player player,
                               TypeId type);
GameState apply_action(const ValidatedGame& g, const GameState& s, int action);
double stage_cost(const ValidatedGame& g, const GameState& s, int action);
bool is_terminal(const ValidatedGame& g, NodeId position, TypeId blue_type);

HorizonBounds horizon_bounds(const ValidatedGame& g, const DistanceTable& dbar);

// m-agent product family under the given move model (every agent moves each step).
TerrainGraphFamily joint_graph(const TerrainGraphFamily& base, int m,
                               MoveModel model = MoveModel::all_move,
                               std::size_t node_budget = 1u << 20);

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace agt
