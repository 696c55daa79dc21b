#include "agt/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

namespace agt {

using nlohmann::json;

namespace {

Edge parse_edge_key(const std::string& key) {
  size_t dash = key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= key.size())
    throw ScenarioParseError("bad edge key '" + key + "', expected \"from-to\"");
  try {
    return {std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1))};
  } catch (const std::exception&) {
    throw ScenarioParseError("bad edge key '" + key + "'");
  }
}

std::string edge_key(const Edge& e) {
  return std::to_string(e.from) + "-" + std::to_string(e.to);
}

}  // namespace

GameSpec scenario_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ScenarioParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  GameSpec spec;
  try {
    spec.terrain.node_count = doc.at("nodes").get<int>();
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ScenarioParseError("edges must be [from,to] pairs");
      spec.terrain.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::vector<Edge> sorted = spec.terrain.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ScenarioParseError("duplicate terrain edge in scenario");

    for (const auto& graph : doc.at("graphs")) {
      std::vector<double> w;
      w.reserve(spec.terrain.edges.size());
      for (const Edge& e : spec.terrain.edges) {
        auto it = graph.find(edge_key(e));
        if (it == graph.end())
          throw ScenarioParseError("graph " + std::to_string(spec.terrain.weights.size() + 1) +
                                   " is missing weight for edge " + edge_key(e));
        w.push_back(it->get<double>());
      }
      if (graph.size() != spec.terrain.edges.size()) {
        for (auto it = graph.begin(); it != graph.end(); ++it) {
          Edge e = parse_edge_key(it.key());
          if (!std::binary_search(sorted.begin(), sorted.end(), e))
            throw ScenarioParseError("graph weight for undeclared edge " + it.key());
        }
      }
      spec.terrain.weights.push_back(std::move(w));
    }

    int K = spec.terrain.graph_count();
    for (const auto& rt : doc.at("red_types")) {
      RedType r;
      r.prior = rt.at("prior").get<double>();
      for (const auto& e : rt.at("action_edges")) {
        if (!e.is_array() || e.size() != 2)
          throw ScenarioParseError("action_edges must be [k,k'] pairs");
        r.action_edges.push_back({e[0].get<int>(), e[1].get<int>()});
      }
      for (int k = 1; k <= K; ++k) r.action_edges.push_back({k, k});  // self-loops implied
      std::sort(r.action_edges.begin(), r.action_edges.end());
      r.action_edges.erase(std::unique(r.action_edges.begin(), r.action_edges.end()),
                           r.action_edges.end());
      spec.red_types.push_back(std::move(r));
    }

    for (const auto& bt : doc.at("blue_types")) {
      BlueType b;
      b.prior = bt.at("prior").get<double>();
      b.goals = bt.at("goals").get<std::vector<NodeId>>();
      spec.blue_types.push_back(std::move(b));
    }

    spec.start_position = doc.at("start").at("position").get<int>();
    spec.start_graph = doc.at("start").at("graph").get<int>();
  } catch (const json::exception& e) {
    throw ScenarioParseError(std::string("scenario is malformed: ") + e.what());
  }
  return spec;
}

GameSpec load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return scenario_from_json(text);
}

std::string scenario_to_json(const GameSpec& spec) {
  json doc;
  doc["nodes"] = spec.terrain.node_count;
  json edges = json::array();
  for (const Edge& e : spec.terrain.edges) edges.push_back({e.from, e.to});
  doc["edges"] = std::move(edges);
  json graphs = json::array();
  for (const auto& w : spec.terrain.weights) {
    json g = json::object();
    for (size_t e = 0; e < spec.terrain.edges.size(); ++e) g[edge_key(spec.terrain.edges[e])] = w[e];
    graphs.push_back(std::move(g));
  }
  doc["graphs"] = std::move(graphs);
  json red = json::array();
  for (const RedType& rt : spec.red_types) {
    json r;
    r["prior"] = rt.prior;
    json ae = json::array();
    for (const Edge& e : rt.action_edges) ae.push_back({e.from, e.to});
    r["action_edges"] = std::move(ae);
    red.push_back(std::move(r));
  }
  doc["red_types"] = std::move(red);
  json blue = json::array();
  for (const BlueType& bt : spec.blue_types) {
    json b;
    b["prior"] = bt.prior;
    b["goals"] = bt.goals;
    blue.push_back(std::move(b));
  }
  doc["blue_types"] = std::move(blue);
  doc["start"] = {{"position", spec.start_position}, {"graph", spec.start_graph}};
  return doc.dump(2);
}

void save_scenario(const GameSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw AgtError("cannot write " + path);
  out << scenario_to_json(spec) << "\n";
}

}  // namespace agt
