#include "agt/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "agt/strategy.hpp"

namespace agt {

namespace {

using nlohmann::json;

std::string num(double v, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string join_beliefs(const BeliefVector& mu) {
  std::string out;
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ',';
    out += num(mu[i]);
  }
  return out;
}

const char* verdict_name(VoiVerdict v) {
  switch (v) {
    case VoiVerdict::consistent: return "consistent";
    case VoiVerdict::indeterminate: return "indeterminate";
    case VoiVerdict::violated: return "violated";
  }
  return "indeterminate";
}

}  // namespace

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& data) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(data)));
  return buf;
}

std::string terrain_dot(const ValidatedGame& g) {
  std::ostringstream os;
  os << "digraph agt {\n  rankdir=LR;\n";
  os << "  subgraph cluster_terrain {\n";
  os << "    label=\"terrain, edge labels list weights for graphs 1.." << g.graphs() << "\";\n";
  for (NodeId p = 1; p <= g.nodes(); ++p) {
    std::string goal_of;
    for (int b = 0; b < g.blue_type_count(); ++b)
      if (g.goal[b][p]) {
        if (!goal_of.empty()) goal_of += ',';
        goal_of += std::to_string(b);
      }
    os << "    n" << p << " [label=\"" << p;
    if (!goal_of.empty()) os << "\\ngoal of blue " << goal_of;
    os << "\"";
    if (!goal_of.empty()) os << ", peripheries=2";
    if (p == g.spec.start_position) os << ", style=bold";
    os << "];\n";
  }
  for (size_t e = 0; e < g.spec.terrain.edges.size(); ++e) {
    const Edge& edge = g.spec.terrain.edges[e];
    std::string label;
    for (GraphId k = 1; k <= g.graphs(); ++k) {
      if (k > 1) label += '/';
      label += num(g.weight(k, static_cast<int>(e)), "%g");
    }
    os << "    n" << edge.from << " -> n" << edge.to << " [label=\"" << label << "\"];\n";
  }
  os << "  }\n";
  for (int t = 0; t < g.red_type_count(); ++t) {
    os << "  subgraph cluster_red_" << t << " {\n";
    os << "    label=\"red type " << t << " switching\";\n";
    for (GraphId k = 1; k <= g.graphs(); ++k) {
      os << "    r" << t << "_" << k << " [label=\"G" << k << "\"";
      if (k == g.spec.start_graph) os << ", style=bold";
      os << "];\n";
    }
    for (const Edge& e : g.spec.red_types[t].action_edges)
      os << "    r" << t << "_" << e.from << " -> r" << t << "_" << e.to << ";\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string belief_table_tsv(const Session& s, const std::vector<BeliefRow>& rows) {
  (void)s;
  std::string out = "t\thistory\tposition\tgraph\tparity\tprob\tterminal\tmu_blue\tmu_red\n";
  for (const BeliefRow& row : rows) {
    out += std::to_string(row.t);
    out += '\t';
    out += std::to_string(row.hist);
    out += '\t';
    out += std::to_string(row.state.position);
    out += '\t';
    out += std::to_string(row.state.graph);
    out += '\t';
    out += std::to_string(row.state.parity);
    out += '\t';
    out += num(row.prob);
    out += '\t';
    out += row.terminal ? '1' : '0';
    out += '\t';
    out += join_beliefs(row.mu_blue);
    out += '\t';
    out += join_beliefs(row.mu_red);
    out += '\n';
  }
  return out;
}

std::string solve_report_json(const Session& s, const XdoResult& result) {
  json doc;
  doc["value"] = result.value;
  doc["gap_red"] = result.gap_red;
  doc["gap_blue"] = result.gap_blue;
  doc["converged"] = result.converged;
  doc["outer_iterations"] = result.outer_iterations;
  doc["population_sizes"] = {{"red", result.red_population.size()},
                             {"blue", result.blue_population.size()}};
  json log = json::array();
  for (const XdoIteration& it : result.log) {
    json row;
    row["index"] = it.index;
    row["tree_nodes"] = it.tree_nodes;
    row["infosets_blue"] = it.infosets_blue;
    row["infosets_red"] = it.infosets_red;
    row["restricted_value"] = it.restricted_value;
    row["cfr_gap_red"] = it.cfr_gap_red;
    row["cfr_gap_blue"] = it.cfr_gap_blue;
    row["cfr_iterations"] = it.cfr_iterations;
    row["value"] = it.value;
    row["gap_red"] = it.gap_red;
    row["gap_blue"] = it.gap_blue;
    row["added_red"] = it.added_red;
    row["added_blue"] = it.added_blue;
    log.push_back(row);
  }
  doc["iterations"] = log;
  doc["red_strategy"] = json::parse(strategy_to_json(s, result.red));
  doc["blue_strategy"] = json::parse(strategy_to_json(s, result.blue));
  return doc.dump(2) + "\n";
}

std::string voi_report_json(const VoiReport& rep) {
  json doc;
  doc["v_ci"] = rep.v_ci;
  doc["v_1s_red"] = rep.v_1s_red;
  doc["v_1s_blue"] = rep.v_1s_blue;
  doc["v_2s"] = rep.v_2s;
  doc["voi_1s_red"] = rep.voi_1s_red;
  doc["voi_1s_blue"] = rep.voi_1s_blue;
  doc["voi_2s_red"] = rep.voi_2s_red;
  doc["voi_2s_blue"] = rep.voi_2s_blue;
  doc["ordering_consistent"] = rep.ordering_consistent;
  doc["determinant"] = rep.determinant;
  doc["guard_band"] = rep.guard_band;
  doc["verdict"] = verdict_name(rep.verdict);
  return doc.dump(2) + "\n";
}

std::string deltas_report_json(const DeceptionReport& rep) {
  json doc;
  doc["v_1s_blue"] = rep.v_1s_blue;
  doc["v_1s_red"] = rep.v_1s_red;
  json deltas = json::array();
  for (const DeltaEntry& d : rep.deltas) {
    json row;
    row["name"] = d.name;
    row["lhs"] = d.lhs;
    row["rhs"] = d.rhs;
    row["delta"] = d.delta;
    deltas.push_back(row);
  }
  doc["deltas"] = deltas;
  return doc.dump(2) + "\n";
}

std::string manifest_json(const std::vector<std::pair<std::string, std::string>>& artifacts) {
  json files = json::array();
  for (const auto& [name, content] : artifacts) {
    json e;
    e["name"] = name;
    e["bytes"] = content.size();
    e["fnv1a"] = fnv1a_hex(content);
    files.push_back(e);
  }
  json doc;
  doc["files"] = files;
  return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw AgtError("cannot open " + path + " for writing");
  ofs << content;
  ofs.flush();
  if (!ofs.good()) throw AgtError("short write to " + path);
}

}  // namespace agt
