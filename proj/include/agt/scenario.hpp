#pragma once

#include <string>

#include "agt/game.hpp"

namespace agt {

// Scenario files are JSON:
//   nodes: int, edges: [[from,to],...],
//   graphs: [{"from-to": weight, ...}, ...]          (one map per weight graph)
//   red_types: [{prior, action_edges: [[k,k'],...]}] (self-loops may be omitted)
//   blue_types: [{prior, goals: [node,...]}]
//   start: {position, graph}
// Unknown keys are ignored so fixtures can carry notes.
GameSpec scenario_from_json(const std::string& text);
GameSpec load_scenario(const std::string& path);
std::string scenario_to_json(const GameSpec& spec);
void save_scenario(const GameSpec& spec, const std::string& path);

}  // namespace agt
