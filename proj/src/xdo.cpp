#include "agt/xdo.hpp"

#include "agt/evaluate.hpp"

namespace agt {

namespace {

bool known_member(const std::vector<PureStrategy>& population, const PureStrategy& candidate) {
  for (const PureStrategy& member : population)
    if (member.same_choices(candidate)) return true;
  return false;
}

}  // namespace

XdoResult xdo_solve(Session& s, const XdoConfig& cfg) {
  if (!(cfg.epsilon1 > 0) || !(cfg.epsilon1 < cfg.epsilon2 / 2))
    throw ConfigInvalid("epsilon1 must satisfy 0 < epsilon1 < epsilon2 / 2");
  if (cfg.max_outer < 1) throw ConfigInvalid("max_outer must be at least 1");

  XdoResult result;
  result.red_population.push_back(PureStrategy{Player::red, {}});
  result.blue_population.push_back(PureStrategy{Player::blue, {}});

  CfrConfig cfr_cfg = cfg.cfr;
  cfr_cfg.epsilon = cfg.epsilon1;

  for (int outer = 1; outer <= cfg.max_outer; ++outer) {
    TreeGame tree = build_restricted_game(s, result.red_population, result.blue_population,
                                          cfg.tree_node_budget);
    CfrResult cfr = cfr_solve(tree, cfr_cfg);

    result.red = extend_strategy(s, policy_to_strategy(tree, cfr.average, Player::red));
    result.blue = extend_strategy(s, policy_to_strategy(tree, cfr.average, Player::blue));
    result.value = evaluate_profile(s, result.red, result.blue);

    BestResponseResult br_red = best_response(s, Player::red, result.blue);
    BestResponseResult br_blue = best_response(s, Player::blue, result.red);
    result.gap_red = br_red.value - result.value;
    result.gap_blue = br_blue.value + result.value;
    result.outer_iterations = outer;

    XdoIteration row;
    row.index = outer;
    row.tree_nodes = tree.nodes.size();
    row.infosets_blue = tree.infosets[idx(Player::blue)].size();
    row.infosets_red = tree.infosets[idx(Player::red)].size();
    row.restricted_value = cfr.value;
    row.cfr_gap_red = cfr.gap_red;
    row.cfr_gap_blue = cfr.gap_blue;
    row.cfr_iterations = cfr.iterations;
    row.value = result.value;
    row.gap_red = result.gap_red;
    row.gap_blue = result.gap_blue;

    if (result.gap_red <= cfg.epsilon2 && result.gap_blue <= cfg.epsilon2) {
      result.converged = true;
      result.log.push_back(row);
      return result;
    }

    if (result.gap_red > cfg.epsilon2 && !known_member(result.red_population, br_red.strategy)) {
      result.red_population.push_back(br_red.strategy);
      row.added_red = true;
    }
    if (result.gap_blue > cfg.epsilon2 && !known_member(result.blue_population, br_blue.strategy)) {
      result.blue_population.push_back(br_blue.strategy);
      row.added_blue = true;
    }
    result.log.push_back(row);
    if (!row.added_red && !row.added_blue) break;  // nothing new to learn from
  }
  result.converged = false;
  return result;
}

}  // namespace agt
