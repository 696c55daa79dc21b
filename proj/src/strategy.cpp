#include "agt/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace agt {

using nlohmann::json;

int default_action(const Session& s, Player player, TypeId type, int hist) {
  GameState st = s.arena.state(hist);
  if (player == Player::blue) return blue_default_action(s.game, s.dbar, st, type);
  return red_default_action(s.game, st, type);
}

bool PureStrategy::same_choices(const PureStrategy& o) const {
  if (player != o.player || choice.size() != o.choice.size()) return false;
  for (const auto& [k, a] : choice) {
    auto it = o.choice.find(k);
    if (it == o.choice.end() || it->second != a) return false;
  }
  return true;
}

BehavioralStrategy to_behavioral(const PureStrategy& pure) {
  BehavioralStrategy b;
  b.player = pure.player;
  for (const auto& [k, a] : pure.choice) b.table[k] = {{a}, {1.0}};
  return b;
}

BehavioralStrategy extend_strategy(const Session& s, const BehavioralStrategy& restricted) {
  for (const auto& [key, entry] : restricted.table) {
    TypeId type = static_cast<TypeId>(key >> 40);
    int hist = static_cast<int>(key & ((1ull << 40) - 1));
    if (hist < 0 || static_cast<size_t>(hist) >= s.arena.size())
      throw StrategyDomainMismatch("strategy entry references unknown history");
    GameState st = s.arena.state(hist);
    if (st.parity != idx(restricted.player))
      throw StrategyDomainMismatch("strategy entry at the wrong parity");
    int types = restricted.player == Player::blue ? s.game.blue_type_count()
                                                  : s.game.red_type_count();
    if (type < 0 || type >= types) throw StrategyDomainMismatch("strategy entry has unknown type");
    if (entry.actions.size() != entry.probs.size() || entry.actions.empty())
      throw StrategyDomainMismatch("strategy entry is malformed");
    std::vector<int> legal = legal_actions(s.game, st, restricted.player, type);
    double sum = 0;
    for (size_t i = 0; i < entry.actions.size(); ++i) {
      if (!std::binary_search(legal.begin(), legal.end(), entry.actions[i]))
        throw StrategyDomainMismatch("strategy entry plays illegal action " +
                                     std::to_string(entry.actions[i]));
      if (entry.probs[i] < 0) throw StrategyDomainMismatch("negative probability");
      sum += entry.probs[i];
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw StrategyDomainMismatch("probabilities sum to " + std::to_string(sum));
  }
  return restricted;
}

std::string strategy_to_json(const Session& s, const BehavioralStrategy& strat) {
  std::vector<std::pair<ISKey, const BehavioralStrategy::Entry*>> items;
  items.reserve(strat.table.size());
  for (const auto& [k, e] : strat.table) items.emplace_back(k, &e);
  // Order by (type, action path) so output is canonical.
  std::vector<std::pair<std::pair<TypeId, std::vector<int>>, const BehavioralStrategy::Entry*>>
      rows;
  rows.reserve(items.size());
  for (auto& [k, e] : items) {
    TypeId type = static_cast<TypeId>(k >> 40);
    int hist = static_cast<int>(k & ((1ull << 40) - 1));
    rows.push_back({{type, s.arena.actions_from_root(hist)}, e});
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  json entries = json::array();
  for (const auto& [key, e] : rows) {
    json row;
    row["type"] = key.first;
    row["history"] = key.second;
    row["actions"] = e->actions;
    row["probs"] = e->probs;
    entries.push_back(std::move(row));
  }
  json doc;
  doc["player"] = strat.player == Player::blue ? "blue" : "red";
  doc["entries"] = std::move(entries);
  return doc.dump(2);
}

BehavioralStrategy strategy_from_json(Session& s, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw StrategyDomainMismatch(std::string("strategy file is not valid JSON: ") + e.what());
  }
  BehavioralStrategy strat;
  try {
    std::string player = doc.at("player").get<std::string>();
    if (player == "blue")
      strat.player = Player::blue;
    else if (player == "red")
      strat.player = Player::red;
    else
      throw StrategyDomainMismatch("unknown player '" + player + "'");
    for (const auto& row : doc.at("entries")) {
      TypeId type = row.at("type").get<TypeId>();
      std::vector<int> path = row.at("history").get<std::vector<int>>();
      BehavioralStrategy::Entry entry;
      entry.actions = row.at("actions").get<std::vector<int>>();
      entry.probs = row.at("probs").get<std::vector<double>>();
      int hist;
      try {
        hist = s.arena.intern_path(s.game, path);
      } catch (const IllegalAction& e) {
        throw StrategyDomainMismatch(std::string("history replays an illegal action: ") + e.what());
      }
      strat.table[iskey(type, hist)] = std::move(entry);
    }
  } catch (const json::exception& e) {
    throw StrategyDomainMismatch(std::string("strategy file is malformed: ") + e.what());
  }
  return extend_strategy(s, strat);
}

void save_strategy(const Session& s, const BehavioralStrategy& strat, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw AgtError("cannot write " + path);
  out << strategy_to_json(s, strat) << "\n";
}

BehavioralStrategy load_strategy(Session& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StrategyDomainMismatch("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return strategy_from_json(s, text);
}

}  // namespace agt
