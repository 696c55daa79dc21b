#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "agt/history.hpp"

namespace agt {

// Info-set key within one player's tables: own type plus interned history id.
using ISKey = std::uint64_t;
inline ISKey iskey(TypeId type, int hist) {
  return (static_cast<ISKey>(type) << 40) | static_cast<ISKey>(hist);
}

// The default strategies the populations are seeded with and every strategy
// falls back to outside its mapped domain. Blue heads for the nearest goal
// under max-weight distances; Red keeps the current graph.
int default_action(const Session& s, Player player, TypeId type, int hist);

// Pure strategy as a partial map over (type, history) with default fallback.
// Entries that would repeat the default are dropped so maps compare canonically.
struct PureStrategy {
  Player player = Player::blue;
  std::unordered_map<ISKey, int> choice;

  int action_at(const Session& s, TypeId type, int hist) const {
    auto it = choice.find(iskey(type, hist));
    if (it != choice.end()) return it->second;
    return default_action(s, player, type, hist);
  }

  void set(const Session& s, TypeId type, int hist, int action) {
    if (action != default_action(s, player, type, hist)) choice[iskey(type, hist)] = action;
  }

  bool same_choices(const PureStrategy& o) const;
};

// Behavioral strategy over the same key space; unmapped keys play the default
// with probability one, which is exactly the population-extension rule.
struct BehavioralStrategy {
  struct Entry {
    std::vector<int> actions;
    std::vector<double> probs;
  };

  Player player = Player::blue;
  std::unordered_map<ISKey, Entry> table;

  bool mapped(TypeId type, int hist) const { return table.count(iskey(type, hist)) > 0; }

  Entry act(const Session& s, TypeId type, int hist) const {
    auto it = table.find(iskey(type, hist));
    if (it != table.end()) return it->second;
    return Entry{{default_action(s, player, type, hist)}, {1.0}};
  }

  double prob_of(const Session& s, TypeId type, int hist, int action) const {
    Entry e = act(s, type, hist);
    for (size_t i = 0; i < e.actions.size(); ++i)
      if (e.actions[i] == action) return e.probs[i];
    return 0.0;
  }
};

BehavioralStrategy to_behavioral(const PureStrategy& pure);

// Validates entries (legal actions at the right parity, probabilities on the
// simplex) and returns the total extension; the fallback makes it total.
BehavioralStrategy extend_strategy(const Session& s, const BehavioralStrategy& restricted);

// Persistence: entries keyed by (player, type, action list from the root),
// probabilities rendered at 17 significant digits.
std::string strategy_to_json(const Session& s, const BehavioralStrategy& strat);
BehavioralStrategy strategy_from_json(Session& s, const std::string& text);
void save_strategy(const Session& s, const BehavioralStrategy& strat, const std::string& path);
BehavioralStrategy load_strategy(Session& s, const std::string& path);

}  // namespace agt
