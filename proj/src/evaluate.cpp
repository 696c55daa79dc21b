#include "agt/evaluate.hpp"

#include <random>

#include "agt/analysis.hpp"

namespace agt {

namespace {

double eval_pair(Session& s, const BehavioralStrategy& red, const BehavioralStrategy& blue,
                 TypeId red_type, TypeId blue_type, int hist) {
  const auto node = s.arena.at(hist);  // by value: child() below may grow the arena
  if (is_terminal(s.game, node.position, blue_type)) return node.cost;
  if (node.depth >= s.bounds.depth_cap)
    throw DepthCapExceeded("profile evaluation ran past the depth cap");
  const BehavioralStrategy& mover = node.parity == 0 ? blue : red;
  TypeId type = node.parity == 0 ? blue_type : red_type;
  BehavioralStrategy::Entry entry = mover.act(s, type, hist);
  double v = 0;
  for (size_t i = 0; i < entry.actions.size(); ++i) {
    if (entry.probs[i] <= 0) continue;
    int child = s.arena.child(s.game, hist, entry.actions[i]);
    v += entry.probs[i] * eval_pair(s, red, blue, red_type, blue_type, child);
  }
  return v;
}

}  // namespace

double evaluate_profile(Session& s, const BehavioralStrategy& red, const BehavioralStrategy& blue) {
  double j = 0;
  for (TypeId r = 0; r < s.game.red_type_count(); ++r)
    for (TypeId b = 0; b < s.game.blue_type_count(); ++b)
      j += s.game.spec.red_types[r].prior * s.game.spec.blue_types[b].prior *
           eval_pair(s, red, blue, r, b, s.arena.root());
  return j;
}

Playout simulate_playout(Session& s, const BehavioralStrategy& red, const BehavioralStrategy& blue,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](const std::vector<double>& probs) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double u = unit(rng);
    double acc = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
  };

  Playout p;
  {
    std::vector<double> pr, pb;
    for (const auto& rt : s.game.spec.red_types) pr.push_back(rt.prior);
    for (const auto& bt : s.game.spec.blue_types) pb.push_back(bt.prior);
    p.red_type = draw(pr);
    p.blue_type = draw(pb);
    p.mu_blue.push_back(pr);
    p.mu_red.push_back(pb);
  }

  int hist = s.arena.root();
  p.hists.push_back(hist);
  while (true) {
    const auto node = s.arena.at(hist);  // by value: child() below may grow the arena
    if (is_terminal(s.game, node.position, p.blue_type)) {
      p.cost = node.cost;
      break;
    }
    if (node.depth >= s.bounds.depth_cap)
      throw DepthCapExceeded("playout ran past the depth cap");
    const BehavioralStrategy& mover = node.parity == 0 ? blue : red;
    TypeId type = node.parity == 0 ? p.blue_type : p.red_type;
    BehavioralStrategy::Entry entry = mover.act(s, type, hist);
    int action = entry.actions[draw(entry.probs)];

    // The observer of the move updates its belief about the mover's type.
    if (node.parity == 0) {
      p.mu_red.push_back(belief_update(s, p.mu_red.back(), blue, hist, action).posterior);
      p.mu_blue.push_back(p.mu_blue.back());
    } else {
      p.mu_blue.push_back(belief_update(s, p.mu_blue.back(), red, hist, action).posterior);
      p.mu_red.push_back(p.mu_red.back());
    }

    hist = s.arena.child(s.game, hist, action);
    p.actions.push_back(action);
    p.hists.push_back(hist);
    p.plies++;
  }
  return p;
}

}  // namespace agt
