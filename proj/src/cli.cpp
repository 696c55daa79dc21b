#include "agt/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>
#include <utility>

#include <CLI11.hpp>

#include "agt/evaluate.hpp"
#include "agt/report.hpp"
#include "agt/scenario.hpp"

namespace agt {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Options {
  std::string scenario;
  double eps1 = 0;  // 0 derives epsilon2 / 4
  double eps2 = 0;  // 0 derives 0.05 * v_bar
  int max_outer = 64;
  int cfr_iters = 1'000'000;
  std::string out_dir;
  std::string red_path;
  std::string blue_path;
  std::string format = "dot";
  int count = 10;
  std::uint64_t seed = 1;
};

XdoConfig make_config(const Session& s, const Options& o) {
  XdoConfig cfg;
  cfg.epsilon2 = o.eps2 > 0 ? o.eps2 : 0.05 * s.bounds.v_bar;
  cfg.epsilon1 = o.eps1 > 0 ? o.eps1 : cfg.epsilon2 / 4;
  cfg.max_outer = o.max_outer;
  cfg.cfr.max_iterations = o.cfr_iters;
  return cfg;
}

void write_artifacts(const std::string& dir,
                     std::vector<std::pair<std::string, std::string>> files, std::ostream& out) {
  std::filesystem::create_directories(dir);
  std::string manifest = manifest_json(files);
  files.emplace_back("manifest.json", std::move(manifest));
  for (const auto& [name, content] : files)
    write_text_file((std::filesystem::path(dir) / name).string(), content);
  out << "artifacts=" << dir << "\n";
}

BehavioralStrategy load_or_default(Session& s, const std::string& path, Player player) {
  if (path.empty()) return BehavioralStrategy{player, {}};
  BehavioralStrategy strat = load_strategy(s, path);
  if (strat.player != player)
    throw StrategyDomainMismatch(path + " holds a strategy for the other player");
  return strat;
}

int cmd_solve(const Options& o, std::ostream& out) {
  Session s(load_scenario(o.scenario));
  XdoResult res = xdo_solve(s, make_config(s, o));
  out << "value=" << num(res.value) << "\n";
  out << "gap_red=" << num(res.gap_red) << "\n";
  out << "gap_blue=" << num(res.gap_blue) << "\n";
  out << "outer_iterations=" << res.outer_iterations << "\n";
  out << "converged=" << (res.converged ? 1 : 0) << "\n";
  if (!o.out_dir.empty()) {
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("red_strategy.json", strategy_to_json(s, res.red));
    files.emplace_back("blue_strategy.json", strategy_to_json(s, res.blue));
    files.emplace_back("solve_report.json", solve_report_json(s, res));
    write_artifacts(o.out_dir, std::move(files), out);
  }
  return res.converged ? 0 : 2;
}

int cmd_voi(const Options& o, std::ostream& out) {
  GameSpec spec = load_scenario(o.scenario);
  Session probe(spec);
  VoiReport rep = voi_report(spec, make_config(probe, o));
  out << "v_ci=" << num(rep.v_ci) << "\n";
  out << "v_1s_red=" << num(rep.v_1s_red) << "\n";
  out << "v_1s_blue=" << num(rep.v_1s_blue) << "\n";
  out << "v_2s=" << num(rep.v_2s) << "\n";
  out << "voi_1s_red=" << num(rep.voi_1s_red) << "\n";
  out << "voi_1s_blue=" << num(rep.voi_1s_blue) << "\n";
  out << "voi_2s_red=" << num(rep.voi_2s_red) << "\n";
  out << "voi_2s_blue=" << num(rep.voi_2s_blue) << "\n";
  out << "ordering_consistent=" << (rep.ordering_consistent ? 1 : 0) << "\n";
  out << "verdict="
      << (rep.verdict == VoiVerdict::consistent
              ? "consistent"
              : rep.verdict == VoiVerdict::violated ? "violated" : "indeterminate")
      << "\n";
  if (!o.out_dir.empty()) {
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("voi_report.json", voi_report_json(rep));
    write_artifacts(o.out_dir, std::move(files), out);
  }
  return 0;
}

int cmd_deltas(const Options& o, std::ostream& out) {
  GameSpec spec = load_scenario(o.scenario);
  Session probe(spec);
  DeceptionReport rep = deception_deltas(spec, make_config(probe, o));
  out << "v_1s_blue=" << num(rep.v_1s_blue) << "\n";
  out << "v_1s_red=" << num(rep.v_1s_red) << "\n";
  for (const DeltaEntry& d : rep.deltas)
    out << d.name << " delta=" << num(d.delta) << " lhs=" << num(d.lhs) << " rhs=" << num(d.rhs)
        << "\n";
  if (!o.out_dir.empty()) {
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("deltas_report.json", deltas_report_json(rep));
    write_artifacts(o.out_dir, std::move(files), out);
  }
  return 0;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  Session s(load_scenario(o.scenario));
  BehavioralStrategy red = load_or_default(s, o.red_path, Player::red);
  BehavioralStrategy blue = load_or_default(s, o.blue_path, Player::blue);
  double j = evaluate_profile(s, red, blue);
  auto [gap_red, gap_blue] = full_exploitability(s, red, blue);
  out << "value=" << num(j) << "\n";
  out << "gap_red=" << num(gap_red) << "\n";
  out << "gap_blue=" << num(gap_blue) << "\n";
  return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  if (o.count < 1) throw ConfigInvalid("playout count must be positive");
  Session s(load_scenario(o.scenario));
  BehavioralStrategy red = load_or_default(s, o.red_path, Player::red);
  BehavioralStrategy blue = load_or_default(s, o.blue_path, Player::blue);
  double total = 0;
  for (int i = 0; i < o.count; ++i) {
    Playout p = simulate_playout(s, red, blue, o.seed + static_cast<std::uint64_t>(i));
    out << "playout seed=" << o.seed + static_cast<std::uint64_t>(i) << " red_type=" << p.red_type
        << " blue_type=" << p.blue_type << " plies=" << p.plies << " cost=" << num(p.cost) << "\n";
    total += p.cost;
  }
  out << "mean_cost=" << num(total / o.count) << "\n";
  return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
  Session s(load_scenario(o.scenario));
  std::string name, content;
  if (o.format == "dot") {
    name = "terrain.dot";
    content = terrain_dot(s.game);
  } else if (o.format == "table") {
    BehavioralStrategy red = load_or_default(s, o.red_path, Player::red);
    BehavioralStrategy blue = load_or_default(s, o.blue_path, Player::blue);
    name = "beliefs.tsv";
    content = belief_table_tsv(s, belief_trajectories(s, red, blue));
  } else if (o.format == "json") {
    name = "scenario.json";
    content = scenario_to_json(s.game.spec);
  } else {
    throw UnknownFormat("format must be dot, table, or json");
  }
  if (o.out_dir.empty()) {
    out << content;
  } else {
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back(name, std::move(content));
    write_artifacts(o.out_dir, std::move(files), out);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"adversarial graph traversal: solve, analyze, export"};
  app.name("agt");
  app.require_subcommand(1);

  Options o;
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("scenario", o.scenario, "scenario JSON file")->required();
    sub->add_option("--out", o.out_dir, "directory to write artifact files into");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--eps1", o.eps1, "restricted-game gap target (default eps2 / 4)");
    sub->add_option("--eps2", o.eps2, "full-game gap target (default 0.05 * worst-case cost)");
    sub->add_option("--max-outer", o.max_outer, "outer iteration budget");
    sub->add_option("--cfr-iters", o.cfr_iters, "regret iteration budget per pass");
  };
  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--red", o.red_path, "red strategy file (default: stay strategy)");
    sub->add_option("--blue", o.blue_path, "blue strategy file (default: nearest-goal strategy)");
  };

  CLI::App* solve = app.add_subcommand("solve", "equilibrium value and strategies");
  add_scenario(solve);
  add_solver(solve);

  CLI::App* voi = app.add_subcommand("voi", "value-of-information report");
  add_scenario(voi);
  add_solver(voi);

  CLI::App* deltas = app.add_subcommand("deltas", "losses from committing under the wrong information");
  add_scenario(deltas);
  add_solver(deltas);

  CLI::App* evaluate = app.add_subcommand("evaluate", "value and exploitability of a profile");
  add_scenario(evaluate);
  add_profile(evaluate);

  CLI::App* simulate = app.add_subcommand("simulate", "seeded playouts with belief tracking");
  add_scenario(simulate);
  add_profile(simulate);
  simulate->add_option("-n,--count", o.count, "number of playouts");
  simulate->add_option("--seed", o.seed, "seed of the first playout");

  CLI::App* exporter = app.add_subcommand("export", "scenario renderings");
  add_scenario(exporter);
  add_profile(exporter);
  exporter->add_option("--format", o.format, "dot, table, or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (voi->parsed()) return cmd_voi(o, out);
    if (deltas->parsed()) return cmd_deltas(o, out);
    if (evaluate->parsed()) return cmd_evaluate(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (exporter->parsed()) return cmd_export(o, out);
  } catch (const IterationBudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const AgtError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace agt
