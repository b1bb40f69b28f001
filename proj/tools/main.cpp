#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minsum/error.hpp"
#include "minsum/harness.hpp"
#include "minsum/scenario.hpp"
#include "minsum/trace.hpp"
#include "minsum/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace minsum;

constexpr int kExitOk = 0;
constexpr int kExitRefused = 2;
constexpr int kExitViolation = 3;
constexpr int kExitParse = 4;
constexpr int kExitBudget = 5;

// Command line overrides applied on top of the scenario file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> delta;
  std::optional<int> fairness;
  std::optional<std::string> adversary;
  std::optional<std::string> scheduler;
  std::optional<std::string> algorithm;
  std::optional<std::int64_t> max_ticks;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--seed", o.seed, "Scheduler seed");
  cmd->add_option("--delta", o.delta, "Minimum displacement per activation (e.g. 1/100)");
  cmd->add_option("--fairness", o.fairness, "Maximum ticks between activations of a robot");
  cmd->add_option("--adversary", o.adversary,
                  "round-robin | seeded-random | pending-maximizer | symmetry-preserving");
  cmd->add_option("--scheduler", o.scheduler, "async | ssync | fsync");
  cmd->add_option("--algorithm", o.algorithm, "dispatch | line | asym-unique | sym-unique | asym-multiple | rot-sym");
  cmd->add_option("--max-ticks", o.max_ticks, "Tick budget (0 derives it from the optimum)");
}

Scenario load(const std::string& path, const Overrides& o) {
  Scenario s = load_scenario(path);
  if (o.seed) s.policy.seed = *o.seed;
  if (o.delta) s.policy.delta = parse_scalar(*o.delta);
  if (o.fairness) s.policy.fairness_bound = *o.fairness;
  if (o.adversary) s.policy.adversary = parse_adversary(*o.adversary);
  if (o.scheduler) s.policy.kind = parse_scheduler_kind(*o.scheduler);
  if (o.algorithm) s.algorithm = parse_algorithm(*o.algorithm);
  if (o.max_ticks) s.max_ticks = *o.max_ticks;
  s.policy.validate();
  return s;
}

json scalars(const std::vector<Scalar>& values) {
  json out = json::array();
  for (const Scalar& v : values) out.push_back(to_string(v));
  return out;
}

json axes_json(const std::vector<Axis>& axes) {
  json out = json::array();
  for (const Axis& a : axes) out.push_back({to_string(a.first), to_string(a.second)});
  return out;
}

std::string axes_text(const std::vector<Axis>& axes) {
  std::string out;
  for (const Axis& a : axes) out += " {" + to_string(a.first) + "," + to_string(a.second) + "}";
  return out.empty() ? " none" : out;
}

std::string ids_text(const std::vector<std::size_t>& ids) {
  std::string out;
  for (std::size_t id : ids) out += (out.empty() ? "" : ",") + std::to_string(id);
  return out;
}

int cmd_classify(const Scenario& s, bool as_json) {
  const Configuration c = s.configuration();
  if (!s.space.is_circle()) {
    const bool symmetric = is_midpoint_symmetric(c);
    if (as_json) {
      std::cout << json{{"space", "segment"}, {"positions", scalars(c.positions())}, {"midpoint_symmetric", symmetric}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "space segment\nmidpoint-symmetric " << (symmetric ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }
  const ClassifyReport r = classify_report(c);
  if (as_json) {
    json groups = json::array();
    for (const auto& g : r.assignments) groups.push_back(g);
    std::cout << json{{"class", to_string(r.symmetry.cls)},
                      {"rotational_order", r.symmetry.rotational_order},
                      {"lines_of_symmetry", axes_json(r.symmetry.lines_of_symmetry)},
                      {"positions", scalars(c.positions())},
                      {"candidate_costs", scalars(r.costs.per_candidate)},
                      {"optimum", to_string(r.costs.optimum)},
                      {"extremal", r.costs.extremal},
                      {"assignments", groups}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "class " << to_string(r.symmetry.cls) << "\n"
            << "rotational-order " << r.symmetry.rotational_order << "\n"
            << "lines-of-symmetry " << r.symmetry.lines_of_symmetry.size() << ":"
            << axes_text(r.symmetry.lines_of_symmetry) << "\n"
            << "positions " << join(c.positions()) << "\n"
            << "candidate-costs " << join(r.costs.per_candidate) << "\n"
            << "optimum " << to_string(r.costs.optimum) << "\n"
            << "extremal " << ids_text(r.costs.extremal) << "\n"
            << "distinct-assignments " << r.assignments.size() << "\n";
  return kExitOk;
}

int cmd_targets(const Scenario& s, bool as_json) {
  const TargetsReport r = targets_report(s);
  const bool assigned = r.selection.status == SelectionStatus::kAssigned;
  if (as_json) {
    json rows = json::array();
    for (const TargetRow& row : r.rows) {
      rows.push_back({{"robot", row.robot},
                      {"position", to_string(row.position)},
                      {"target", to_string(row.target)},
                      {"distance", to_string(row.distance)},
                      {"direction", row.direction ? to_string(*row.direction) : "-"}});
    }
    std::cout << json{{"status", to_string(r.selection.status)},
                      {"reason", r.selection.reason},
                      {"anchors", r.selection.anchors},
                      {"rows", rows},
                      {"total", to_string(r.total)},
                      {"optimum", to_string(r.optimum)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "status " << to_string(r.selection.status);
    if (!r.selection.reason.empty()) std::cout << " (" << r.selection.reason << ")";
    std::cout << "\n";
    if (assigned) {
      std::cout << "robot position target distance direction\n";
      for (const TargetRow& row : r.rows) {
        std::cout << row.robot << " " << to_string(row.position) << " " << to_string(row.target) << " "
                  << to_string(row.distance) << " " << (row.direction ? to_string(*row.direction) : "-") << "\n";
      }
      std::cout << "total " << to_string(r.total) << "\n";
    }
    std::cout << "optimum " << to_string(r.optimum) << "\n";
  }
  return assigned ? kExitOk : kExitRefused;
}

int outcome_exit(Outcome outcome) {
  switch (outcome) {
    case Outcome::kConverged: return kExitOk;
    case Outcome::kRefused: return kExitRefused;
    case Outcome::kCollision: return kExitViolation;
    case Outcome::kTickBudgetExceeded: return kExitBudget;
  }
  return kExitViolation;
}

void write_positions(const std::string& path, const RunResult& r) {
  std::string out = "tick,robot,coord\n";
  for (const auto& [tick, positions] : position_table(r.initial, r.trace)) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
      out += std::to_string(tick) + "," + std::to_string(i) + "," + to_string(positions[i]) + "\n";
    }
  }
  write_file(path, out);
}

int cmd_run(const Scenario& s, const std::string& out, const std::string& positions, bool as_json) {
  const RunResult r = run(s.space, s.positions, s.algorithm, s.policy, {s.max_ticks});
  const std::string trace = serialize_trace(s, r.trace);
  if (out == "-") {
    std::cout << trace;
  } else if (!out.empty()) {
    write_file(out, trace);
  }
  if (!positions.empty()) write_positions(positions, r);
  if (out == "-") return outcome_exit(r.outcome);
  const std::string cls = r.initial_class ? to_string(*r.initial_class) : "segment";
  if (as_json) {
    std::cout << json{{"outcome", to_string(r.outcome)},
                      {"class", cls},
                      {"ticks", r.ticks},
                      {"budget", r.budget},
                      {"total_distance", to_string(r.total_distance)},
                      {"optimum", to_string(r.optimum)},
                      {"final", scalars(r.final_positions)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "outcome " << to_string(r.outcome) << "\n"
              << "class " << cls << "\n";
    if (r.outcome == Outcome::kRefused) {
      std::cout << "reason " << r.initial_selection.reason << "\n";
    } else {
      std::cout << "ticks " << r.ticks << " of " << r.budget << "\n"
                << "total-distance " << to_string(r.total_distance) << "\n"
                << "optimum " << to_string(r.optimum) << "\n"
                << "final " << join(r.final_positions) << "\n";
    }
  }
  return outcome_exit(r.outcome);
}

int cmd_verify(const std::string& trace_path, const Scenario& s, bool as_json) {
  const TraceFile trace = parse_trace(read_file(trace_path));
  const VerificationReport r = verify_trace(trace, s);
  if (as_json) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
      json entry = {{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}};
      entry["first_tick"] = c.first_tick ? json(*c.first_tick) : json(nullptr);
      entry["excerpt"] = c.excerpt;
      checks.push_back(entry);
    }
    std::cout << json{{"ok", r.ok()}, {"refused", r.refused}, {"failures", r.failures()}, {"checks", checks}}.dump(2)
              << "\n";
  } else {
    for (const CheckResult& c : r.checks) {
      std::cout << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name;
      if (c.first_tick) std::cout << " at tick " << *c.first_tick;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
      for (const std::string& line : c.excerpt) std::cout << "    " << line << "\n";
    }
    std::cout << (r.ok() ? "verified" : std::to_string(r.failures()) + " check(s) failed") << "\n";
  }
  if (!r.ok()) return kExitViolation;
  return r.refused ? kExitRefused : kExitOk;
}

int cmd_oracle(const Scenario& s, std::size_t grid, bool as_json) {
  const OracleReport r = oracle_report(s.configuration(), grid);
  if (as_json) {
    std::cout << json{{"engine", to_string(r.engine)},
                      {"brute_force", to_string(r.brute_force)},
                      {"agree", r.agree},
                      {"optimal_matchings", r.optimal_matchings},
                      {"fixed_point_in_every_optimum", r.fixed_point_in_every_optimum}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "engine " << to_string(r.engine) << "\n"
              << "brute-force " << to_string(r.brute_force) << "\n"
              << "agree " << (r.agree ? "yes" : "no") << "\n"
              << "optimal-matchings " << r.optimal_matchings << "\n";
    if (s.space.is_circle()) {
      std::cout << "fixed-point-in-every-optimum " << (r.fixed_point_in_every_optimum ? "yes" : "no") << "\n";
    }
  }
  return r.agree ? kExitOk : kExitViolation;
}

int cmd_demo(const Scenario& s, std::int64_t budget, bool as_json) {
  const DemoReport r = demo_impossibility(s, budget);
  if (as_json) {
    json rows = json::array();
    for (const DemoRow& row : r.rows) {
      rows.push_back({{"algorithm", to_string(row.algorithm)},
                      {"ticks", row.ticks},
                      {"displacements", row.displacements},
                      {"axes_retained", row.axes_retained},
                      {"axes_lost_at", row.axes_lost_at ? json(*row.axes_lost_at) : json(nullptr)},
                      {"reached_regular", row.reached_regular},
                      {"collision", row.collision}});
    }
    std::cout << json{{"class", to_string(r.initial_class)}, {"lines_of_symmetry", axes_json(r.axes)}, {"rows", rows}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "class " << to_string(r.initial_class) << "\n"
              << "lines-of-symmetry " << r.axes.size() << ":" << axes_text(r.axes) << "\n"
              << "algorithm ticks displacements axes regular\n";
    for (const DemoRow& row : r.rows) {
      std::cout << to_string(row.algorithm) << " " << row.ticks << " " << row.displacements << " "
                << (row.axes_retained ? "retained" : "lost@" + std::to_string(row.axes_lost_at.value_or(-1))) << " "
                << (row.reached_regular ? "reached" : "never") << (row.collision ? " collision" : "") << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min-sum uniform placement of robots on a circle or segment"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  Overrides o;
  std::string scenario_path;
  std::string trace_path;
  std::string out;
  std::string positions;
  std::size_t grid = 4;
  std::int64_t budget = 10000;

  auto scenario_cmd = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_overrides(cmd, o);
    cmd->add_flag("--json", as_json, "Machine-readable output");
    return cmd;
  };
  CLI::App* classify = scenario_cmd("classify", "Symmetry class, extremal set and candidate costs");
  classify->add_option("scenario", scenario_path)->required();
  CLI::App* targets = scenario_cmd("targets", "Per-robot targets chosen by the algorithm");
  targets->add_option("scenario", scenario_path)->required();
  CLI::App* run_cmd = scenario_cmd("run", "Simulate the scenario and write its trace");
  run_cmd->add_option("scenario", scenario_path)->required();
  run_cmd->add_option("--out", out, "Trace output path ('-' for stdout)");
  run_cmd->add_option("--emit-positions", positions, "Write a tick,robot,coord table");
  CLI::App* verify = scenario_cmd("verify", "Replay a trace and check its invariants");
  verify->add_option("trace", trace_path)->required();
  verify->add_option("scenario", scenario_path)->required();
  CLI::App* oracle = scenario_cmd("oracle", "Compare the optimum with a brute-force matching");
  oracle->add_option("scenario", scenario_path)->required();
  oracle->add_option("--grid", grid, "Offset grid refinement for the circle oracle")->check(CLI::PositiveNumber);
  CLI::App* demo = scenario_cmd("demo-impossibility", "Run every algorithm under the symmetry-preserving adversary");
  demo->add_option("scenario", scenario_path)->required();
  demo->add_option("--budget", budget, "Ticks per algorithm")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const Scenario s = load(scenario_path, o);
    if (classify->parsed()) return cmd_classify(s, as_json);
    if (targets->parsed()) return cmd_targets(s, as_json);
    if (run_cmd->parsed()) return cmd_run(s, out, positions, as_json);
    if (verify->parsed()) return cmd_verify(trace_path, s, as_json);
    if (oracle->parsed()) return cmd_oracle(s, grid, as_json);
    return cmd_demo(s, budget, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::kUnsolvable ? kExitRefused : kExitParse;
  }
}
