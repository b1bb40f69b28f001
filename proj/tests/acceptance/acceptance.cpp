// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact rational equalities.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "CLI11.hpp"
#include "generators.hpp"
#include "minsum/error.hpp"
#include "minsum/harness.hpp"
#include "minsum/trace.hpp"
#include "minsum/verify.hpp"

namespace {

using namespace minsum;

struct Verdict {
  bool passed = true;
  std::string summary;
};

// Collects the first few failure notes of a criterion.
class Notes {
 public:
  void add(const std::string& note) {
    ++count_;
    if (kept_.size() < 3) kept_.push_back(note);
  }
  std::size_t count() const { return count_; }
  std::string text() const {
    std::string out;
    for (const auto& k : kept_) out += "\n    " + k;
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> kept_;
};

// Evenly spaced segment targets, computed without the library.
std::vector<Scalar> expected_line_points(const Scalar& a, const Scalar& b, std::size_t n) {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i <= n; ++i) {
    Scalar x = a + Scalar(static_cast<long>(2 * i - 1)) * (b - a) / Scalar(static_cast<long>(2 * n));
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

bool gaps_uniform(const std::vector<Scalar>& sorted, const Scalar& circumference) {
  const std::size_t n = sorted.size();
  const Scalar step = circumference / Scalar(static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Scalar gap = (i + 1 < n ? sorted[i + 1] : sorted[0] + circumference) - sorted[i];
    if (gap != step) return false;
  }
  return true;
}

// Final placement check independent of is_final(): equal arcs on a circle,
// the evenly spaced points on a segment.
bool final_placement(const Space& space, std::vector<Scalar> positions) {
  std::sort(positions.begin(), positions.end());
  if (space.is_circle()) return gaps_uniform(positions, space.circumference());
  return positions == expected_line_points(space.a(), space.b(), positions.size());
}

// Path of the command line tool; empty skips the CLI checks.
std::string g_cli;

struct CliResult {
  int status = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult out;
  FILE* pipe = popen((g_cli + " " + args + " 2>&1").c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) out.output.append(buf, got);
  const int raw = pclose(pipe);
  out.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

std::string scratch_file(const std::string& name, const std::string& contents) {
  const auto dir = std::filesystem::temp_directory_path() / "minsum_acceptance";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / name).string();
  write_file(path, contents);
  return path;
}

Verdict criterion_1() {
  Notes notes;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Configuration c = gen::random_segment(seed, 7);
    const auto expected = expected_line_points(c.space().a(), c.space().b(), c.size());
    const TargetSet t = line_targets(c);
    if (t.points != expected) notes.add("seed " + std::to_string(seed) + ": targets " + join(t.points));
    Scalar order_cost = 0;
    for (std::size_t i = 0; i < c.size(); ++i) order_cost += abs(c[i] - expected[i]);
    const BruteForceResult brute = brute_force_line_optimum(c);
    if (brute.cost != order_cost) {
      notes.add("seed " + std::to_string(seed) + ": brute force " + to_string(brute.cost) + " vs " +
                to_string(order_cost));
    }
  }
  return {notes.count() == 0, "500 segment configs, " + std::to_string(notes.count()) + " mismatches" + notes.text()};
}

Verdict criterion_2() {
  Notes disagree;
  Notes unfixed;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Configuration c = gen::random_circle(seed, 6);
    const Scalar engine = extremal_set(c).optimum;
    const BruteForceResult brute = brute_force_circle_optimum(c, 4);
    if (engine != brute.cost) {
      disagree.add("seed " + std::to_string(seed) + ": engine " + to_string(engine) + " brute " +
                   to_string(brute.cost));
    }
    for (const Matching& m : brute.optimal) {
      bool fixed = false;
      for (std::size_t i = 0; i < c.size() && !fixed; ++i) fixed = m.targets[i] == c[i];
      if (!fixed) {
        unfixed.add("{" + join(c.positions()) + "} offset " + to_string(m.offset) + " -> {" + join(m.targets) +
                    "} cost " + to_string(m.cost));
        break;
      }
    }
  }
  std::ostringstream s;
  s << "500 circle configs, " << disagree.count() << " optimum disagreements, " << unfixed.count()
    << " configs with an optimal matching that fixes no robot" << disagree.text() << unfixed.text();
  return {disagree.count() == 0 && unfixed.count() == 0, s.str()};
}

Verdict criterion_3() {
  Notes notes;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Configuration c = gen::single_axis(seed);
    const auto axes = find_lines_of_symmetry(c);
    if (axes.size() != 1) {
      notes.add("seed " + std::to_string(seed) + ": generator produced " + std::to_string(axes.size()) + " axes");
      continue;
    }
    for (std::size_t r = 0; r < c.size(); ++r) {
      const std::size_t m = c.find(reflect(c[r], axes.front(), c.space()));
      if (m == c.size()) {
        notes.add("seed " + std::to_string(seed) + ": no mirror robot for " + to_string(c[r]));
        continue;
      }
      if (candidate_cost(c, r) != candidate_cost(c, m)) {
        notes.add("{" + join(c.positions()) + "}: cost at " + to_string(c[r]) + " differs from its mirror");
      }
    }
  }
  return {notes.count() == 0, "200 single-axis configs, " + std::to_string(notes.count()) + " mismatches" + notes.text()};
}

Verdict criterion_4() {
  Notes notes;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = gen::generate(gen::Family::kI2, seed);
    const Configuration c(s.space, s.positions);
    const CostReport costs = extremal_set(c);
    const auto axes = find_lines_of_symmetry(c);
    if (classify(c, costs.extremal) != ConfigClass::kI2 || axes.size() != 1) {
      notes.add("I2 seed " + std::to_string(seed) + ": not a single-axis I2 config");
      continue;
    }
    if (costs.extremal.size() == 1 && !on_axis(c[costs.extremal.front()], axes.front())) {
      notes.add("{" + join(c.positions()) + "}: unique extremal robot off the axis");
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = gen::generate(gen::Family::kI4, seed);
    const Configuration c(s.space, s.positions);
    const CostReport costs = extremal_set(c);
    if (classify(c, costs.extremal) != ConfigClass::kI4) {
      notes.add("I4 seed " + std::to_string(seed) + ": not an I4 config");
      continue;
    }
    bool one_class = false;
    for (auto cls : rotational_classes(c)) {
      std::sort(cls.begin(), cls.end());
      if (cls == costs.extremal) one_class = true;
    }
    if (!one_class) notes.add("{" + join(c.positions()) + "}: extremal set is not one rotational class");
  }
  return {notes.count() == 0, "200 I2 + 200 I4 configs, " + std::to_string(notes.count()) + " violations" + notes.text()};
}

struct RunRecord {
  std::string label;
  Scenario scenario;
  RunResult result;
  VerificationReport report;
};

std::vector<RunRecord> end_to_end_runs() {
  std::vector<RunRecord> records;
  const gen::Family families[] = {gen::Family::kI1Unique, gen::Family::kI1Multiple, gen::Family::kI2,
                                  gen::Family::kI4,       gen::Family::kI5,         gen::Family::kSegment};
  for (gen::Family family : families) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const gen::Sample sample = gen::generate(family, seed);
      for (Adversary adversary : {Adversary::kRoundRobin, Adversary::kSeededRandom, Adversary::kPendingMaximizer}) {
        for (long den : {16L, 100L}) {
          Scenario sc;
          sc.space = sample.space;
          sc.positions = sample.positions;
          sc.policy.kind = SchedulerKind::kAsync;
          sc.policy.adversary = adversary;
          sc.policy.seed = seed;
          sc.policy.delta = sample.space.length() / Scalar(den);
          RunRecord rec;
          rec.label = std::string(gen::to_string(family)) + " seed " + std::to_string(seed) + " " +
                      to_string(adversary) + " delta=C/" + std::to_string(den);
          rec.result = run(sc.space, sc.positions, sc.algorithm, sc.policy);
          rec.report = verify_trace(parse_trace(serialize_trace(sc, rec.result.trace)), sc);
          rec.scenario = std::move(sc);
          records.push_back(std::move(rec));
        }
      }
    }
  }
  return records;
}

const std::vector<RunRecord>& shared_runs() {
  static const std::vector<RunRecord> records = end_to_end_runs();
  return records;
}

Verdict criterion_5() {
  const auto& runs = shared_runs();
  Notes notes;
  std::map<std::string, std::size_t> failures_by_family;
  for (const auto& r : runs) {
    const RunResult& res = r.result;
    std::vector<std::string> why;
    if (res.outcome != Outcome::kConverged) why.push_back(to_string(res.outcome));
    if (res.ticks > budget_ticks(res.optimum, res.initial.size(), r.scenario.policy)) why.push_back("over budget");
    const bool collided = std::any_of(res.trace.begin(), res.trace.end(),
                                      [](const Event& e) { return e.kind == Event::Kind::kCollision; });
    if (collided) why.push_back("collision");
    Scalar displaced = 0;
    for (const Event& e : res.trace) {
      if (e.kind == Event::Kind::kDisplaced) displaced += e.amount;
    }
    const Scalar optimum = optimal_cost(Configuration(r.scenario.space, r.scenario.positions));
    if (displaced != optimum) why.push_back("travelled " + to_string(displaced) + " of optimum " + to_string(optimum));
    if (!final_placement(r.scenario.space, res.final_positions)) why.push_back("final placement not uniform");
    if (!why.empty()) {
      std::string line = r.label + " {" + join(r.scenario.positions) + "}:";
      for (const auto& w : why) line += " " + w;
      notes.add(line);
      ++failures_by_family[r.label.substr(0, r.label.find(' '))];
    }
  }
  std::string summary = std::to_string(runs.size()) + " ASYNC runs, " + std::to_string(notes.count()) + " failing";
  for (const auto& [family, count] : failures_by_family) summary += " [" + family + ": " + std::to_string(count) + "]";
  return {notes.count() == 0, summary + notes.text()};
}

Verdict check_named(const std::string& name) {
  const auto& runs = shared_runs();
  Notes notes;
  std::map<std::string, std::size_t> failures_by_family;
  for (const auto& r : runs) {
    const CheckResult* c = r.report.find(name);
    if (c && !c->passed) {
      notes.add(r.label + " {" + join(r.scenario.positions) + "}: tick " +
                std::to_string(c->first_tick.value_or(-1)) + " " + c->detail);
      ++failures_by_family[r.label.substr(0, r.label.find(' '))];
    }
  }
  std::string summary = std::to_string(runs.size()) + " runs, " + std::to_string(notes.count()) + " with " + name +
                        " violations";
  for (const auto& [family, count] : failures_by_family) summary += " [" + family + ": " + std::to_string(count) + "]";
  return {notes.count() == 0, summary + notes.text()};
}

Verdict criterion_6() {
  Verdict out = check_named("anchor-invariance");
  // The checkpoint extremal set must keep every initial anchor.
  std::size_t lost = 0;
  for (const auto& r : shared_runs()) {
    if (!r.scenario.space.is_circle() || r.result.initial_selection.status != SelectionStatus::kAssigned) continue;
    const Configuration initial(r.scenario.space, r.scenario.positions);
    std::vector<std::size_t> anchor_ids;
    for (std::size_t k : r.result.initial_selection.anchors) {
      anchor_ids.push_back(static_cast<std::size_t>(
          std::find(r.scenario.positions.begin(), r.scenario.positions.end(), initial[k]) - r.scenario.positions.begin()));
    }
    for (const Event& e : r.result.trace) {
      if (e.kind != Event::Kind::kCheckpoint) continue;
      const bool kept = std::all_of(anchor_ids.begin(), anchor_ids.end(), [&](std::size_t id) {
        return std::find(e.robots.begin(), e.robots.end(), id) != e.robots.end();
      });
      if (!kept) {
        ++lost;
        break;
      }
    }
  }
  out.passed = out.passed && lost == 0;
  out.summary += "; " + std::to_string(lost) + " runs whose checkpoints drop an initial anchor";
  return out;
}

Verdict criterion_7() {
  Verdict out = check_named("cost-monotonicity");
  // Independent pass over the checkpoint remaining-cost column.
  std::size_t bad = 0;
  for (const auto& r : shared_runs()) {
    std::optional<Scalar> previous;
    bool moved = false;
    std::int64_t tick = -1;
    for (const Event& e : r.result.trace) {
      if (e.tick != tick) {
        tick = e.tick;
        moved = false;
      }
      if (e.kind == Event::Kind::kDisplaced) moved = true;
      if (e.kind != Event::Kind::kCheckpoint) continue;
      if (previous && (e.amount > *previous || (moved && e.amount == *previous))) {
        ++bad;
        break;
      }
      previous = e.amount;
    }
  }
  out.passed = out.passed && bad == 0;
  out.summary += "; checkpoint scan: " + std::to_string(bad) + " runs not strictly decreasing";
  return out;
}

Verdict criterion_8() {
  Notes notes;
  const Space circle = Space::circle(Scalar(1));
  std::ostringstream s;
  for (const auto& [name, positions, cls] :
       {std::tuple{"I3", gen::i3_fixture(), ConfigClass::kI3}, std::tuple{"I6", gen::i6_fixture(), ConfigClass::kI6}}) {
    const Configuration c(circle, positions);
    if (classify(c, extremal_set(c).extremal) != cls) notes.add(std::string(name) + " fixture misclassified");
    SchedulerPolicy policy;
    const RunResult r = run(circle, positions, Algorithm::kDispatch, policy);
    if (r.outcome != Outcome::kRefused) notes.add(std::string(name) + " fixture not refused: " + to_string(r.outcome));
    if (!g_cli.empty()) {
      Scenario file;
      file.positions = positions;
      const CliResult cli = run_cli("run " + scratch_file(std::string(name) + ".scn", serialize(file)));
      if (cli.status != 2 || cli.output.find(std::string("class ") + name) == std::string::npos) {
        notes.add(std::string(name) + " CLI run exit " + std::to_string(cli.status) + ": " + cli.output);
      }
    }

    Scenario sc;
    sc.space = circle;
    sc.positions = positions;
    const DemoReport demo = demo_impossibility(sc, 10000);
    for (const DemoRow& row : demo.rows) {
      if (row.ticks < 10000 || !row.axes_retained || row.reached_regular || row.collision) {
        notes.add(std::string(name) + " " + to_string(row.algorithm) + ": ticks " + std::to_string(row.ticks) +
                  (row.axes_retained ? "" : " axis lost") + (row.reached_regular ? " converged" : "") +
                  (row.collision ? " collision" : ""));
      }
    }
    s << name << ": " << demo.rows.size() << " algorithms x 10000 ticks; ";
  }
  if (!g_cli.empty()) s << "CLI refusal checked; ";
  return {notes.count() == 0, s.str() + std::to_string(notes.count()) + " violations" + notes.text()};
}

Verdict criterion_9() {
  Notes notes;
  const gen::Family families[] = {gen::Family::kI1Unique, gen::Family::kI1Multiple, gen::Family::kI2,
                                  gen::Family::kI4,       gen::Family::kI5,         gen::Family::kSegment};
  const Adversary adversaries[] = {Adversary::kRoundRobin, Adversary::kSeededRandom, Adversary::kPendingMaximizer};
  for (std::uint64_t k = 0; k < 50; ++k) {
    const gen::Sample sample = gen::generate(families[k % 6], 1000 + k);
    Scenario sc;
    sc.space = sample.space;
    sc.positions = sample.positions;
    sc.policy.adversary = adversaries[k % 3];
    sc.policy.seed = 42 + k;
    sc.policy.delta = sample.space.length() / Scalar(static_cast<long>(8 + k));
    const Scenario reparsed = parse_scenario(serialize(sc));
    const std::string first = serialize_trace(sc, run(sc.space, sc.positions, sc.algorithm, sc.policy).trace);
    const std::string second =
        serialize_trace(reparsed, run(reparsed.space, reparsed.positions, reparsed.algorithm, reparsed.policy).trace);
    if (first != second) notes.add("spot check " + std::to_string(k) + " produced different traces");
  }
  return {notes.count() == 0, "50 spot checks, " + std::to_string(notes.count()) + " differing" + notes.text()};
}

Verdict criterion_10() {
  Notes notes;
  try {
    parse_scenario("space = circle\npositions = 0, 1/4, 1/4\n");
    notes.add("duplicate positions accepted");
  } catch (const ParseError& e) {
    if (e.code() != ErrorCode::kDuplicatePosition) notes.add(std::string("wrong error: ") + e.what());
  }

  // Robot 2 is sent onto robot 1, which has just reached 1/3.
  Scenario sc;
  sc.positions = {0, Scalar(1, 4), Scalar(3, 4)};
  const std::string trace =
      "minsum-trace v1\n"
      "space circle 1\n"
      "initial 0,1/4,3/4\n"
      "algorithm dispatch\n"
      "policy async round-robin seed=0 delta=1/100 fairness=8 rigid=0\n"
      "activated 0 1\n"
      "snapshot 0 1 0,1/4,3/4\n"
      "decided 0 1 move 1/3 cw\n"
      "displaced 0 1 1/4 1/3 1/12 cw\n"
      "activated 1 2\n"
      "snapshot 1 2 0,1/3,3/4\n"
      "decided 1 2 move 1/3 ccw\n"
      "displaced 1 2 3/4 1/3 5/12 ccw\n"
      "final 2 0,1/3,1/3\n";
  const VerificationReport report = verify_trace(parse_trace(trace), sc);
  const CheckResult* c = report.find("collision-freedom");
  if (!c || c->passed) {
    notes.add("forced collision not detected");
  } else if (c->first_tick != 1 || c->detail.find("CollisionDetected") == std::string::npos) {
    notes.add("collision reported at tick " + std::to_string(c->first_tick.value_or(-1)) + ": " + c->detail);
  }
  if (!g_cli.empty()) {
    const CliResult dup = run_cli("classify " + scratch_file("duplicate.scn", "space = circle\npositions = 0, 1/4, 0.25\n"));
    if (dup.status != 4 || dup.output.find("DuplicatePosition") == std::string::npos) {
      notes.add("CLI duplicate parse exit " + std::to_string(dup.status) + ": " + dup.output);
    }
    const CliResult verify =
        run_cli("verify " + scratch_file("collision.trace", trace) + " " + scratch_file("collision.scn", serialize(sc)));
    if (verify.status != 3 || verify.output.find("FAIL collision-freedom at tick 1: CollisionDetected") == std::string::npos) {
      notes.add("CLI verify exit " + std::to_string(verify.status) + ": " + verify.output);
    }
  }
  return {notes.count() == 0, std::string(g_cli.empty() ? "" : "CLI and library: ") +
                                  "duplicate parse guard and forced collision at tick 1, " +
                                  std::to_string(notes.count()) + " problems" + notes.text()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minsum acceptance suite"};
  std::vector<int> selected;
  app.add_option("-c,--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 10));
  app.add_option("--cli", g_cli, "Path of the minsum tool for end-to-end checks");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    selected.resize(10);
    std::iota(selected.begin(), selected.end(), 1);
  }

  const std::map<int, std::function<Verdict()>> criteria = {
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4}, {5, criterion_5},
      {6, criterion_6}, {7, criterion_7}, {8, criterion_8}, {9, criterion_9}, {10, criterion_10},
  };
  int failed = 0;
  for (int id : selected) {
    const auto start = std::chrono::steady_clock::now();
    Verdict out;
    try {
      out = criteria.at(id)();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << id << " (" << secs << " s): " << out.summary
              << std::endl;
    if (!out.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
