#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minsum/trace.hpp"

namespace minsum {

struct CheckResult {
  std::string name;
  bool passed = true;
  // Invariants that do not apply to this run (e.g. no frozen targets).
  bool skipped = false;
  std::optional<std::int64_t> first_tick;
  std::string detail;
  // Trace line(s) around the first violation.
  std::vector<std::string> excerpt;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool refused = false;

  bool ok() const;
  std::size_t failures() const;
  const CheckResult* find(const std::string& name) const;
};

// Replays the trace against the scenario and checks collision-freedom,
// fairness, the delta floor, cost monotonicity, anchor invariance, final
// regularity and exact distance optimality.
VerificationReport verify_trace(const TraceFile& trace, const Scenario& scenario);

// Positions by robot id after every tick with a displacement, starting with
// the initial configuration at tick -1.
std::vector<std::pair<std::int64_t, std::vector<Scalar>>> position_table(const std::vector<Scalar>& initial,
                                                                         const Trace& trace);

}  // namespace minsum
