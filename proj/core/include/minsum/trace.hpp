#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minsum/scenario.hpp"

namespace minsum {

inline constexpr std::string_view kTraceHeader = "minsum-trace v1";

// A trace file: header lines describing the run, then one event per line.
struct TraceFile {
  Space space = Space::circle(Scalar(1));
  std::vector<Scalar> initial;
  Algorithm algorithm = Algorithm::kDispatch;
  SchedulerPolicy policy;
  Trace events;
  // Source line of each event (1-based), for error reports.
  std::vector<int> lines;
};

std::string format_event(const Event& e);
std::string serialize_trace(const Scenario& scenario, const Trace& trace);
// Throws ParseError with the offending line number.
TraceFile parse_trace(std::string_view text);

}  // namespace minsum
