#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minsum/scheduler.hpp"

namespace minsum {

// A run description: space, initial positions (robot ids follow this
// order), algorithm, scheduling policy and tick budget.
struct Scenario {
  Space space = Space::circle(Scalar(1));
  std::vector<Scalar> positions;
  Algorithm algorithm = Algorithm::kDispatch;
  SchedulerPolicy policy;
  // 0 means the default budget derived from the optimum.
  std::int64_t max_ticks = 0;

  Configuration configuration() const { return Configuration(space, positions); }
  bool operator==(const Scenario& other) const;
};

// `key = value` lines, `#` starts a comment. Errors are ParseError with the
// offending line; repeated robot positions use the DuplicatePosition code.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);
std::string serialize(const Scenario& scenario);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace minsum
