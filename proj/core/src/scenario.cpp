#include "minsum/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "minsum/error.hpp"

namespace minsum {

bool Scenario::operator==(const Scenario& o) const {
  return space == o.space && positions == o.positions && algorithm == o.algorithm &&
         policy.kind == o.policy.kind && policy.seed == o.policy.seed && policy.delta == o.policy.delta &&
         policy.fairness_bound == o.policy.fairness_bound && policy.adversary == o.policy.adversary &&
         policy.rigid == o.policy.rigid && max_ticks == o.max_ticks;
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

struct Entry {
  std::string value;
  int line;
};

std::int64_t parse_int(const Entry& e, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ParseError(e.line, key + " must be an integer, got '" + e.value + "'");
  }
}

bool parse_bool(const Entry& e, const std::string& key) {
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  throw ParseError(e.line, key + " must be true or false, got '" + e.value + "'");
}

// Re-raises library errors with the line that caused them.
template <typename F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(line, e.what(), e.code());
  } catch (const Error& e) {
    throw ParseError(line, e.what(), e.code());
  }
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string body = trim(raw);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ParseError(line, "missing key");
    if (!entries.emplace(key, Entry{value, line}).second) throw ParseError(line, "duplicate key '" + key + "'");
  }

  static const char* const kKnown[] = {"space", "circumference", "a", "b", "positions", "algorithm", "scheduler",
                                       "adversary", "seed", "delta", "fairness", "rigid", "max_ticks"};
  for (const auto& [key, e] : entries) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw ParseError(e.line, "unknown key '" + key + "'");
    }
  }
  auto get = [&](const std::string& key) -> const Entry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  auto require = [&](const std::string& key) -> const Entry& {
    const Entry* e = get(key);
    if (!e) throw ParseError(line, "missing key '" + key + "'");
    return *e;
  };

  Scenario s;
  const Entry& space = require("space");
  if (space.value == "circle") {
    const Entry* c = get("circumference");
    const Scalar circumference = c ? at_line(c->line, [&] { return parse_scalar(c->value); }) : Scalar(1);
    s.space = at_line(c ? c->line : space.line, [&] { return Space::circle(circumference); });
  } else if (space.value == "segment") {
    const Entry& a = require("a");
    const Entry& b = require("b");
    const Scalar av = at_line(a.line, [&] { return parse_scalar(a.value); });
    const Scalar bv = at_line(b.line, [&] { return parse_scalar(b.value); });
    s.space = at_line(b.line, [&] { return Space::segment(av, bv); });
  } else {
    throw ParseError(space.line, "space must be circle or segment, got '" + space.value + "'");
  }

  const Entry& pos = require("positions");
  s.positions = at_line(pos.line, [&] { return parse_scalar_list(pos.value); });
  at_line(pos.line, [&] { return Configuration(s.space, s.positions); });

  if (const Entry* e = get("algorithm")) s.algorithm = at_line(e->line, [&] { return parse_algorithm(e->value); });
  if (const Entry* e = get("scheduler")) {
    s.policy.kind = at_line(e->line, [&] { return parse_scheduler_kind(e->value); });
  }
  if (const Entry* e = get("adversary")) s.policy.adversary = at_line(e->line, [&] { return parse_adversary(e->value); });
  if (const Entry* e = get("seed")) s.policy.seed = static_cast<std::uint64_t>(parse_int(*e, "seed"));
  if (const Entry* e = get("delta")) s.policy.delta = at_line(e->line, [&] { return parse_scalar(e->value); });
  if (const Entry* e = get("fairness")) s.policy.fairness_bound = static_cast<int>(parse_int(*e, "fairness"));
  if (const Entry* e = get("rigid")) s.policy.rigid = parse_bool(*e, "rigid");
  if (const Entry* e = get("max_ticks")) s.max_ticks = parse_int(*e, "max_ticks");
  if (s.max_ticks < 0) throw ParseError(require("max_ticks").line, "max_ticks must be non-negative");
  at_line(line, [&] {
    s.policy.validate();
    return 0;
  });
  return s;
}

std::string serialize(const Scenario& s) {
  std::ostringstream out;
  if (s.space.is_circle()) {
    out << "space = circle\n";
    out << "circumference = " << to_string(s.space.circumference()) << "\n";
  } else {
    out << "space = segment\n";
    out << "a = " << to_string(s.space.a()) << "\n";
    out << "b = " << to_string(s.space.b()) << "\n";
  }
  out << "positions = " << join(s.positions, ", ") << "\n";
  out << "algorithm = " << to_string(s.algorithm) << "\n";
  out << "scheduler = " << to_string(s.policy.kind) << "\n";
  out << "adversary = " << to_string(s.policy.adversary) << "\n";
  out << "seed = " << s.policy.seed << "\n";
  out << "delta = " << to_string(s.policy.delta) << "\n";
  out << "fairness = " << s.policy.fairness_bound << "\n";
  out << "rigid = " << (s.policy.rigid ? "true" : "false") << "\n";
  out << "max_ticks = " << s.max_ticks << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << contents;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

}  // namespace minsum
