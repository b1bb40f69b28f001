#include "minsum/trace.hpp"

#include <sstream>

#include "minsum/error.hpp"

namespace minsum {

namespace {

std::string join_ids(const std::vector<std::size_t>& ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::vector<std::size_t> parse_ids(const std::string& text) {
  std::vector<std::size_t> out;
  if (text == "-") return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

Direction parse_direction(const std::string& text) {
  if (text == "cw") return Direction::kCw;
  if (text == "ccw") return Direction::kCcw;
  throw ParseError(0, "unknown direction '" + text + "'");
}

}  // namespace

std::string format_event(const Event& e) {
  std::ostringstream out;
  const std::string t = std::to_string(e.tick);
  switch (e.kind) {
    case Event::Kind::kActivated:
      out << "activated " << t << ' ' << e.robot;
      break;
    case Event::Kind::kSnapshot:
      out << "snapshot " << t << ' ' << e.robot << ' ' << join(e.positions);
      break;
    case Event::Kind::kDecided:
      out << "decided " << t << ' ' << e.robot;
      if (e.decision.is_move()) {
        out << " move " << to_string(e.decision.destination) << ' ' << to_string(e.decision.direction);
      } else {
        out << " stay";
      }
      break;
    case Event::Kind::kDisplaced:
      out << "displaced " << t << ' ' << e.robot << ' ' << to_string(e.from) << ' ' << to_string(e.to) << ' '
          << to_string(e.amount) << ' ' << to_string(e.direction);
      break;
    case Event::Kind::kCollision:
      out << "collision " << t << ' ' << e.robot << ' ' << to_string(e.amount) << ' ' << join_ids(e.robots);
      break;
    case Event::Kind::kCheckpoint:
      out << "checkpoint " << t << ' ' << join_ids(e.robots) << ' ' << to_string(e.amount);
      break;
    case Event::Kind::kConverged:
      out << "converged " << t;
      break;
    case Event::Kind::kBudgetExceeded:
      out << "budget-exceeded " << t;
      break;
    case Event::Kind::kRefused:
      out << "refused " << e.label;
      break;
    case Event::Kind::kFinal:
      out << "final " << t << ' ' << join(e.positions);
      break;
  }
  return out.str();
}

std::string serialize_trace(const Scenario& s, const Trace& trace) {
  std::ostringstream out;
  out << kTraceHeader << '\n';
  if (s.space.is_circle()) {
    out << "space circle " << to_string(s.space.circumference()) << '\n';
  } else {
    out << "space segment " << to_string(s.space.a()) << ' ' << to_string(s.space.b()) << '\n';
  }
  out << "initial " << join(s.positions) << '\n';
  out << "algorithm " << to_string(s.algorithm) << '\n';
  out << "policy " << to_string(s.policy.kind) << ' ' << to_string(s.policy.adversary) << " seed=" << s.policy.seed
      << " delta=" << to_string(s.policy.delta) << " fairness=" << s.policy.fairness_bound
      << " rigid=" << (s.policy.rigid ? 1 : 0) << '\n';
  for (const auto& e : trace) out << format_event(e) << '\n';
  return out.str();
}

namespace {

Event parse_event(const std::string& kind, std::istringstream& in) {
  Event e;
  auto next = [&]() {
    std::string tok;
    if (!(in >> tok)) throw ParseError(0, "missing field in '" + kind + "' event");
    return tok;
  };
  auto tick = [&]() { return static_cast<std::int64_t>(std::stoll(next())); };
  auto robot = [&]() { return static_cast<std::size_t>(std::stoull(next())); };

  if (kind == "activated") {
    e.kind = Event::Kind::kActivated;
    e.tick = tick();
    e.robot = robot();
  } else if (kind == "snapshot") {
    e.kind = Event::Kind::kSnapshot;
    e.tick = tick();
    e.robot = robot();
    e.positions = parse_scalar_list(next());
  } else if (kind == "decided") {
    e.kind = Event::Kind::kDecided;
    e.tick = tick();
    e.robot = robot();
    const std::string what = next();
    if (what == "move") {
      Scalar dest = parse_scalar(next());
      e.decision = MoveDecision::move(std::move(dest), parse_direction(next()));
    } else if (what != "stay") {
      throw ParseError(0, "decision must be stay or move");
    }
  } else if (kind == "displaced") {
    e.kind = Event::Kind::kDisplaced;
    e.tick = tick();
    e.robot = robot();
    e.from = parse_scalar(next());
    e.to = parse_scalar(next());
    e.amount = parse_scalar(next());
    e.direction = parse_direction(next());
  } else if (kind == "collision") {
    e.kind = Event::Kind::kCollision;
    e.tick = tick();
    e.robot = robot();
    e.amount = parse_scalar(next());
    e.robots = parse_ids(next());
  } else if (kind == "checkpoint") {
    e.kind = Event::Kind::kCheckpoint;
    e.tick = tick();
    e.robots = parse_ids(next());
    e.amount = parse_scalar(next());
  } else if (kind == "converged") {
    e.kind = Event::Kind::kConverged;
    e.tick = tick();
  } else if (kind == "budget-exceeded") {
    e.kind = Event::Kind::kBudgetExceeded;
    e.tick = tick();
  } else if (kind == "refused") {
    e.kind = Event::Kind::kRefused;
    e.label = next();
  } else if (kind == "final") {
    e.kind = Event::Kind::kFinal;
    e.tick = tick();
    e.positions = parse_scalar_list(next());
  } else {
    throw ParseError(0, "unknown event '" + kind + "'");
  }
  std::string extra;
  if (in >> extra) throw ParseError(0, "unexpected field '" + extra + "'");
  return e;
}

}  // namespace

TraceFile parse_trace(std::string_view text) {
  TraceFile out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.empty()) continue;
    try {
      if (!seen_header) {
        if (raw != kTraceHeader) throw ParseError(0, "expected '" + std::string(kTraceHeader) + "'");
        seen_header = true;
        continue;
      }
      std::istringstream fields(raw);
      std::string kind;
      fields >> kind;
      if (kind == "space") {
        std::string which;
        fields >> which;
        std::string p, q;
        if (which == "circle" && fields >> p) {
          out.space = Space::circle(parse_scalar(p));
        } else if (which == "segment" && fields >> p >> q) {
          out.space = Space::segment(parse_scalar(p), parse_scalar(q));
        } else {
          throw ParseError(0, "bad space line");
        }
      } else if (kind == "initial") {
        std::string list;
        fields >> list;
        out.initial = parse_scalar_list(list);
      } else if (kind == "algorithm") {
        std::string name;
        fields >> name;
        out.algorithm = parse_algorithm(name);
      } else if (kind == "policy") {
        std::string sched, adv;
        fields >> sched >> adv;
        out.policy.kind = parse_scheduler_kind(sched);
        out.policy.adversary = parse_adversary(adv);
        std::string kv;
        while (fields >> kv) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos) throw ParseError(0, "bad policy field '" + kv + "'");
          const std::string key = kv.substr(0, eq);
          const std::string value = kv.substr(eq + 1);
          if (key == "seed") out.policy.seed = std::stoull(value);
          else if (key == "delta") out.policy.delta = parse_scalar(value);
          else if (key == "fairness") out.policy.fairness_bound = std::stoi(value);
          else if (key == "rigid") out.policy.rigid = value == "1";
          else throw ParseError(0, "unknown policy field '" + key + "'");
        }
      } else {
        out.events.push_back(parse_event(kind, fields));
        out.lines.push_back(line);
      }
    } catch (const ParseError& e) {
      throw ParseError(line, e.what(), e.code());
    } catch (const Error& e) {
      throw ParseError(line, e.what(), e.code());
    } catch (const std::exception& e) {
      throw ParseError(line, std::string("malformed field: ") + e.what());
    }
  }
  if (!seen_header) throw ParseError(line, "empty trace");
  return out;
}

}  // namespace minsum
