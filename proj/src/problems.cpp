#include "lcm/problems.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcm {

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMoveOnce: return "moveOnce";
    case ProblemKind::kNegIL: return "negIL";
    case ProblemKind::kOSP: return "OSP";
    case ProblemKind::kSUIR: return "SUIR";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view text) {
  for (auto k : {ProblemKind::kMoveOnce, ProblemKind::kNegIL, ProblemKind::kOSP, ProblemKind::kSUIR}) {
    if (text == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown problem: " + std::string(text));
}

std::string_view to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::kSatisfied: return "satisfied";
    case VerdictTag::kViolated: return "violated";
    case VerdictTag::kPending: return "pending";
  }
  return "?";
}

int ProblemSpec::next_index(int index) const {
  const int n = static_cast<int>(sequence.size());
  if (index + 1 < n) return index + 1;
  return perpetual() ? n - period : -1;
}

int ProblemSpec::normalize_index(int index) const {
  const int n = static_cast<int>(sequence.size());
  if (perpetual() && index == n - 1) return n - 1 - period;
  return index;
}

void ProblemSpec::validate() const {
  if (!arena) throw InvariantError("problem has no arena");
  if (initial.empty()) throw InvariantError("problem has no initial configuration");
  const int robots = initial.front().robots();
  for (const auto& c : initial) {
    if (c.robots() != robots) throw InvariantError("initial configurations disagree on robot count");
    for (VertexId v : c.placement) {
      if (v < 0 || v >= arena->order()) throw InvariantError("initial robot off the arena");
    }
  }
  if (fault_budget < 0) throw InvariantError("negative fault budget");
  const int n = static_cast<int>(sequence.size());
  if (kind == ProblemKind::kNegIL || kind == ProblemKind::kOSP) {
    if (n < 2) throw InvariantError(std::string(to_string(kind)) + " needs a required sequence");
    for (const auto& s : sequence) {
      if (static_cast<int>(s.size()) != robots) {
        throw InvariantError("required configuration has the wrong number of robots");
      }
    }
    for (const auto& c : initial) {
      if (c.positions() != sequence.front()) {
        throw InvariantError("initial configuration differs from the first required one");
      }
    }
  }
  if (period < 0 || (period > 0 && period >= n)) {
    throw InvariantError("period must be shorter than the sequence");
  }
  if (perpetual() && sequence[n - 1] != sequence[n - 1 - period]) {
    throw InvariantError("periodic sequence must end where its period starts");
  }
  if (kind == ProblemKind::kOSP && !perpetual()) throw InvariantError("OSP is a perpetual task");
  if (kind == ProblemKind::kSUIR) {
    if (robots != 2) throw InvariantError("SUIR involves exactly two robots");
    (void)suir_middle(*arena);
  }
  if (kind == ProblemKind::kMoveOnce) {
    if (robots != 2) throw InvariantError("moveOnce involves exactly two robots");
    for (const auto& c : initial) (void)move_once_designation(*arena, c);
  }
}

VertexId suir_middle(const EmbeddedGraph& g) {
  std::optional<VertexId> middle;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) {
      if (middle) throw InvariantError("SUIR arena has more than one degree-2 vertex");
      middle = v;
    }
  }
  if (!middle) throw InvariantError("SUIR arena has no degree-2 vertex");
  return *middle;
}

std::pair<RobotId, VertexId> move_once_designation(const EmbeddedGraph& g, const Configuration& c) {
  std::optional<std::pair<RobotId, VertexId>> found;
  for (RobotId r = 0; r < c.robots(); ++r) {
    const VertexId v = c.placement[r];
    if (g.degree(v) != 2) throw InvariantError("moveOnce robots start on degree-2 vertices");
    for (VertexId w : g.neighbors(v)) {
      if (g.degree(w) != 2) continue;
      if (found) throw InvariantError("moveOnce designation is ambiguous");
      found = {r, w};
    }
  }
  if (!found) throw InvariantError("no moveOnce robot has a degree-2 neighbor");
  return *found;
}

namespace {

enum Reason : int {
  kNone = 0,
  kOtherMoved,
  kMovedTwice,
  kWrongTarget,
  kDeviation,
  kMovedAfterFinal,
  kWrongGathering,
  kSeparated,
};

void violate(MonitorState& m, Reason r) {
  m.status = VerdictTag::kViolated;
  m.reason = r;
}

}  // namespace

std::string_view monitor_reason(int reason) {
  switch (reason) {
    case kNone: return "";
    case kOtherMoved: return "robot that must stay still moved";
    case kMovedTwice: return "designated robot moved more than once";
    case kWrongTarget: return "designated robot moved to a vertex other than its degree-2 neighbor";
    case kDeviation: return "configuration deviates from the required sequence";
    case kMovedAfterFinal: return "robots moved after the final required configuration";
    case kWrongGathering: return "robots gathered at the wrong vertex";
    case kSeparated: return "robots separated after gathering";
  }
  return "?";
}

MonitorState monitor_start(const ProblemSpec& p, const Configuration& initial) {
  MonitorState m;
  m.roles.assign(initial.robots(), 0);
  switch (p.kind) {
    case ProblemKind::kMoveOnce: {
      auto [robot, target] = move_once_designation(*p.arena, initial);
      m.roles[robot] = 1;
      m.aux = target;
      break;
    }
    case ProblemKind::kSUIR:
      m.aux = -1;
      break;
    default:
      break;
  }
  return m;
}

void monitor_advance(const ProblemSpec& p, MonitorState& m, const Configuration& before,
                     const Configuration& after) {
  if (m.status == VerdictTag::kViolated) return;
  switch (p.kind) {
    case ProblemKind::kMoveOnce: {
      for (RobotId r = 0; r < before.robots(); ++r) {
        if (before.placement[r] == after.placement[r]) continue;
        if (m.roles[r] == 0) return violate(m, kOtherMoved);
        if (m.index != 0) return violate(m, kMovedTwice);
        if (after.placement[r] != m.aux) return violate(m, kWrongTarget);
        m.index = 1;
        m.status = VerdictTag::kSatisfied;
      }
      break;
    }
    case ProblemKind::kNegIL:
    case ProblemKind::kOSP: {
      auto pos = after.positions();
      if (pos == before.positions()) break;
      const int next = p.next_index(m.index);
      if (next < 0) return violate(m, kMovedAfterFinal);
      if (pos != p.sequence[next]) return violate(m, kDeviation);
      m.index = p.normalize_index(next);
      if (!p.perpetual() && m.index == static_cast<int>(p.sequence.size()) - 1) {
        m.status = VerdictTag::kSatisfied;
      }
      break;
    }
    case ProblemKind::kSUIR: {
      if (m.index == 0 && m.aux < 0) {
        for (RobotId r = 0; r < after.robots(); ++r) {
          if (after.crashed[r] && !before.crashed[r]) m.aux = after.placement[r];
        }
      }
      const bool together = std::all_of(after.placement.begin(), after.placement.end(),
                                        [&](VertexId v) { return v == after.placement.front(); });
      if (m.index == 1) {
        if (!together) violate(m, kSeparated);
        break;
      }
      if (!together) break;
      const VertexId target = m.aux >= 0 ? m.aux : suir_middle(*p.arena);
      if (after.placement.front() != target) return violate(m, kWrongGathering);
      m.index = 1;
      m.status = VerdictTag::kSatisfied;
      break;
    }
  }
}

std::vector<Configuration> stutter_free(const std::vector<Configuration>& trace) {
  std::vector<Configuration> out;
  for (const auto& c : trace) {
    if (out.empty() || !out.back().same_positions(c)) out.push_back(c);
  }
  return out;
}

Verdict judge_trace(const ProblemSpec& p, const std::vector<Configuration>& trace,
                    std::optional<std::pair<RobotId, int>> crash_log) {
  if (trace.empty()) throw std::invalid_argument("empty trace");
  const auto start = trace.front().positions();
  const bool known = std::any_of(p.initial.begin(), p.initial.end(),
                                 [&](const Configuration& c) { return c.positions() == start; });
  if (!known) throw std::invalid_argument("trace does not start in an initial configuration");

  std::vector<Configuration> t = trace;
  if (crash_log) {
    for (size_t i = static_cast<size_t>(std::max(crash_log->second, 0)); i < t.size(); ++i) {
      t[i].crashed.at(crash_log->first) = true;
    }
  }
  MonitorState m = monitor_start(p, t.front());
  // A crash at index 0 is already in effect before the first transition.
  Configuration prev = t.front();
  std::fill(prev.crashed.begin(), prev.crashed.end(), false);
  monitor_advance(p, m, prev, t.front());
  int satisfied_at = m.status == VerdictTag::kSatisfied ? 0 : -1;
  for (size_t i = 1; i < t.size(); ++i) {
    monitor_advance(p, m, t[i - 1], t[i]);
    if (m.status == VerdictTag::kViolated) {
      return {VerdictTag::kViolated, std::string(monitor_reason(m.reason)), static_cast<int>(i)};
    }
    if (m.status == VerdictTag::kSatisfied && satisfied_at < 0) satisfied_at = static_cast<int>(i);
  }
  return {m.status, "", m.status == VerdictTag::kSatisfied ? satisfied_at : -1};
}

}  // namespace lcm
