#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcm/graph.hpp"
#include "lcm/model.hpp"

namespace lcm {

enum class ProblemKind { kMoveOnce, kNegIL, kOSP, kSUIR };

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view text);

/// Problem instance: arena, admissible starts, and the task data its kind
/// needs. `sequence` holds required configurations as sorted position lists;
/// with `period > 0` the last `period` transitions repeat forever.
struct ProblemSpec {
  std::string name;
  ProblemKind kind = ProblemKind::kSUIR;
  std::shared_ptr<const EmbeddedGraph> arena;
  std::vector<Configuration> initial;
  std::vector<std::vector<VertexId>> sequence;
  int period = 0;
  int fault_budget = 0;

  bool perpetual() const { return period > 0; }
  /// Successor index in the required sequence; wraps for periodic tasks.
  int next_index(int index) const;
  /// Index after which the remaining obligation is identical to `index`.
  int normalize_index(int index) const;
  void validate() const;
};

enum class VerdictTag { kSatisfied, kViolated, kPending };

std::string_view to_string(VerdictTag tag);

struct Verdict {
  VerdictTag tag = VerdictTag::kPending;
  std::string reason;
  /// Earliest violating trace index, or the index where the task was first
  /// completed; -1 while pending.
  int step = -1;

  bool operator==(const Verdict&) const = default;
};

/// Incremental trace judge. `roles` is per robot and travels with the robot
/// when states are relabeled; the other fields are global.
struct MonitorState {
  VerdictTag status = VerdictTag::kPending;
  int reason = 0;
  int index = 0;
  int aux = -1;
  std::vector<int> roles;

  bool operator==(const MonitorState&) const = default;
};

MonitorState monitor_start(const ProblemSpec& p, const Configuration& initial);
/// Advances across one transition. Crash status is read from `after`.
void monitor_advance(const ProblemSpec& p, MonitorState& m, const Configuration& before,
                     const Configuration& after);
std::string_view monitor_reason(int reason);

/// Drops configurations whose positions equal their predecessor's.
std::vector<Configuration> stutter_free(const std::vector<Configuration>& trace);

/// `crash_log` = (robot, index): the robot is crashed from that trace index on.
Verdict judge_trace(const ProblemSpec& p, const std::vector<Configuration>& trace,
                    std::optional<std::pair<RobotId, int>> crash_log = std::nullopt);

/// One of moveOnce, negIL, OSP, SUIR, loaded from the bundled scenario data.
ProblemSpec builtin_problem(std::string_view name);

/// Degree-2 vertex of the SUIR arena.
VertexId suir_middle(const EmbeddedGraph& g);

/// For moveOnce: (designated robot, target vertex) of an initial configuration.
std::pair<RobotId, VertexId> move_once_designation(const EmbeddedGraph& g, const Configuration& c);

}  // namespace lcm
