#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcm/algorithms.hpp"
#include "lcm/engine.hpp"
#include "lcm/problems.hpp"
#include "lcm/scenario.hpp"

namespace lcm {

/// Execution state plus the bookkeeping the search needs: steps since each
/// robot last acted (fairness) and the problem monitor.
struct SearchState {
  ExecState exec;
  std::vector<int> idle;
  MonitorState monitor;
};

/// Robot-anonymous encoding: equal for states that differ only by a
/// relabeling of robot ids. The round counter is not part of it.
std::vector<int> anonymous_key(const SearchState& s);

/// Concrete execution: an initial configuration and the adversary's choices.
/// For a lasso, the execution returns to the state it had after
/// `loop_start` choices and may repeat the remaining choices forever.
struct Witness {
  int initial = 0;
  std::vector<AdversaryChoice> choices;
  int loop_start = -1;
  std::string reason;
  /// Engine trace lines, one per state.
  std::vector<std::string> trace;

  bool lasso() const { return loop_start >= 0; }
};

/// Adversary decision tree: at an inner node the algorithm is asked for its
/// action in `view`; each possible answer leads to a subtree. Leaves hold
/// the execution that defeats every algorithm consistent with the answers
/// given on the way down.
struct StrategyNode {
  SlotKey slot;
  std::optional<View> view;
  std::vector<std::pair<Action, std::shared_ptr<const StrategyNode>>> children;
  std::optional<Witness> leaf;

  size_t leaves() const;
  size_t depth() const;
};

enum class CertTag { kSolved, kViolated, kImpossible, kInconclusive };

std::string_view to_string(CertTag tag);

struct Certificate {
  CertTag tag = CertTag::kInconclusive;
  std::string reason;
  size_t explored = 0;
  Bounds bounds;
  std::optional<Witness> witness;
  /// Solved perpetual tasks: a sample of the fair cycles the runs settle in.
  std::vector<Witness> lassos;
  std::shared_ptr<const StrategyNode> strategy;
  /// Inconclusive impossibility runs: the assignment nothing refuted.
  std::optional<TableAlgorithm> candidate;
};

struct CheckContext {
  ProblemSpec problem;
  RobotModel model = RobotModel::oblot();
  Scheduler scheduler = Scheduler::kFsync;
  Bounds bounds;
  EngineOptions engine;

  static CheckContext from(const Scenario& s);
  /// The model impossibility runs quantify over: palette from the bounds
  /// (always 1 for OBLOT).
  CheckContext with_palette_bound() const;
};

Certificate verify_solution(const Algorithm& algo, const CheckContext& ctx);
Certificate verify_impossibility(const CheckContext& ctx);

struct StateGraph {
  struct Edge {
    int from;
    int to;
    AdversaryChoice choice;
  };
  std::vector<SearchState> states;
  std::vector<int> depth;
  std::vector<Edge> edges;
  /// A state at the depth bound still had unseen successors.
  bool truncated = false;
};

StateGraph reachable_states(const Algorithm& algo, const CheckContext& ctx);

/// Result of running a witness against an algorithm.
struct Replay {
  /// Every choice was legal and fair, and a lasso returned to its loop state.
  bool ok = false;
  /// The run reproduces a violation: a violated monitor, or a closed lasso
  /// that never completes (terminal tasks) or never moves (perpetual tasks).
  bool violated = false;
  std::string detail;
  std::vector<ExecState> trace;
  MonitorState monitor;
};

/// Re-executes the witness concretely: every choice must be legal and fair
/// under `algo`, and the run must end violated (or close its lasso).
Replay replay_witness(const Witness& w, const Algorithm& algo, const CheckContext& ctx);

/// Follows the strategy tree using `algo`'s answers and replays the leaf.
Replay replay_strategy(const StrategyNode& root, const Algorithm& algo, const CheckContext& ctx);

/// Structured text: header, bounds, then witness trace or indented strategy.
std::string to_text(const Certificate& cert, const CheckContext& ctx);

}  // namespace lcm
