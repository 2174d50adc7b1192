#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcm/algorithms.hpp"
#include "lcm/graph.hpp"
#include "lcm/model.hpp"
#include "lcm/view.hpp"

namespace lcm {

/// An ASYNC robot between its Look and its (last) Act event.
struct Pending {
  Observation observation;
  Action action;
  /// Split-act only: the color part has already been applied.
  bool colored = false;
};

struct ExecState {
  Configuration config;
  std::vector<std::optional<Pending>> pending;
  int round = 0;

  static ExecState initial(Configuration config);
};

enum class EventKind { kRound, kLook, kAct, kColor, kMove };

struct AdversaryChoice {
  EventKind event = EventKind::kRound;
  /// kRound: robots activated this round, ascending.
  std::vector<RobotId> activated;
  /// ASYNC events: the robot the event belongs to.
  RobotId robot = -1;
  /// Concrete vertex for every mover whose orbit has more than one member.
  std::vector<std::pair<RobotId, VertexId>> picks;
  std::optional<RobotId> crash;

  /// `activate{r0,r1}`, `look(r0)`, `act(r0)`, `color(r0)`, `move(r0)`,
  /// followed by `+crash(r1)` and `+pick(r0->m1)` suffixes.
  std::string describe(const EmbeddedGraph& g) const;
  static AdversaryChoice parse(std::string_view text, const EmbeddedGraph& g);

  bool operator==(const AdversaryChoice&) const = default;
};

/// What every robot that could be activated now would see and do. Robots that
/// are crashed (or, under ASYNC, already hold a pending action) have neither.
/// An observation without an action means the algorithm has no entry for it.
struct Decisions {
  std::vector<std::optional<Observation>> observations;
  std::vector<std::optional<Action>> actions;

  bool undecided(RobotId r) const { return observations[r] && !actions[r]; }
};

struct EngineOptions {
  SymmetryMode symmetry = SymmetryMode::kGraph;
  /// ASYNC only: Look / Color / Move instead of Look / Act.
  bool split_act = false;
};

class Engine {
 public:
  Engine(std::shared_ptr<const EmbeddedGraph> graph, RobotModel model, Scheduler scheduler,
         EngineOptions options = {});

  const EmbeddedGraph& graph() const { return *graph_; }
  const std::shared_ptr<const EmbeddedGraph>& graph_ptr() const { return graph_; }
  const RobotModel& model() const { return model_; }
  Scheduler scheduler() const { return scheduler_; }
  const EngineOptions& options() const { return options_; }

  Observation observe(const Configuration& config, RobotId robot) const;
  Decisions decide(const ExecState& state, const Algorithm& algo) const;

  /// Every legal choice whose acting robots have decided actions, in a fixed
  /// order. Choices that need an undecided robot are left out and flagged via
  /// `deferred`.
  std::vector<AdversaryChoice> enumerate_choices(const ExecState& state, const Decisions& decisions,
                                                 int fault_budget, bool* deferred = nullptr) const;

  /// Throws std::invalid_argument for a choice that is not legal here.
  ExecState apply(const ExecState& state, const Decisions& decisions,
                  const AdversaryChoice& choice) const;
  ExecState step(const ExecState& state, const Algorithm& algo, const AdversaryChoice& choice) const;

  /// Scheduler-specific entry points; both reject a choice of the wrong kind.
  ExecState step_sync(const ExecState& state, const AdversaryChoice& choice,
                      const Algorithm& algo) const;
  ExecState step_async(const ExecState& state, const AdversaryChoice& choice,
                       const Algorithm& algo) const;

  /// Round activating every non-crashed robot, first member of each orbit picked.
  AdversaryChoice full_activation(const ExecState& state, const Decisions& decisions) const;

 private:
  void check_action(const Observation& obs, const Action& action) const;

  std::shared_ptr<const EmbeddedGraph> graph_;
  RobotModel model_;
  Scheduler scheduler_;
  EngineOptions options_;
};

/// `round=<n> event=<desc> placement=[..] colors=[..] crashed={..}`.
std::string trace_line(const EmbeddedGraph& g, const ExecState& state, std::string_view event);

}  // namespace lcm
