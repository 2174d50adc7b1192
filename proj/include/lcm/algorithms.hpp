#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcm/model.hpp"
#include "lcm/problems.hpp"
#include "lcm/view.hpp"

namespace lcm {

/// A deterministic robot algorithm: a function of the view alone.
class Algorithm {
 public:
  virtual ~Algorithm() = default;
  virtual std::string name() const = 0;
  /// Empty result means the algorithm has no entry for this view.
  virtual std::optional<Action> decide(const View& view) const = 0;
  /// Whether the algorithm only uses capabilities the model provides.
  virtual bool legal_for(const RobotModel& model) const = 0;
};

using AlgorithmPtr = std::shared_ptr<const Algorithm>;

/// suir-oblot, move-once-fsta, algo-osp-fcom, neg-il-fcom. neg-il-fcom reads
/// its configurations from `context`, which must then be a negIL problem.
AlgorithmPtr builtin_algorithm(std::string_view name, const ProblemSpec* context = nullptr);
std::vector<std::string> builtin_algorithm_names();

/// Finite map from (key, own color) to action, with an optional fallback.
class TableAlgorithm : public Algorithm {
 public:
  TableAlgorithm() = default;
  explicit TableAlgorithm(std::string name) : name_(std::move(name)) {}

  std::string name() const override { return name_; }
  std::optional<Action> decide(const View& view) const override;
  bool legal_for(const RobotModel& model) const override;

  /// Throws std::invalid_argument if the slot is already bound to another action.
  void bind(const SlotKey& slot, const Action& action);
  void unbind(const SlotKey& slot) { entries_.erase(slot); }
  void set_default(std::optional<Action> fallback) { fallback_ = fallback; }
  const std::map<SlotKey, Action>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  /// `when <key> [own=<c>] -> move=<stay|orbit-i> color=<c|keep>` per line.
  std::string to_text() const;
  static TableAlgorithm parse(std::string_view text, std::string name = "table");

 private:
  std::string name_ = "table";
  std::map<SlotKey, Action> entries_;
  std::optional<Action> fallback_;
};

/// Picks a pseudo-random legal action per slot, fixed by the seed: a total
/// table over every view without materializing it.
class RandomTableAlgorithm : public Algorithm {
 public:
  RandomTableAlgorithm(RobotModel model, std::uint64_t seed) : model_(model), seed_(seed) {}
  std::string name() const override { return "random-table#" + std::to_string(seed_); }
  std::optional<Action> decide(const View& view) const override;
  bool legal_for(const RobotModel& model) const override { return model == model_; }

 private:
  RobotModel model_;
  std::uint64_t seed_;
};

/// Every legal action in a view: stay plus each neighbor orbit, crossed with
/// every color the model may set. FCOM robots may also leave their light
/// unchanged; for FSTA/LUMI that is the same as re-setting the visible color.
std::vector<Action> action_domain(const View& view, const RobotModel& model);

/// Rewrites `keep` to the explicit color when the robot can see it.
Action normalize_action(const Action& action, const View& view, const RobotModel& model);

/// Slot domains for a set of views (duplicates by slot collapse).
std::map<SlotKey, std::vector<Action>> algorithm_space(const RobotModel& model,
                                                       const std::vector<View>& universe);

}  // namespace lcm
