#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lcm/graph.hpp"

namespace lcm {

using RobotId = int;

enum class ModelTag { kOblot, kFsta, kFcom, kLumi };
enum class Scheduler { kFsync, kSsync, kAsync };

std::string_view to_string(ModelTag tag);
std::string_view to_string(Scheduler s);
ModelTag parse_model_tag(std::string_view text);
Scheduler parse_scheduler(std::string_view text);

/// A robot model together with the number of light colors. OBLOT has exactly
/// one color; the lighted models need at least two.
class RobotModel {
 public:
  RobotModel(ModelTag tag, int palette);
  static RobotModel oblot() { return {ModelTag::kOblot, 1}; }

  ModelTag tag() const { return tag_; }
  int palette() const { return palette_; }
  /// FSTA and LUMI robots see their own light.
  bool sees_own_color() const { return tag_ == ModelTag::kFsta || tag_ == ModelTag::kLumi; }
  /// FCOM and LUMI lights are visible to other robots.
  bool sees_others_colors() const { return tag_ == ModelTag::kFcom || tag_ == ModelTag::kLumi; }
  std::string str() const;

  bool operator==(const RobotModel&) const = default;

 private:
  ModelTag tag_;
  int palette_;
};

/// Placement and light of every robot. Robot ids are bookkeeping only and
/// never reach an algorithm.
struct Configuration {
  std::vector<VertexId> placement;
  std::vector<Color> colors;
  std::vector<bool> crashed;

  static Configuration at(std::vector<VertexId> placement);
  int robots() const { return static_cast<int>(placement.size()); }
  int crashed_count() const;
  /// Sorted occupied vertices (with repetition); colors and ids dropped.
  std::vector<VertexId> positions() const;
  bool same_positions(const Configuration& other) const { return positions() == other.positions(); }

  bool operator==(const Configuration&) const = default;
};

void validate(const Configuration& config, const EmbeddedGraph& g, const RobotModel& model);

/// The decoration `observer` perceives under `model`. Colors appear only for
/// models with external lights; the observer's own entry is kHiddenColor in
/// FCOM.
Decoration decorate(const EmbeddedGraph& g, const Configuration& config, const RobotModel& model,
                    RobotId observer);

}  // namespace lcm
