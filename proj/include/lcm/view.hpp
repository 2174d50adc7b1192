#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcm/graph.hpp"
#include "lcm/model.hpp"

namespace lcm {

/// Table index of an algorithm: canonical snapshot plus own color when the
/// model lets a robot see it.
struct SlotKey {
  std::string key;
  std::optional<Color> own;

  std::string str() const;
  auto operator<=>(const SlotKey&) const = default;
};

/// What a robot perceives in its look phase, expressed in canonical
/// coordinates: `snapshot` and `self` are the decoration and observer after
/// applying the canonicalizing automorphism, so two indistinguishable
/// situations produce identical views.
struct View {
  CanonicalKey key;
  std::optional<Color> own_color;
  /// Neighbor orbits of `self`, each sorted, ordered by smallest member.
  std::vector<std::vector<VertexId>> orbits;
  std::shared_ptr<const EmbeddedGraph> graph;
  Decoration snapshot;
  VertexId self = -1;

  SlotKey slot() const { return {key.str(), own_color}; }
  /// Orbit label containing canonical vertex v, or -1.
  int orbit_of(VertexId v) const;
};

/// `orbit` empty = stay; `color` empty = leave the light unchanged.
struct Action {
  std::optional<int> orbit;
  std::optional<Color> color;

  static Action stay(std::optional<Color> color = std::nullopt) { return {std::nullopt, color}; }
  static Action move(int orbit, std::optional<Color> color = std::nullopt) { return {orbit, color}; }
  std::string str() const;
  auto operator<=>(const Action&) const = default;
};

/// Parses `move=<stay|orbit-i> color=<c|keep>`.
Action parse_action(std::string_view text);

/// A view plus the concrete vertices each of its orbits stands for.
struct Observation {
  View view;
  std::vector<std::vector<VertexId>> targets;
};

/// Snapshot of `robot` in `config`. Throws std::logic_error for a crashed robot.
Observation observe(const std::shared_ptr<const EmbeddedGraph>& g, const Configuration& config,
                    RobotId robot, const RobotModel& model, SymmetryMode mode);

}  // namespace lcm
