#include "lcm/view.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcm {

std::string SlotKey::str() const {
  std::string out = key;
  if (own) out += " own=" + std::to_string(*own);
  return out;
}

int View::orbit_of(VertexId v) const {
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (std::binary_search(orbits[i].begin(), orbits[i].end(), v)) return static_cast<int>(i);
  }
  return -1;
}

std::string Action::str() const {
  std::string out = "move=";
  out += orbit ? "orbit-" + std::to_string(*orbit) : std::string("stay");
  out += " color=";
  out += color ? std::to_string(*color) : std::string("keep");
  return out;
}

Action parse_action(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Action a;
  bool have_move = false;
  bool have_color = false;
  while (in >> tok) {
    if (tok.rfind("move=", 0) == 0) {
      std::string v = tok.substr(5);
      if (v == "stay") {
        a.orbit.reset();
      } else if (v.rfind("orbit-", 0) == 0) {
        a.orbit = std::stoi(v.substr(6));
      } else {
        throw std::invalid_argument("bad move '" + v + "'");
      }
      have_move = true;
    } else if (tok.rfind("color=", 0) == 0) {
      std::string v = tok.substr(6);
      if (v == "keep") {
        a.color.reset();
      } else {
        a.color = std::stoi(v);
      }
      have_color = true;
    } else {
      throw std::invalid_argument("unexpected token '" + tok + "' in action");
    }
  }
  if (!have_move || !have_color) throw std::invalid_argument("action needs move= and color=");
  return a;
}

Observation observe(const std::shared_ptr<const EmbeddedGraph>& g, const Configuration& config,
                    RobotId robot, const RobotModel& model, SymmetryMode mode) {
  if (config.crashed.at(robot)) throw std::logic_error("crashed robots are never activated");
  const VertexId at = config.placement[robot];
  const Decoration deco = decorate(*g, config, model, robot);
  CanonicalForm form = canonicalize(*g, deco, at, mode);
  const Permutation& sigma = form.to_canonical;

  Observation obs;
  View& view = obs.view;
  view.key = std::move(form.key);
  if (model.sees_own_color()) view.own_color = config.colors[robot];
  view.graph = g;
  view.snapshot = permute(deco, sigma);
  view.self = sigma[at];

  // Neighbor orbits under the stabilizer of (decoration, observer).
  const auto stabilizer = decorated_symmetries(*g, deco, at, mode == SymmetryMode::kIsometric);
  std::vector<std::vector<VertexId>> actual;
  std::vector<bool> seen(g->order(), false);
  for (VertexId n : g->neighbors(at)) {
    if (seen[n]) continue;
    std::vector<VertexId> orbit;
    for (const auto& s : stabilizer) {
      const VertexId img = s.permutation[n];
      if (!seen[img]) {
        seen[img] = true;
        orbit.push_back(img);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    actual.push_back(std::move(orbit));
  }
  std::vector<std::pair<std::vector<VertexId>, size_t>> canon;
  for (size_t i = 0; i < actual.size(); ++i) {
    std::vector<VertexId> c;
    for (VertexId v : actual[i]) c.push_back(sigma[v]);
    std::sort(c.begin(), c.end());
    canon.emplace_back(std::move(c), i);
  }
  std::sort(canon.begin(), canon.end());
  for (auto& [c, i] : canon) {
    view.orbits.push_back(c);
    obs.targets.push_back(actual[i]);
  }
  return obs;
}

}  // namespace lcm
