#include "lcm/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcm {

std::string_view to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::kOblot: return "OBLOT";
    case ModelTag::kFsta: return "FSTA";
    case ModelTag::kFcom: return "FCOM";
    case ModelTag::kLumi: return "LUMI";
  }
  return "?";
}

std::string_view to_string(Scheduler s) {
  switch (s) {
    case Scheduler::kFsync: return "FSYNC";
    case Scheduler::kSsync: return "SSYNC";
    case Scheduler::kAsync: return "ASYNC";
  }
  return "?";
}

ModelTag parse_model_tag(std::string_view text) {
  for (auto tag : {ModelTag::kOblot, ModelTag::kFsta, ModelTag::kFcom, ModelTag::kLumi}) {
    if (text == to_string(tag)) return tag;
  }
  throw std::invalid_argument("unknown robot model: " + std::string(text));
}

Scheduler parse_scheduler(std::string_view text) {
  for (auto s : {Scheduler::kFsync, Scheduler::kSsync, Scheduler::kAsync}) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown scheduler: " + std::string(text));
}

RobotModel::RobotModel(ModelTag tag, int palette) : tag_(tag), palette_(palette) {
  if (tag == ModelTag::kOblot && palette != 1) {
    throw InvariantError("OBLOT robots have exactly one color");
  }
  if (tag != ModelTag::kOblot && palette < 2) {
    throw InvariantError(std::string(to_string(tag)) + " needs a palette of at least 2 colors");
  }
}

std::string RobotModel::str() const {
  return std::string(to_string(tag_)) + "(" + std::to_string(palette_) + ")";
}

Configuration Configuration::at(std::vector<VertexId> placement) {
  Configuration c;
  c.colors.assign(placement.size(), 0);
  c.crashed.assign(placement.size(), false);
  c.placement = std::move(placement);
  return c;
}

int Configuration::crashed_count() const {
  return static_cast<int>(std::count(crashed.begin(), crashed.end(), true));
}

std::vector<VertexId> Configuration::positions() const {
  std::vector<VertexId> out = placement;
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const Configuration& config, const EmbeddedGraph& g, const RobotModel& model) {
  const size_t n = config.placement.size();
  if (config.colors.size() != n || config.crashed.size() != n) {
    throw InvariantError("configuration vectors disagree in length");
  }
  for (size_t r = 0; r < n; ++r) {
    if (config.placement[r] < 0 || config.placement[r] >= g.order()) {
      throw InvariantError("robot r" + std::to_string(r) + " is not on a declared vertex");
    }
    if (config.colors[r] < 0 || config.colors[r] >= model.palette()) {
      throw InvariantError("robot r" + std::to_string(r) + " has color outside the palette");
    }
  }
}

Decoration decorate(const EmbeddedGraph& g, const Configuration& config, const RobotModel& model,
                    RobotId observer) {
  Decoration deco(g.order());
  const bool colored = model.sees_others_colors();
  for (RobotId r = 0; r < config.robots(); ++r) {
    VertexDeco& d = deco[config.placement[r]];
    ++d.count;
    if (colored) {
      const bool hidden = r == observer && !model.sees_own_color();
      d.colors.push_back(hidden ? kHiddenColor : config.colors[r]);
    }
  }
  for (auto& d : deco) std::sort(d.colors.begin(), d.colors.end());
  return deco;
}

}  // namespace lcm
