#include "lcm/algorithms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcm {

namespace {

std::vector<VertexId> occupied(const View& v) {
  std::vector<VertexId> out;
  for (VertexId u = 0; u < static_cast<VertexId>(v.snapshot.size()); ++u) {
    for (int k = 0; k < v.snapshot[u].count; ++k) out.push_back(u);
  }
  return out;
}

// Always step toward the other robot; stay once co-located.
class SuirOblot : public Algorithm {
 public:
  std::string name() const override { return "suir-oblot"; }
  bool legal_for(const RobotModel&) const override { return true; }

  std::optional<Action> decide(const View& v) const override {
    if (v.snapshot[v.self].count > 1) return Action::stay(0);
    std::optional<VertexId> other;
    for (VertexId u : occupied(v)) {
      if (u != v.self) {
        other = u;
        break;
      }
    }
    if (!other) return Action::stay(0);
    const auto& g = *v.graph;
    VertexId best = -1;
    for (VertexId n : g.neighbors(v.self)) {
      if (best < 0 || g.distance(n, *other) < g.distance(best, *other)) best = n;
    }
    return Action::move(v.orbit_of(best), 0);
  }
};

// Internal states: 0 = off, 1 = done.
class MoveOnceFsta : public Algorithm {
 public:
  std::string name() const override { return "move-once-fsta"; }
  bool legal_for(const RobotModel& m) const override {
    return m.sees_own_color() && m.palette() >= 2;
  }

  std::optional<Action> decide(const View& v) const override {
    const Color own = v.own_color.value_or(0);
    const auto& g = *v.graph;
    if (own == 0 && g.degree(v.self) == 2) {
      for (VertexId n : g.neighbors(v.self)) {
        if (g.degree(n) == 2 && v.snapshot[n].count == 0) return Action::move(v.orbit_of(n), 1);
      }
    }
    return Action::stay(own);
  }
};

// External colors of the oscillation algorithm.
enum OspColor : Color { kOff = 0, kColN = 1, kColF = 2, kColT = 3 };

class AlgoOspFcom : public Algorithm {
 public:
  std::string name() const override { return "algo-osp-fcom"; }
  bool legal_for(const RobotModel& m) const override {
    return m.sees_others_colors() && m.palette() >= 4;
  }

  std::optional<Action> decide(const View& v) const override {
    const auto& g = *v.graph;
    auto robots = occupied(v);
    if (robots.size() != 3) throw std::runtime_error("algo-osp-fcom expects three robots");
    std::vector<VertexId> others;
    for (VertexId u : robots) {
      if (u != v.self) others.push_back(u);
    }
    if (others.size() != 2) throw std::runtime_error("algo-osp-fcom expects distinct positions");
    auto between = [&](VertexId a, VertexId m, VertexId b) {
      return g.distance(a, m) + g.distance(m, b) == g.distance(a, b);
    };
    if (between(others[0], v.self, others[1])) return Action::stay(kOff);
    const VertexId middle = between(v.self, others[0], others[1]) ? others[0] : others[1];
    const VertexId peer = middle == others[0] ? others[1] : others[0];
    const Color peer_color = v.snapshot[peer].colors.empty() ? kOff : v.snapshot[peer].colors.front();
    const int d = g.distance(v.self, middle);
    const int dp = g.distance(peer, middle);

    auto step = [&](int delta) {
      for (VertexId n : g.neighbors(v.self)) {
        if (g.distance(n, middle) == d + delta) return v.orbit_of(n);
      }
      throw std::runtime_error("algo-osp-fcom: no vertex away from the middle robot");
    };

    if (peer_color == kOff) {
      if (d > dp) return Action::move(step(-1), kColN);
      if (d < dp) return Action::stay(kOff);
    } else if (peer_color == kColN) {
      if (d == dp) return Action::move(step(+1), kColN);
      if (d < dp) return Action::stay(kColF);
    } else if (peer_color == kColF && d > dp) {
      return Action::move(step(-1), kColT);
    } else if (peer_color == kColT && d == dp) {
      return Action::move(step(+1), kOff);
    }
    return Action::stay();
  }
};

// Config-I -> Config-II by the robot whose move the data prescribes (it lights
// up as it goes), then Config-II -> Config-III by the robot the lit mover
// singles out.
class NegIlFcom : public Algorithm {
 public:
  explicit NegIlFcom(const ProblemSpec& p) {
    if (p.kind != ProblemKind::kNegIL || p.sequence.size() != 3) {
      throw std::invalid_argument("neg-il-fcom needs a negIL problem with three configurations");
    }
    first_ = p.sequence[0];
    second_ = p.sequence[1];
    third_ = p.sequence[2];
    auto single_move = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
      std::vector<VertexId> gone, come;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(gone));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(come));
      if (gone.size() != 1 || come.size() != 1) {
        throw std::invalid_argument("negIL configurations must differ by a single move");
      }
      return std::pair{gone[0], come[0]};
    };
    std::tie(mover_from_, mover_to_) = single_move(first_, second_);
    std::tie(second_from_, second_to_) = single_move(second_, third_);
  }

  std::string name() const override { return "neg-il-fcom"; }
  bool legal_for(const RobotModel& m) const override {
    return m.sees_others_colors() && m.palette() >= 2;
  }

  std::optional<Action> decide(const View& v) const override {
    const auto& g = *v.graph;
    const auto here = occupied(v);
    auto image = [](const std::vector<VertexId>& set, const Permutation& tau) {
      std::vector<VertexId> out;
      for (VertexId u : set) out.push_back(tau[u]);
      std::sort(out.begin(), out.end());
      return out;
    };
    for (const auto& tau : g.automorphisms(SymmetryMode::kGraph)) {
      if (image(first_, tau) == here && v.self == tau[mover_from_]) {
        return Action::move(v.orbit_of(tau[mover_to_]), 1);
      }
    }
    for (const auto& tau : g.automorphisms(SymmetryMode::kGraph)) {
      if (image(second_, tau) != here || v.self != tau[second_from_]) continue;
      const auto& lit = v.snapshot[tau[mover_to_]].colors;
      if (std::find(lit.begin(), lit.end(), 1) != lit.end()) {
        return Action::move(v.orbit_of(tau[second_to_]));
      }
    }
    return Action::stay();
  }

 private:
  std::vector<VertexId> first_, second_, third_;
  VertexId mover_from_ = -1, mover_to_ = -1, second_from_ = -1, second_to_ = -1;
};

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

AlgorithmPtr builtin_algorithm(std::string_view name, const ProblemSpec* context) {
  if (name == "suir-oblot") return std::make_shared<SuirOblot>();
  if (name == "move-once-fsta") return std::make_shared<MoveOnceFsta>();
  if (name == "algo-osp-fcom") return std::make_shared<AlgoOspFcom>();
  if (name == "neg-il-fcom") {
    if (!context) throw std::invalid_argument("neg-il-fcom needs its negIL problem");
    return std::make_shared<NegIlFcom>(*context);
  }
  throw std::invalid_argument("unknown builtin algorithm: " + std::string(name));
}

std::vector<std::string> builtin_algorithm_names() {
  return {"suir-oblot", "move-once-fsta", "algo-osp-fcom", "neg-il-fcom"};
}

// ---------------------------------------------------------------------------

std::optional<Action> TableAlgorithm::decide(const View& view) const {
  auto it = entries_.find(view.slot());
  if (it != entries_.end()) return it->second;
  return fallback_;
}

bool TableAlgorithm::legal_for(const RobotModel& model) const {
  auto color_ok = [&](const Action& a) {
    if (!a.color) return true;
    if (model.tag() == ModelTag::kOblot) return *a.color == 0;
    return *a.color >= 0 && *a.color < model.palette();
  };
  if (fallback_ && !color_ok(*fallback_)) return false;
  for (const auto& [slot, action] : entries_) {
    if (slot.own.has_value() != model.sees_own_color()) return false;
    if (!color_ok(action)) return false;
  }
  return true;
}

void TableAlgorithm::bind(const SlotKey& slot, const Action& action) {
  auto [it, inserted] = entries_.emplace(slot, action);
  if (!inserted && it->second != action) {
    throw std::invalid_argument("slot '" + slot.str() + "' bound to two different actions");
  }
}

std::string TableAlgorithm::to_text() const {
  std::ostringstream out;
  for (const auto& [slot, action] : entries_) {
    out << "when " << slot.key;
    if (slot.own) out << " own=" << *slot.own;
    out << " -> " << action.str() << '\n';
  }
  return out.str();
}

TableAlgorithm TableAlgorithm::parse(std::string_view text, std::string name) {
  TableAlgorithm table(std::move(name));
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) continue;
    if (word != "when") throw ParseError(line_no, 1, "expected 'when'");
    SlotKey slot;
    if (!(fields >> slot.key)) throw ParseError(line_no, 6, "missing key");
    std::string tok;
    fields >> tok;
    if (tok.rfind("own=", 0) == 0) {
      slot.own = std::stoi(tok.substr(4));
      fields >> tok;
    }
    if (tok != "->") throw ParseError(line_no, static_cast<int>(line.find(tok)) + 1, "expected '->'");
    std::string rest;
    std::getline(fields, rest);
    try {
      table.bind(slot, parse_action(rest));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, static_cast<int>(line.find("->")) + 3, e.what());
    }
  }
  return table;
}

std::optional<Action> RandomTableAlgorithm::decide(const View& view) const {
  const auto domain = action_domain(view, model_);
  const std::uint64_t h = mix(fnv1a(view.slot().str()) ^ mix(seed_));
  return domain[h % domain.size()];
}

// ---------------------------------------------------------------------------

std::vector<Action> action_domain(const View& view, const RobotModel& model) {
  std::vector<std::optional<Color>> colors;
  if (model.tag() == ModelTag::kOblot) {
    colors.push_back(0);
  } else {
    for (Color c = 0; c < model.palette(); ++c) colors.push_back(c);
    if (!model.sees_own_color()) colors.push_back(std::nullopt);
  }
  std::vector<Action> out;
  for (int m = -1; m < static_cast<int>(view.orbits.size()); ++m) {
    for (const auto& c : colors) {
      out.push_back(m < 0 ? Action::stay(c) : Action::move(m, c));
    }
  }
  return out;
}

Action normalize_action(const Action& action, const View& view, const RobotModel& model) {
  Action a = action;
  if (!a.color) {
    if (model.tag() == ModelTag::kOblot) {
      a.color = 0;
    } else if (model.sees_own_color() && view.own_color) {
      a.color = *view.own_color;
    }
  }
  return a;
}

std::map<SlotKey, std::vector<Action>> algorithm_space(const RobotModel& model,
                                                       const std::vector<View>& universe) {
  std::map<SlotKey, std::vector<Action>> out;
  for (const auto& v : universe) out.emplace(v.slot(), action_domain(v, model));
  return out;
}

}  // namespace lcm
