#include "lcm/engine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lcm {

namespace {

std::string robot_name(RobotId r) { return "r" + std::to_string(r); }

RobotId parse_robot(std::string_view text) {
  if (text.size() < 2 || text[0] != 'r') {
    throw std::invalid_argument("bad robot '" + std::string(text) + "'");
  }
  return std::stoi(std::string(text.substr(1)));
}

const std::vector<VertexId>* targets_of(const Observation& obs, const Action& action) {
  if (!action.orbit) return nullptr;
  return &obs.targets.at(static_cast<size_t>(*action.orbit));
}

// Cross product over the members of every ambiguous orbit.
std::vector<std::vector<std::pair<RobotId, VertexId>>> pick_product(
    const std::vector<std::pair<RobotId, const std::vector<VertexId>*>>& movers) {
  std::vector<std::vector<std::pair<RobotId, VertexId>>> out{{}};
  for (const auto& [r, targets] : movers) {
    if (!targets || targets->size() < 2) continue;
    std::vector<std::vector<std::pair<RobotId, VertexId>>> next;
    for (const auto& prefix : out) {
      for (VertexId v : *targets) {
        auto p = prefix;
        p.emplace_back(r, v);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

VertexId resolve_target(const std::vector<VertexId>& targets, RobotId r,
                        const AdversaryChoice& choice) {
  if (targets.size() == 1) return targets.front();
  for (const auto& [pr, v] : choice.picks) {
    if (pr != r) continue;
    if (std::find(targets.begin(), targets.end(), v) == targets.end()) {
      throw std::invalid_argument("pick for " + robot_name(r) + " lies outside its orbit");
    }
    return v;
  }
  throw std::invalid_argument("no vertex picked for " + robot_name(r) + "'s ambiguous move");
}

std::vector<std::optional<RobotId>> crash_options(const Configuration& c, int fault_budget) {
  std::vector<std::optional<RobotId>> out{std::nullopt};
  if (c.crashed_count() >= fault_budget) return out;
  for (RobotId r = 0; r < c.robots(); ++r) {
    if (!c.crashed[r]) out.emplace_back(r);
  }
  return out;
}

}  // namespace

ExecState ExecState::initial(Configuration config) {
  ExecState s;
  s.pending.resize(config.placement.size());
  s.config = std::move(config);
  return s;
}

std::string AdversaryChoice::describe(const EmbeddedGraph& g) const {
  std::string out;
  switch (event) {
    case EventKind::kRound: {
      out = "activate{";
      for (size_t i = 0; i < activated.size(); ++i) {
        if (i) out += ',';
        out += robot_name(activated[i]);
      }
      out += '}';
      break;
    }
    case EventKind::kLook: out = "look(" + robot_name(robot) + ")"; break;
    case EventKind::kAct: out = "act(" + robot_name(robot) + ")"; break;
    case EventKind::kColor: out = "color(" + robot_name(robot) + ")"; break;
    case EventKind::kMove: out = "move(" + robot_name(robot) + ")"; break;
  }
  if (crash) out += "+crash(" + robot_name(*crash) + ")";
  for (const auto& [r, v] : picks) out += "+pick(" + robot_name(r) + "->" + g.name(v) + ")";
  return out;
}

AdversaryChoice AdversaryChoice::parse(std::string_view text, const EmbeddedGraph& g) {
  AdversaryChoice c;
  std::vector<std::string> parts;
  {
    std::string cur;
    int depth = 0;
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch == '(' || ch == '{') ++depth;
      if (ch == ')' || ch == '}') --depth;
      if (ch == '+' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
  }
  auto inner = [](const std::string& p, char open, char close) {
    auto a = p.find(open);
    if (a == std::string::npos || p.back() != close) {
      throw std::invalid_argument("malformed choice part '" + p + "'");
    }
    return p.substr(a + 1, p.size() - a - 2);
  };
  const std::string& head = parts.front();
  if (head.rfind("activate{", 0) == 0) {
    c.event = EventKind::kRound;
    std::istringstream in(inner(head, '{', '}'));
    std::string r;
    while (std::getline(in, r, ',')) {
      if (!r.empty()) c.activated.push_back(parse_robot(r));
    }
    std::sort(c.activated.begin(), c.activated.end());
  } else {
    const std::string kind = head.substr(0, head.find('('));
    if (kind == "look") c.event = EventKind::kLook;
    else if (kind == "act") c.event = EventKind::kAct;
    else if (kind == "color") c.event = EventKind::kColor;
    else if (kind == "move") c.event = EventKind::kMove;
    else throw std::invalid_argument("unknown event '" + head + "'");
    c.robot = parse_robot(inner(head, '(', ')'));
  }
  for (size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.rfind("crash(", 0) == 0) {
      c.crash = parse_robot(inner(p, '(', ')'));
    } else if (p.rfind("pick(", 0) == 0) {
      const std::string body = inner(p, '(', ')');
      const auto arrow = body.find("->");
      if (arrow == std::string::npos) throw std::invalid_argument("pick needs '->'");
      c.picks.emplace_back(parse_robot(body.substr(0, arrow)), g.at(body.substr(arrow + 2)));
    } else {
      throw std::invalid_argument("unknown choice modifier '" + p + "'");
    }
  }
  return c;
}

Engine::Engine(std::shared_ptr<const EmbeddedGraph> graph, RobotModel model, Scheduler scheduler,
               EngineOptions options)
    : graph_(std::move(graph)), model_(model), scheduler_(scheduler), options_(options) {
  if (!graph_) throw std::invalid_argument("engine needs a graph");
}

Observation Engine::observe(const Configuration& config, RobotId robot) const {
  return lcm::observe(graph_, config, robot, model_, options_.symmetry);
}

void Engine::check_action(const Observation& obs, const Action& action) const {
  if (action.orbit && (*action.orbit < 0 || *action.orbit >= static_cast<int>(obs.targets.size()))) {
    throw std::logic_error("action names orbit " + std::to_string(*action.orbit) +
                           " but the view has " + std::to_string(obs.targets.size()));
  }
  if (action.color) {
    const bool ok = model_.tag() == ModelTag::kOblot ? *action.color == 0
                                                     : *action.color >= 0 && *action.color < model_.palette();
    if (!ok) throw std::logic_error("action color " + std::to_string(*action.color) + " outside palette");
  }
}

Decisions Engine::decide(const ExecState& state, const Algorithm& algo) const {
  const int n = state.config.robots();
  Decisions d;
  d.observations.resize(n);
  d.actions.resize(n);
  for (RobotId r = 0; r < n; ++r) {
    if (state.config.crashed[r]) continue;
    if (scheduler_ == Scheduler::kAsync && state.pending[r]) continue;
    d.observations[r] = observe(state.config, r);
    auto action = algo.decide(d.observations[r]->view);
    if (!action) continue;
    Action a = normalize_action(*action, d.observations[r]->view, model_);
    check_action(*d.observations[r], a);
    d.actions[r] = a;
  }
  return d;
}

std::vector<AdversaryChoice> Engine::enumerate_choices(const ExecState& state,
                                                       const Decisions& decisions, int fault_budget,
                                                       bool* deferred) const {
  const Configuration& c = state.config;
  const int n = c.robots();
  std::vector<AdversaryChoice> out;
  auto defer = [&] {
    if (deferred) *deferred = true;
  };
  if (deferred) *deferred = false;

  std::vector<RobotId> alive;
  for (RobotId r = 0; r < n; ++r) {
    if (!c.crashed[r]) alive.push_back(r);
  }
  const auto crashes = crash_options(c, fault_budget);

  if (scheduler_ != Scheduler::kAsync) {
    std::vector<std::vector<RobotId>> sets;
    if (scheduler_ == Scheduler::kFsync) {
      if (!alive.empty()) sets.push_back(alive);
    } else {
      const unsigned k = static_cast<unsigned>(alive.size());
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<RobotId> s;
        for (unsigned i = 0; i < k; ++i) {
          if (mask & (1u << i)) s.push_back(alive[i]);
        }
        sets.push_back(std::move(s));
      }
    }
    for (const auto& set : sets) {
      for (const auto& crash : crashes) {
        std::vector<std::pair<RobotId, const std::vector<VertexId>*>> movers;
        bool ready = true;
        for (RobotId r : set) {
          if (crash && *crash == r) continue;
          if (!decisions.actions[r]) {
            ready = false;
            break;
          }
          movers.emplace_back(r, targets_of(*decisions.observations[r], *decisions.actions[r]));
        }
        if (!ready) {
          defer();
          continue;
        }
        for (auto& picks : pick_product(movers)) {
          AdversaryChoice ch;
          ch.event = EventKind::kRound;
          ch.activated = set;
          ch.crash = crash;
          ch.picks = std::move(picks);
          out.push_back(std::move(ch));
        }
      }
    }
    return out;
  }

  for (RobotId r : alive) {
    EventKind kind;
    const std::vector<VertexId>* targets = nullptr;
    if (!state.pending[r]) {
      kind = EventKind::kLook;
      if (!decisions.actions[r]) {
        defer();
        continue;
      }
    } else {
      const Pending& p = *state.pending[r];
      kind = !options_.split_act ? EventKind::kAct : p.colored ? EventKind::kMove : EventKind::kColor;
      if (kind != EventKind::kColor) targets = targets_of(p.observation, p.action);
    }
    for (const auto& crash : crashes) {
      if (crash && *crash == r) continue;
      for (auto& picks : pick_product({{r, targets}})) {
        AdversaryChoice ch;
        ch.event = kind;
        ch.robot = r;
        ch.crash = crash;
        ch.picks = std::move(picks);
        out.push_back(std::move(ch));
      }
    }
  }
  return out;
}

ExecState Engine::apply(const ExecState& state, const Decisions& decisions,
                        const AdversaryChoice& choice) const {
  const int n = state.config.robots();
  auto valid_robot = [&](RobotId r) { return r >= 0 && r < n; };
  ExecState next = state;
  Configuration& c = next.config;
  if (choice.crash) {
    const RobotId r = *choice.crash;
    if (!valid_robot(r) || c.crashed[r]) throw std::invalid_argument("cannot crash " + robot_name(r));
    c.crashed[r] = true;
    next.pending[r].reset();
  }

  if (choice.event == EventKind::kRound) {
    if (scheduler_ == Scheduler::kAsync) throw std::invalid_argument("rounds are not ASYNC events");
    if (choice.activated.empty()) throw std::invalid_argument("empty activation set");
    std::vector<RobotId> expected;
    for (RobotId r = 0; r < n; ++r) {
      if (!state.config.crashed[r]) expected.push_back(r);
    }
    for (RobotId r : choice.activated) {
      if (!valid_robot(r) || state.config.crashed[r]) {
        throw std::invalid_argument("activation of crashed or unknown robot " + robot_name(r));
      }
    }
    if (scheduler_ == Scheduler::kFsync && choice.activated != expected) {
      throw std::invalid_argument("FSYNC rounds activate every live robot");
    }
    std::vector<VertexId> dest = c.placement;
    std::vector<Color> colors = c.colors;
    for (RobotId r : choice.activated) {
      if (c.crashed[r]) continue;
      if (!decisions.actions[r]) throw std::invalid_argument(robot_name(r) + " has no decided action");
      const Action& a = *decisions.actions[r];
      if (const auto* t = targets_of(*decisions.observations[r], a)) dest[r] = resolve_target(*t, r, choice);
      if (a.color) colors[r] = *a.color;
    }
    c.placement = std::move(dest);
    c.colors = std::move(colors);
    ++next.round;
    return next;
  }

  if (scheduler_ != Scheduler::kAsync) throw std::invalid_argument("single events need ASYNC");
  const RobotId r = choice.robot;
  if (!valid_robot(r) || c.crashed[r]) {
    throw std::invalid_argument("event for crashed or unknown robot " + robot_name(r));
  }
  auto& pending = next.pending[r];
  switch (choice.event) {
    case EventKind::kLook:
      if (pending) throw std::invalid_argument(robot_name(r) + " looked twice without acting");
      if (!decisions.actions[r]) throw std::invalid_argument(robot_name(r) + " has no decided action");
      pending = Pending{*decisions.observations[r], *decisions.actions[r], false};
      break;
    case EventKind::kAct:
    case EventKind::kColor:
    case EventKind::kMove: {
      if (!pending) throw std::invalid_argument(robot_name(r) + " acts without a pending look");
      const bool split = options_.split_act;
      if ((choice.event == EventKind::kAct) == split ||
          (choice.event == EventKind::kColor && pending->colored) ||
          (choice.event == EventKind::kMove && !pending->colored)) {
        throw std::invalid_argument("event out of order for " + robot_name(r));
      }
      const Action a = pending->action;
      if (choice.event != EventKind::kMove && a.color) c.colors[r] = *a.color;
      if (choice.event != EventKind::kColor) {
        if (const auto* t = targets_of(pending->observation, a)) c.placement[r] = resolve_target(*t, r, choice);
        pending.reset();
      } else {
        pending->colored = true;
      }
      break;
    }
    case EventKind::kRound:
      break;
  }
  ++next.round;
  return next;
}

ExecState Engine::step(const ExecState& state, const Algorithm& algo,
                       const AdversaryChoice& choice) const {
  return apply(state, decide(state, algo), choice);
}

ExecState Engine::step_sync(const ExecState& state, const AdversaryChoice& choice,
                            const Algorithm& algo) const {
  if (scheduler_ == Scheduler::kAsync || choice.event != EventKind::kRound) {
    throw std::invalid_argument("step_sync needs a synchronous round");
  }
  return step(state, algo, choice);
}

ExecState Engine::step_async(const ExecState& state, const AdversaryChoice& choice,
                             const Algorithm& algo) const {
  if (scheduler_ != Scheduler::kAsync || choice.event == EventKind::kRound) {
    throw std::invalid_argument("step_async needs an ASYNC event");
  }
  return step(state, algo, choice);
}

AdversaryChoice Engine::full_activation(const ExecState& state, const Decisions& decisions) const {
  AdversaryChoice ch;
  for (RobotId r = 0; r < state.config.robots(); ++r) {
    if (state.config.crashed[r]) continue;
    ch.activated.push_back(r);
    if (!decisions.actions[r]) continue;
    const auto* t = targets_of(*decisions.observations[r], *decisions.actions[r]);
    if (t && t->size() > 1) ch.picks.emplace_back(r, t->front());
  }
  return ch;
}

std::string trace_line(const EmbeddedGraph& g, const ExecState& state, std::string_view event) {
  const Configuration& c = state.config;
  std::ostringstream out;
  out << "round=" << state.round << " event=" << event << " placement=[";
  for (int r = 0; r < c.robots(); ++r) out << (r ? "," : "") << g.name(c.placement[r]);
  out << "] colors=[";
  for (int r = 0; r < c.robots(); ++r) out << (r ? "," : "") << c.colors[r];
  out << "] crashed={";
  bool first = true;
  for (int r = 0; r < c.robots(); ++r) {
    if (!c.crashed[r]) continue;
    out << (first ? "" : ",") << robot_name(r);
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace lcm
