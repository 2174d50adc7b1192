#include "lcm/simulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lcm {

namespace {

AdversaryChoice async_full(const ExecState& s, const Decisions& d, bool split) {
  const Configuration& c = s.config;
  AdversaryChoice ch;
  auto first = [&](auto pred) {
    for (RobotId r = 0; r < c.robots(); ++r) {
      if (!c.crashed[r] && pred(r)) return r;
    }
    return -1;
  };
  if (RobotId r = first([&](RobotId r) { return !s.pending[r]; }); r >= 0) {
    ch.event = EventKind::kLook;
    ch.robot = r;
    return ch;
  }
  if (split) {
    if (RobotId r = first([&](RobotId r) { return !s.pending[r]->colored; }); r >= 0) {
      ch.event = EventKind::kColor;
      ch.robot = r;
      return ch;
    }
  }
  ch.event = split ? EventKind::kMove : EventKind::kAct;
  ch.robot = first([](RobotId) { return true; });
  if (ch.robot < 0) throw std::invalid_argument("no live robot left to activate");
  const Pending& p = *s.pending[ch.robot];
  if (p.action.orbit) {
    const auto& t = p.observation.targets.at(static_cast<size_t>(*p.action.orbit));
    if (t.size() > 1) ch.picks.emplace_back(ch.robot, t.front());
  }
  (void)d;
  return ch;
}

}  // namespace

AdversarySpec AdversarySpec::parse(std::string_view text) {
  AdversarySpec a;
  if (text == "full") return a;
  if (text.rfind("random:", 0) == 0) {
    a.kind = Kind::kRandom;
    a.seed = std::stoull(std::string(text.substr(7)));
    return a;
  }
  if (text.rfind("script:", 0) == 0) {
    a.kind = Kind::kScript;
    std::string body(text.substr(7));
    size_t start = 0;
    while (start <= body.size()) {
      size_t end = body.find(';', start);
      if (end == std::string::npos) end = body.size();
      std::string item = body.substr(start, end - start);
      if (item.find_first_not_of(' ') != std::string::npos) a.script.push_back(item);
      start = end + 1;
    }
    return a;
  }
  throw std::invalid_argument("adversary must be full, random:<seed> or script:<choices>");
}

SimulationResult run_simulate(const Scenario& scenario, const Algorithm& algo,
                              const AdversarySpec& adversary, int steps) {
  if (!algo.legal_for(scenario.model)) {
    throw std::invalid_argument(algo.name() + " is not an algorithm for " + scenario.model.str());
  }
  const Engine engine(scenario.problem.arena, scenario.model, scenario.scheduler,
                      {scenario.symmetry, scenario.split_act});
  const EmbeddedGraph& g = engine.graph();
  std::mt19937_64 rng(adversary.seed);
  SimulationResult res;
  ExecState s = ExecState::initial(scenario.problem.initial.front());
  res.states.push_back(s);
  res.trace.push_back(trace_line(g, s, "init"));
  const int total = adversary.kind == AdversarySpec::Kind::kScript ? static_cast<int>(adversary.script.size())
                                                                    : steps;
  for (int i = 0; i < total; ++i) {
    const Decisions d = engine.decide(s, algo);
    AdversaryChoice ch;
    switch (adversary.kind) {
      case AdversarySpec::Kind::kFull:
        ch = scenario.scheduler == Scheduler::kAsync ? async_full(s, d, scenario.split_act)
                                                     : engine.full_activation(s, d);
        break;
      case AdversarySpec::Kind::kRandom: {
        const auto options = engine.enumerate_choices(s, d, scenario.problem.fault_budget);
        if (options.empty()) throw std::invalid_argument("step " + std::to_string(i + 1) + ": no legal choice");
        ch = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
        break;
      }
      case AdversarySpec::Kind::kScript: {
        try {
          ch = AdversaryChoice::parse(adversary.script[i], g);
        } catch (const std::exception& e) {
          throw std::invalid_argument("step " + std::to_string(i + 1) + ": " + e.what());
        }
        const auto options = engine.enumerate_choices(s, d, scenario.problem.fault_budget);
        if (std::find(options.begin(), options.end(), ch) == options.end()) {
          throw std::invalid_argument("step " + std::to_string(i + 1) + ": choice '" + adversary.script[i] +
                                      "' is not legal here");
        }
        break;
      }
    }
    try {
      s = engine.apply(s, d, ch);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("step " + std::to_string(i + 1) + ": " + e.what());
    }
    res.states.push_back(s);
    res.trace.push_back(trace_line(g, s, ch.describe(g)));
  }
  std::vector<Configuration> configs;
  for (const auto& st : res.states) configs.push_back(st.config);
  res.verdict = judge_trace(scenario.problem, configs);
  return res;
}

}  // namespace lcm
