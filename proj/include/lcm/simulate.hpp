#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcm/algorithms.hpp"
#include "lcm/engine.hpp"
#include "lcm/problems.hpp"
#include "lcm/scenario.hpp"

namespace lcm {

/// How simulate resolves the adversary's choices.
struct AdversarySpec {
  enum class Kind { kFull, kRandom, kScript };
  Kind kind = Kind::kFull;
  std::uint64_t seed = 0;
  std::vector<std::string> script;

  /// `full`, `random:<seed>`, or `script:<choice>;<choice>;...`.
  static AdversarySpec parse(std::string_view text);
};

struct SimulationResult {
  std::vector<std::string> trace;
  std::vector<ExecState> states;
  Verdict verdict;
};

/// Runs `steps` adversary steps (all of them for a script). FSYNC/SSYNC full
/// activation activates every live robot each round; under ASYNC it looks
/// with every robot, then acts with every robot. Throws
/// std::invalid_argument naming the step when a scripted choice is illegal.
SimulationResult run_simulate(const Scenario& scenario, const Algorithm& algo,
                              const AdversarySpec& adversary, int steps);

}  // namespace lcm
