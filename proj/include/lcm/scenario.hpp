#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "lcm/algorithms.hpp"
#include "lcm/model.hpp"
#include "lcm/problems.hpp"

namespace lcm {

/// Search bounds. `window`: every live robot acts at least once in any
/// `window` consecutive steps. `palette` only matters for impossibility runs.
struct Bounds {
  int max_depth = 40;
  int window = 4;
  int palette = 2;

  void validate() const;
  bool operator==(const Bounds&) const = default;
};

enum class Expectation { kNone, kSolved, kViolated, kImpossible, kInconclusive };

std::string_view to_string(Expectation e);
Expectation parse_expectation(std::string_view text);

struct Scenario {
  ProblemSpec problem;
  RobotModel model = RobotModel::oblot();
  Scheduler scheduler = Scheduler::kFsync;
  /// Builtin name, or empty when a table file is given.
  std::string algorithm;
  std::optional<std::string> table_path;
  Bounds bounds;
  std::uint64_t seed = 0;
  Expectation expect = Expectation::kNone;
  SymmetryMode symmetry = SymmetryMode::kGraph;
  bool split_act = false;
};

/// Parses the full scenario grammar. Table paths are kept as written.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& file);
std::string serialize(const Scenario& s);

/// The scenario's algorithm; table paths are resolved against `base_dir`.
AlgorithmPtr load_algorithm(const Scenario& s, const std::filesystem::path& base_dir = {});

/// Text of a scenario shipped with the library (SUIR, moveOnce, negIL, OSP).
std::string_view bundled_scenario(std::string_view problem);

}  // namespace lcm
