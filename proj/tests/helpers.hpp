#pragma once

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <string>
#include <vector>

#include "lcm/checker.hpp"
#include "lcm/graph.hpp"
#include "lcm/scenario.hpp"

namespace testutil {

inline std::filesystem::path scenario_dir() { return LCM_SCENARIO_DIR; }

inline lcm::Scenario scenario(const std::string& file) { return lcm::load_scenario(scenario_dir() / file); }

inline lcm::AlgorithmPtr algorithm(const lcm::Scenario& s) { return lcm::load_algorithm(s, scenario_dir()); }

inline lcm::Scenario with_scheduler(lcm::Scenario s, lcm::Scheduler k) {
  s.scheduler = k;
  return s;
}

/// Every permutation of 0..n-1 preserving adjacency, by brute force.
inline std::vector<lcm::Permutation> brute_automorphisms(const lcm::EmbeddedGraph& g) {
  std::vector<lcm::Permutation> out;
  lcm::Permutation p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if (!g.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline lcm::Permutation compose(const lcm::Permutation& a, const lcm::Permutation& b) {
  // (a after b)
  lcm::Permutation c(a.size());
  for (size_t v = 0; v < a.size(); ++v) c[v] = a[b[v]];
  return c;
}

inline lcm::Permutation inverse(const lcm::Permutation& a) {
  lcm::Permutation c(a.size());
  for (size_t v = 0; v < a.size(); ++v) c[a[v]] = static_cast<int>(v);
  return c;
}

}  // namespace testutil
