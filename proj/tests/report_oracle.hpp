#pragma once

// Reference closure for the variant comparison report, written without the
// library's report code, plus the known relations between all twelve
// variants.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcm/report.hpp"

namespace oracle {

// Variants as (model, scheduler) with model 0..3 = OBLOT, FSTA, FCOM, LUMI
// and scheduler 0..2 = F, S, A.
struct V {
  int model;
  int sched;
  bool operator<(const V& o) const { return model != o.model ? model < o.model : sched < o.sched; }
  bool operator==(const V& o) const { return model == o.model && sched == o.sched; }
};

inline V parse(const std::string& s) {
  static const std::map<std::string, int> models{{"OBLOT", 0}, {"FSTA", 1}, {"FCOM", 2}, {"LUMI", 3}};
  static const std::map<char, int> scheds{{'F', 0}, {'S', 1}, {'A', 2}};
  const auto caret = s.find('^');
  return {models.at(s.substr(0, caret)), scheds.at(s.back())};
}

inline std::vector<V> all() {
  std::vector<V> out;
  for (int m = 0; m < 4; ++m) {
    for (int k = 0; k < 3; ++k) out.push_back({m, k});
  }
  return out;
}

/// X >= Y from the dominance lemma and the two imported equivalences only.
inline std::map<std::pair<V, V>, bool> dominance() {
  std::map<std::pair<V, V>, bool> ge;
  auto model_ge = [](int a, int b) { return a == b || a == 3 || b == 0; };
  for (V x : all()) {
    for (V y : all()) {
      ge[{x, y}] = (x.model == y.model && x.sched <= y.sched) || (x.sched == y.sched && model_ge(x.model, y.model));
    }
  }
  for (auto [a, b] : {std::pair{V{2, 0}, V{3, 0}}, std::pair{V{3, 1}, V{3, 2}}}) {
    ge[{a, b}] = ge[{b, a}] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (V x : all()) {
      for (V y : all()) {
        if (ge[{x, y}]) continue;
        for (V z : all()) {
          if (ge[{x, z}] && ge[{z, y}]) {
            ge[{x, y}] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return ge;
}

/// Relation symbol for every ordered pair the verdicts and axioms determine
/// ('=', '>', '<', '|'); undetermined pairs are absent.
inline std::map<std::pair<V, V>, char> relations(const std::vector<lcm::LemmaVerdict>& verdicts) {
  const auto ge = dominance();
  // problem -> variant -> solvable
  std::map<std::string, std::map<V, bool>> solv;
  for (const auto& v : verdicts) {
    const V at = parse(v.variant.str());
    for (V x : all()) {
      if (v.solvable ? ge.at({x, at}) : ge.at({at, x})) solv[v.problem][x] = v.solvable;
    }
  }
  auto not_ge = [&](V x, V y) {
    for (const auto& [p, m] : solv) {
      auto ix = m.find(x), iy = m.find(y);
      if (ix != m.end() && iy != m.end() && iy->second && !ix->second) return true;
    }
    return false;
  };
  std::map<std::pair<V, V>, char> out;
  for (V x : all()) {
    for (V y : all()) {
      const bool xy = ge.at({x, y}), yx = ge.at({y, x});
      const bool nxy = not_ge(x, y), nyx = not_ge(y, x);
      if (xy && yx) out[{x, y}] = '=';
      else if (xy && nyx) out[{x, y}] = '>';
      else if (yx && nxy) out[{x, y}] = '<';
      else if (nxy && nyx) out[{x, y}] = '|';
    }
  }
  return out;
}

/// Known relations between variants, as (row, symbol, column) over variant
/// names.
inline std::vector<std::tuple<std::string, char, std::string>> known() {
  std::vector<std::tuple<std::string, char, std::string>> out;
  auto add = [&](const std::string& a, char r, const std::string& b) { out.emplace_back(a, r, b); };
  const std::vector<std::string> M{"OBLOT", "FSTA", "FCOM", "LUMI"};
  add("FCOM^F", '=', "LUMI^F");
  for (const char* m : {"FSTA", "FCOM", "LUMI"}) add("OBLOT^F", '<', std::string(m) + "^F");
  for (const char* m : {"FCOM", "LUMI"}) add("FSTA^F", '<', std::string(m) + "^F");
  for (const char* m : {"FSTA", "FCOM", "LUMI"}) add("OBLOT^S", '<', std::string(m) + "^S");
  for (const char* m : {"FSTA", "FCOM"}) add(std::string(m) + "^S", '<', "LUMI^S");
  add("FSTA^S", '|', "FCOM^S");
  for (const auto& m : M) add(m + "^S", '<', m + "^F");
  for (const char* m : {"FSTA", "FCOM", "LUMI"}) {
    add("OBLOT^F", '|', std::string(m) + "^S");
    add("OBLOT^S", '<', std::string(m) + "^F");
  }
  for (const char* m : {"FSTA", "FCOM"}) add(std::string(m) + "^S", '<', "LUMI^F");
  for (const char* m : {"FCOM", "LUMI"}) add("FSTA^F", '|', std::string(m) + "^S");
  for (const char* m : {"FSTA", "LUMI"}) add("FCOM^F", '>', std::string(m) + "^S");
  add("LUMI^S", '=', "LUMI^A");
  for (const auto& m : M) {
    add(m + "^A", '<', m + "^F");
    for (const char* m1 : {"LUMI", "FCOM"}) add(m + "^A", '<', std::string(m1) + "^F");
  }
  for (const char* m : {"FSTA", "FCOM", "LUMI"}) {
    for (const char* k : {"S", "F"}) add("OBLOT^A", '<', std::string(m) + "^" + k);
  }
  for (const char* m : {"FSTA", "FCOM", "OBLOT"}) add("LUMI^A", '>', std::string(m) + "^S");
  for (const char* m : {"FSTA", "FCOM"}) add(std::string(m) + "^A", '<', "LUMI^S");
  for (const char* m : {"OBLOT", "FSTA", "FCOM"}) add(std::string(m) + "^A", '<', "LUMI^A");
  for (const char* m : {"FSTA", "FCOM"}) add("OBLOT^A", '<', std::string(m) + "^A");
  for (const char* m : {"FSTA", "FCOM", "LUMI"}) add("OBLOT^F", '|', std::string(m) + "^A");
  for (const char* m : {"FCOM", "LUMI"}) add("FSTA^F", '|', std::string(m) + "^A");
  for (const char* k1 : {"A", "S"}) {
    for (const char* k2 : {"A", "S"}) add(std::string("FSTA^") + k1, '|', std::string("FCOM^") + k2);
  }
  return out;
}

inline char mirror(char r) { return r == '>' ? '<' : r == '<' ? '>' : r; }

inline char symbol_char(lcm::Relation r) { return lcm::symbol(r)[0]; }

}  // namespace oracle
