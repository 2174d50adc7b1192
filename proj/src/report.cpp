#include "lcm/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "lcm/graph.hpp"

namespace lcm {

namespace {

constexpr std::array<ModelTag, 4> kModels{ModelTag::kOblot, ModelTag::kFsta, ModelTag::kFcom,
                                          ModelTag::kLumi};
constexpr std::array<Scheduler, 3> kSchedulers{Scheduler::kFsync, Scheduler::kSsync, Scheduler::kAsync};

char scheduler_letter(Scheduler s) {
  switch (s) {
    case Scheduler::kFsync: return 'F';
    case Scheduler::kSsync: return 'S';
    case Scheduler::kAsync: return 'A';
  }
  return '?';
}

int model_rank(ModelTag m) {
  return static_cast<int>(std::find(kModels.begin(), kModels.end(), m) - kModels.begin());
}

int scheduler_rank(Scheduler s) {
  return static_cast<int>(std::find(kSchedulers.begin(), kSchedulers.end(), s) - kSchedulers.begin());
}

// LUMI >= FSTA, FCOM >= OBLOT.
bool model_ge(ModelTag a, ModelTag b) {
  if (a == b || a == ModelTag::kLumi) return true;
  return b == ModelTag::kOblot;
}

}  // namespace

std::string Variant::str() const {
  return std::string(to_string(model)) + "^" + scheduler_letter(scheduler);
}

Variant Variant::parse(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos || caret + 2 != text.size()) {
    throw std::invalid_argument("variant must look like MODEL^F|S|A, got '" + std::string(text) + "'");
  }
  Variant v;
  v.model = parse_model_tag(text.substr(0, caret));
  switch (text.back()) {
    case 'F': v.scheduler = Scheduler::kFsync; break;
    case 'S': v.scheduler = Scheduler::kSsync; break;
    case 'A': v.scheduler = Scheduler::kAsync; break;
    default: throw std::invalid_argument("unknown scheduler letter in '" + std::string(text) + "'");
  }
  return v;
}

int variant_index(const Variant& v) { return model_rank(v.model) * 3 + scheduler_rank(v.scheduler); }

Variant variant_at(int index) { return {kModels.at(index / 3), kSchedulers.at(index % 3)}; }

std::vector<LemmaVerdict> parse_verdicts(std::string_view text) {
  std::vector<LemmaVerdict> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::string source;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      source = line.substr(hash + 1);
      source.erase(0, source.find_first_not_of(' '));
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string problem, variant, status, extra;
    if (!(fields >> problem)) continue;
    if (!(fields >> variant >> status) || (fields >> extra)) {
      throw ParseError(ln, 1, "expected '<problem> <variant> solvable|unsolvable'");
    }
    LemmaVerdict v;
    v.problem = problem;
    try {
      v.variant = Variant::parse(variant);
    } catch (const std::invalid_argument& e) {
      throw ParseError(ln, static_cast<int>(line.find(variant)) + 1, e.what());
    }
    if (status != "solvable" && status != "unsolvable") {
      throw ParseError(ln, static_cast<int>(line.find(status)) + 1, "status must be solvable or unsolvable");
    }
    v.solvable = status == "solvable";
    v.source = source;
    out.push_back(std::move(v));
  }
  return out;
}

std::string to_text(const std::vector<LemmaVerdict>& verdicts) {
  std::ostringstream out;
  for (const auto& v : verdicts) {
    out << v.problem << ' ' << v.variant.str() << ' ' << (v.solvable ? "solvable" : "unsolvable");
    if (!v.source.empty()) out << " # " << v.source;
    out << '\n';
  }
  return out.str();
}

std::string_view symbol(Relation r) {
  switch (r) {
    case Relation::kEquivalent: return "=";
    case Relation::kGreater: return ">";
    case Relation::kLess: return "<";
    case Relation::kIncomparable: return "|";
    case Relation::kUnresolved: return "?";
  }
  return "?";
}

std::array<std::array<bool, kVariantCount>, kVariantCount> axiomatic_dominance() {
  std::array<std::array<bool, kVariantCount>, kVariantCount> ge{};
  for (int i = 0; i < kVariantCount; ++i) {
    for (int j = 0; j < kVariantCount; ++j) {
      const Variant a = variant_at(i), b = variant_at(j);
      // Same model, stronger scheduler; same scheduler, stronger model.
      ge[i][j] = (a.model == b.model && scheduler_rank(a.scheduler) <= scheduler_rank(b.scheduler)) ||
                 (a.scheduler == b.scheduler && model_ge(a.model, b.model));
    }
  }
  auto equiv = [&](Variant a, Variant b) {
    ge[variant_index(a)][variant_index(b)] = true;
    ge[variant_index(b)][variant_index(a)] = true;
  };
  equiv({ModelTag::kFcom, Scheduler::kFsync}, {ModelTag::kLumi, Scheduler::kFsync});
  equiv({ModelTag::kLumi, Scheduler::kSsync}, {ModelTag::kLumi, Scheduler::kAsync});
  for (int k = 0; k < kVariantCount; ++k) {
    for (int i = 0; i < kVariantCount; ++i) {
      for (int j = 0; j < kVariantCount; ++j) {
        if (ge[i][k] && ge[k][j]) ge[i][j] = true;
      }
    }
  }
  return ge;
}

std::vector<LemmaVerdict> RelationReport::derived_verdicts() const {
  std::vector<LemmaVerdict> out;
  for (size_t p = 0; p < problems.size(); ++p) {
    for (int v = 0; v < kVariantCount; ++v) {
      const auto& s = solvability[p][v];
      if (!s.solvable) continue;
      out.push_back({problems[p], variant_at(v), *s.solvable, "from " + inputs[s.input].problem + " " +
                                                                  inputs[s.input].variant.str()});
    }
  }
  return out;
}

RelationReport build_report(const std::vector<LemmaVerdict>& verdicts) {
  RelationReport rep;
  rep.inputs = verdicts;
  const auto ge = axiomatic_dominance();
  for (const auto& v : verdicts) {
    if (std::find(rep.problems.begin(), rep.problems.end(), v.problem) == rep.problems.end()) {
      rep.problems.push_back(v.problem);
    }
  }
  rep.solvability.resize(rep.problems.size());

  // Solvability flows up the dominance order, unsolvability flows down.
  for (size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    const size_t p = std::find(rep.problems.begin(), rep.problems.end(), v.problem) - rep.problems.begin();
    const int at = variant_index(v.variant);
    for (int w = 0; w < kVariantCount; ++w) {
      const bool reaches = v.solvable ? ge[w][at] : ge[at][w];
      if (!reaches) continue;
      auto& cell = rep.solvability[p][w];
      if (cell.solvable && *cell.solvable != v.solvable) {
        const auto& other = verdicts[cell.input];
        throw InvariantError("contradictory verdicts: " + v.problem + " " + (v.solvable ? "solvable" : "unsolvable") +
                             " in " + v.variant.str() + " and " + (other.solvable ? "solvable" : "unsolvable") +
                             " in " + other.variant.str() + " clash at " + variant_at(w).str());
      }
      if (!cell.solvable) {
        cell.solvable = v.solvable;
        cell.input = static_cast<int>(i);
      }
    }
  }

  // X is not >= Y when some problem is solvable in Y but not in X.
  auto not_ge = [&](int x, int y) -> std::optional<Separation> {
    for (size_t p = 0; p < rep.problems.size(); ++p) {
      const auto& sx = rep.solvability[p][x];
      const auto& sy = rep.solvability[p][y];
      if (sy.solvable == true && sx.solvable == false) {
        return Separation{rep.problems[p], sy.input, sx.input};
      }
    }
    return std::nullopt;
  };
  for (int x = 0; x < kVariantCount; ++x) {
    for (int y = 0; y < kVariantCount; ++y) {
      ReportCell& c = rep.cells[x][y];
      c.row_ge = ge[x][y];
      c.col_ge = ge[y][x];
      c.row_not_ge = not_ge(x, y);
      c.col_not_ge = not_ge(y, x);
      if ((c.row_ge && c.row_not_ge) || (c.col_ge && c.col_not_ge)) {
        throw InvariantError("verdicts contradict the dominance rules between " + variant_at(x).str() +
                             " and " + variant_at(y).str());
      }
      if (c.row_ge && c.col_ge) c.relation = Relation::kEquivalent;
      else if (c.row_ge && c.col_not_ge) c.relation = Relation::kGreater;
      else if (c.col_ge && c.row_not_ge) c.relation = Relation::kLess;
      else if (c.row_not_ge && c.col_not_ge) c.relation = Relation::kIncomparable;
    }
  }
  return rep;
}

std::string RelationReport::to_text() const {
  std::ostringstream out;
  out << "legend: = equivalent, > row stronger, < column stronger, | incomparable, ? unresolved\n";
  out << std::setw(8) << "";
  for (int j = 0; j < kVariantCount; ++j) out << std::setw(8) << variant_at(j).str();
  out << '\n';
  for (int i = 0; i < kVariantCount; ++i) {
    out << std::setw(8) << variant_at(i).str();
    for (int j = 0; j < kVariantCount; ++j) out << std::setw(8) << symbol(cells[i][j].relation);
    out << '\n';
  }
  auto cite = [&](const Separation& s) {
    std::ostringstream c;
    const auto& yes = inputs[s.solvable_input];
    const auto& no = inputs[s.unsolvable_input];
    c << s.problem << " (solvable: " << yes.variant.str();
    if (!yes.source.empty()) c << " [" << yes.source << "]";
    c << "; unsolvable: " << no.variant.str();
    if (!no.source.empty()) c << " [" << no.source << "]";
    c << ")";
    return c.str();
  };
  out << "provenance\n";
  for (int i = 0; i < kVariantCount; ++i) {
    for (int j = i + 1; j < kVariantCount; ++j) {
      const ReportCell& c = cells[i][j];
      if (c.relation == Relation::kUnresolved) continue;
      out << "  " << variant_at(i).str() << ' ' << symbol(c.relation) << ' ' << variant_at(j).str() << ":";
      if (c.row_ge) out << " row>=col by dominance/axioms;";
      if (c.col_ge) out << " col>=row by dominance/axioms;";
      if (c.row_not_ge) out << " row not>=col via " << cite(*c.row_not_ge) << ';';
      if (c.col_not_ge) out << " col not>=row via " << cite(*c.col_not_ge) << ';';
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace lcm
