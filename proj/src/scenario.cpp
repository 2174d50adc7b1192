#include "lcm/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bundled_scenarios.hpp"

namespace lcm {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_graph_record(const std::vector<Token>& toks) {
  const std::string& kw = toks.front().text;
  return kw == "vertex" || kw == "edge" || kw == "path" ||
         (toks.size() == 1 && kw.find('(') != std::string::npos);
}

int to_int(const Token& t, int line, std::string_view what) {
  try {
    size_t used = 0;
    const int v = std::stoi(t.text, &used);
    if (used == t.text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, t.column, std::string(what) + " must be an integer, got '" + t.text + "'");
}

int key_value(const Token& t, std::string_view key, int line) {
  const std::string prefix = std::string(key) + "=";
  if (t.text.rfind(prefix, 0) != 0) throw ParseError(line, t.column, "expected " + prefix);
  return to_int({t.text.substr(prefix.size()), t.column + static_cast<int>(prefix.size())}, line,
                key);
}

std::vector<VertexId> parse_config_list(const Token& t, int line, const EmbeddedGraph& g) {
  if (t.text.size() < 2 || t.text.front() != '[' || t.text.back() != ']') {
    throw ParseError(line, t.column, "configuration must look like [v,w,...]");
  }
  std::vector<VertexId> out;
  std::istringstream in(t.text.substr(1, t.text.size() - 2));
  std::string name;
  while (std::getline(in, name, ',')) {
    auto v = g.find(name);
    if (!v) throw ParseError(line, t.column, "unknown vertex '" + name + "'");
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void Bounds::validate() const {
  if (max_depth <= 0 || window <= 0 || palette <= 0) throw InvariantError("bounds must be positive");
  if (window > max_depth) throw InvariantError("fairness window exceeds the depth bound");
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::kNone: return "none";
    case Expectation::kSolved: return "solved";
    case Expectation::kViolated: return "violated";
    case Expectation::kImpossible: return "impossible";
    case Expectation::kInconclusive: return "inconclusive";
  }
  return "?";
}

Expectation parse_expectation(std::string_view text) {
  for (auto e : {Expectation::kNone, Expectation::kSolved, Expectation::kViolated,
                 Expectation::kImpossible, Expectation::kInconclusive}) {
    if (text == to_string(e)) return e;
  }
  throw std::invalid_argument("unknown expectation: " + std::string(text));
}

Scenario parse_scenario(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  // Graph records first, keeping line numbers intact for error messages.
  std::string graph_text;
  for (const auto& line : lines) {
    auto toks = split(line);
    graph_text += (!toks.empty() && is_graph_record(toks)) ? line : std::string();
    graph_text += '\n';
  }
  auto graph = std::make_shared<const EmbeddedGraph>(load_graph(graph_text));

  Scenario s;
  s.problem.arena = graph;
  bool have_problem = false;
  std::optional<int> palette;
  std::optional<ModelTag> tag;
  int tag_line = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    auto toks = split(lines[i]);
    if (toks.empty() || is_graph_record(toks)) continue;
    const std::string& kw = toks[0].text;
    auto need = [&](size_t n) {
      if (toks.size() != n) {
        throw ParseError(ln, toks[0].column, "'" + kw + "' takes " + std::to_string(n - 1) + " argument(s)");
      }
    };
    auto guarded = [&](const Token& t, auto&& fn) {
      try {
        return fn(t.text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(ln, t.column, e.what());
      }
    };
    if (kw == "problem") {
      need(2);
      s.problem.kind = guarded(toks[1], [](const std::string& x) { return parse_problem_kind(x); });
      s.problem.name = toks[1].text;
      have_problem = true;
    } else if (kw == "initial") {
      if (toks.size() < 2) throw ParseError(ln, toks[0].column, "initial needs robot placements");
      std::vector<VertexId> placement(toks.size() - 1, -1);
      for (size_t k = 1; k < toks.size(); ++k) {
        const auto& t = toks[k].text;
        const auto eq = t.find('=');
        if (t.size() < 4 || t[0] != 'r' || eq == std::string::npos) {
          throw ParseError(ln, toks[k].column, "placement must look like r<i>=<vertex>");
        }
        const int r = to_int({t.substr(1, eq - 1), toks[k].column + 1}, ln, "robot index");
        if (r < 0 || r >= static_cast<int>(placement.size()) || placement[r] >= 0) {
          throw ParseError(ln, toks[k].column, "robot indices must be r0..r" +
                                                   std::to_string(placement.size() - 1) + ", each once");
        }
        auto v = graph->find(t.substr(eq + 1));
        if (!v) throw ParseError(ln, toks[k].column + static_cast<int>(eq) + 1, "unknown vertex");
        placement[r] = *v;
      }
      s.problem.initial.push_back(Configuration::at(std::move(placement)));
    } else if (kw == "sequence") {
      size_t k = 1;
      while (k < toks.size()) {
        if (toks[k].text == "period") {
          if (k + 2 != toks.size()) throw ParseError(ln, toks[k].column, "period takes one number at the end");
          s.problem.period = to_int(toks[k + 1], ln, "period");
          break;
        }
        s.problem.sequence.push_back(parse_config_list(toks[k], ln, *graph));
        ++k;
        if (k < toks.size() && toks[k].text == "->") {
          ++k;
          if (k == toks.size() || toks[k].text == "period") {
            throw ParseError(ln, toks[k - 1].column, "dangling '->'");
          }
        } else if (k < toks.size() && toks[k].text != "period") {
          throw ParseError(ln, toks[k].column, "expected '->' or 'period'");
        }
      }
    } else if (kw == "faults") {
      need(2);
      s.problem.fault_budget = to_int(toks[1], ln, "fault budget");
    } else if (kw == "model") {
      if (toks.size() != 2 && toks.size() != 3) throw ParseError(ln, toks[0].column, "model <tag> [palette]");
      tag = guarded(toks[1], [](const std::string& x) { return parse_model_tag(x); });
      tag_line = ln;
      if (toks.size() == 3) palette = to_int(toks[2], ln, "palette");
    } else if (kw == "scheduler") {
      need(2);
      s.scheduler = guarded(toks[1], [](const std::string& x) { return parse_scheduler(x); });
    } else if (kw == "algorithm") {
      if (toks.size() == 3 && toks[1].text == "table") {
        s.table_path = toks[2].text;
        s.algorithm.clear();
      } else {
        need(2);
        s.algorithm = toks[1].text;
        s.table_path.reset();
      }
    } else if (kw == "bounds") {
      for (size_t k = 1; k < toks.size(); ++k) {
        const auto& t = toks[k].text;
        if (t.rfind("depth=", 0) == 0) s.bounds.max_depth = key_value(toks[k], "depth", ln);
        else if (t.rfind("window=", 0) == 0) s.bounds.window = key_value(toks[k], "window", ln);
        else if (t.rfind("palette=", 0) == 0) s.bounds.palette = key_value(toks[k], "palette", ln);
        else throw ParseError(ln, toks[k].column, "unknown bound '" + t + "'");
      }
    } else if (kw == "seed") {
      need(2);
      try {
        s.seed = std::stoull(toks[1].text);
      } catch (const std::exception&) {
        throw ParseError(ln, toks[1].column, "seed must be a non-negative integer");
      }
    } else if (kw == "expect") {
      need(2);
      s.expect = guarded(toks[1], [](const std::string& x) { return parse_expectation(x); });
    } else if (kw == "symmetry") {
      need(2);
      s.symmetry = guarded(toks[1], [](const std::string& x) { return parse_symmetry_mode(x); });
    } else if (kw == "act") {
      need(2);
      if (toks[1].text != "atomic" && toks[1].text != "split") {
        throw ParseError(ln, toks[1].column, "act must be atomic or split");
      }
      s.split_act = toks[1].text == "split";
    } else {
      throw ParseError(ln, toks[0].column, "unknown record '" + kw + "'");
    }
  }
  if (!have_problem) throw ParseError(static_cast<int>(lines.size()), 1, "scenario has no problem record");
  if (tag) {
    const int p = palette.value_or(*tag == ModelTag::kOblot ? 1 : s.bounds.palette);
    try {
      s.model = RobotModel(*tag, p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(tag_line, 1, e.what());
    }
  }
  s.problem.validate();
  s.bounds.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize(const Scenario& s) {
  const EmbeddedGraph& g = *s.problem.arena;
  std::ostringstream out;
  out << g.to_text();
  out << "problem " << to_string(s.problem.kind) << '\n';
  for (const auto& c : s.problem.initial) {
    out << "initial";
    for (int r = 0; r < c.robots(); ++r) out << " r" << r << '=' << g.name(c.placement[r]);
    out << '\n';
  }
  if (!s.problem.sequence.empty()) {
    out << "sequence";
    for (size_t i = 0; i < s.problem.sequence.size(); ++i) {
      out << (i ? " -> [" : " [");
      for (size_t k = 0; k < s.problem.sequence[i].size(); ++k) {
        out << (k ? "," : "") << g.name(s.problem.sequence[i][k]);
      }
      out << ']';
    }
    if (s.problem.perpetual()) out << " period " << s.problem.period;
    out << '\n';
  }
  out << "faults " << s.problem.fault_budget << '\n';
  out << "model " << to_string(s.model.tag()) << ' ' << s.model.palette() << '\n';
  out << "scheduler " << to_string(s.scheduler) << '\n';
  if (s.table_path) {
    out << "algorithm table " << *s.table_path << '\n';
  } else if (!s.algorithm.empty()) {
    out << "algorithm " << s.algorithm << '\n';
  }
  out << "bounds depth=" << s.bounds.max_depth << " window=" << s.bounds.window
      << " palette=" << s.bounds.palette << '\n';
  out << "seed " << s.seed << '\n';
  if (s.expect != Expectation::kNone) out << "expect " << to_string(s.expect) << '\n';
  out << "symmetry " << to_string(s.symmetry) << '\n';
  out << "act " << (s.split_act ? "split" : "atomic") << '\n';
  return out.str();
}

AlgorithmPtr load_algorithm(const Scenario& s, const std::filesystem::path& base_dir) {
  if (s.table_path) {
    std::filesystem::path p = *s.table_path;
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot read algorithm table " + p.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return std::make_shared<TableAlgorithm>(TableAlgorithm::parse(buf.str(), p.filename().string()));
  }
  if (s.algorithm.empty()) throw std::invalid_argument("scenario names no algorithm");
  return builtin_algorithm(s.algorithm, &s.problem);
}

std::string_view bundled_scenario(std::string_view problem) {
  for (const auto& [name, text] : detail::kBundledScenarios) {
    if (name == problem) return text;
  }
  throw std::invalid_argument("unknown problem: " + std::string(problem));
}

ProblemSpec builtin_problem(std::string_view name) {
  return parse_scenario(bundled_scenario(name)).problem;
}

}  // namespace lcm
