#include "lcm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace lcm {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

std::string_view to_string(SymmetryMode mode) {
  return mode == SymmetryMode::kGraph ? "graph" : "isometric";
}

SymmetryMode parse_symmetry_mode(std::string_view text) {
  if (text == "graph") return SymmetryMode::kGraph;
  if (text == "isometric") return SymmetryMode::kIsometric;
  throw std::invalid_argument("unknown symmetry mode: " + std::string(text));
}

namespace {

constexpr double kCoordTolerance = 1e-6;

bool same_point(Point a, Point b) {
  return std::abs(a.x - b.x) < kCoordTolerance && std::abs(a.y - b.y) < kCoordTolerance;
}

double dist2(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Backtracking search over vertex images; graphs here have a dozen vertices
// at most, so degree pruning plus adjacency consistency is plenty.
void extend_automorphism(const EmbeddedGraph& g, Permutation& image, std::vector<bool>& used,
                         VertexId next, std::vector<Permutation>& out) {
  const int n = g.order();
  if (next == n) {
    out.push_back(image);
    return;
  }
  for (VertexId cand = 0; cand < n; ++cand) {
    if (used[cand] || g.degree(cand) != g.degree(next)) continue;
    bool ok = true;
    for (VertexId prev = 0; prev < next && ok; ++prev) {
      ok = g.adjacent(prev, next) == g.adjacent(image[prev], cand);
    }
    if (!ok) continue;
    image[next] = cand;
    used[cand] = true;
    extend_automorphism(g, image, used, next + 1, out);
    used[cand] = false;
  }
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<std::string> names, std::vector<Point> coords,
                             std::vector<std::pair<VertexId, VertexId>> edges)
    : names_(std::move(names)), coords_(std::move(coords)) {
  const int n = order();
  if (n == 0) throw InvariantError("graph has no vertices");
  if (static_cast<int>(coords_.size()) != n) throw InvariantError("coordinate count mismatch");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j]) throw InvariantError("duplicate vertex: " + names_[i]);
      if (same_point(coords_[i], coords_[j])) {
        throw InvariantError("vertices " + names_[i] + " and " + names_[j] +
                             " share coordinates");
      }
    }
  }
  adjacency_.assign(n, {});
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvariantError("edge endpoint out of range");
    if (u == v) throw InvariantError("self-loop at " + names_[u]);
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second) {
      throw InvariantError("duplicate edge " + names_[e.first] + "-" + names_[e.second]);
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());

  distances_.assign(static_cast<size_t>(n) * n, -1);
  for (VertexId s = 0; s < n; ++s) {
    std::queue<VertexId> q;
    distances_[s * n + s] = 0;
    q.push(s);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (VertexId w : adjacency_[u]) {
        if (distances_[s * n + w] < 0) {
          distances_[s * n + w] = distances_[s * n + u] + 1;
          q.push(w);
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (distances_[v] < 0) throw InvariantError("graph is disconnected: " + names_[v] +
                                                " unreachable from " + names_[0]);
  }

  Permutation image(n, -1);
  std::vector<bool> used(n, false);
  extend_automorphism(*this, image, used, 0, automorphisms_);
  // Identity is found first because candidates are tried in increasing order.
  for (const auto& p : automorphisms_) {
    if (is_isometry(p)) isometries_.push_back(p);
  }
}

std::optional<VertexId> EmbeddedGraph::find(std::string_view name) const {
  for (VertexId v = 0; v < order(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

VertexId EmbeddedGraph::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw std::out_of_range("unknown vertex: " + std::string(name));
}

bool EmbeddedGraph::adjacent(VertexId u, VertexId v) const {
  const auto& a = adjacency_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> EmbeddedGraph::degree_sequence() const {
  std::vector<int> out;
  for (VertexId v = 0; v < order(); ++v) out.push_back(degree(v));
  return out;
}

const std::vector<Permutation>& EmbeddedGraph::automorphisms(SymmetryMode mode) const {
  return mode == SymmetryMode::kGraph ? automorphisms_ : isometries_;
}

bool EmbeddedGraph::is_isometry(const Permutation& perm) const {
  const int n = order();
  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(coords_[i].x) + std::abs(coords_[i].y));
  const double tol = kCoordTolerance * scale * scale;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(dist2(coords_[i], coords_[j]) - dist2(coords_[perm[i]], coords_[perm[j]])) >
          tol) {
        return false;
      }
    }
  }
  return true;
}

std::string EmbeddedGraph::to_text() const {
  std::ostringstream out;
  for (VertexId v = 0; v < order(); ++v) {
    out << "vertex " << names_[v] << ' ' << coords_[v].x << ' ' << coords_[v].y << '\n';
  }
  for (auto [u, v] : edges_) out << "edge " << names_[u] << ' ' << names_[v] << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

double parse_number(const Token& tok, int line, int offset = 0, std::string_view text = {}) {
  std::string_view s = text.empty() ? std::string_view(tok.text) : text;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, tok.column + offset, "expected a number, got '" + std::string(s) + "'");
  }
  return value;
}

struct GraphBuilder {
  std::vector<std::string> names;
  std::vector<Point> coords;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<int, int>> edge_pos;  // (line, column) per edge for diagnostics
  std::map<std::string, std::pair<int, int>> vertex_pos;

  void add_vertex(const std::string& name, Point p, int line, int col) {
    if (vertex_pos.count(name)) throw ParseError(line, col, "duplicate vertex '" + name + "'");
    vertex_pos[name] = {line, col};
    names.push_back(name);
    coords.push_back(p);
  }
};

// a(0,0)-b(1,0)-c(2,0)
void parse_chain(const Token& tok, int line, GraphBuilder& b) {
  const std::string& s = tok.text;
  size_t i = 0;
  std::string prev;
  while (i < s.size()) {
    size_t open = s.find('(', i);
    if (open == std::string::npos) throw ParseError(line, tok.column + static_cast<int>(i), "expected '('");
    size_t comma = s.find(',', open);
    size_t close = s.find(')', open);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      throw ParseError(line, tok.column + static_cast<int>(open), "expected '(x,y)'");
    }
    std::string name = s.substr(i, open - i);
    if (name.empty()) throw ParseError(line, tok.column + static_cast<int>(i), "missing vertex name");
    std::string_view sv(s);
    Point p{parse_number(tok, line, static_cast<int>(open + 1), sv.substr(open + 1, comma - open - 1)),
            parse_number(tok, line, static_cast<int>(comma + 1), sv.substr(comma + 1, close - comma - 1))};
    if (!b.vertex_pos.count(name)) b.add_vertex(name, p, line, tok.column + static_cast<int>(i));
    if (!prev.empty()) {
      b.edges.emplace_back(prev, name);
      b.edge_pos.emplace_back(line, tok.column + static_cast<int>(i));
    }
    prev = name;
    i = close + 1;
    if (i < s.size()) {
      if (s[i] != '-') throw ParseError(line, tok.column + static_cast<int>(i), "expected '-'");
      ++i;
    }
  }
}

}  // namespace

EmbeddedGraph load_graph(std::string_view text) {
  GraphBuilder b;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto toks = tokenize(text.substr(start, end - start));
    start = end + 1;
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "vertex") {
      if (toks.size() != 4) throw ParseError(line_no, toks[0].column, "vertex needs <id> <x> <y>");
      b.add_vertex(toks[1].text, {parse_number(toks[2], line_no), parse_number(toks[3], line_no)},
                   line_no, toks[1].column);
    } else if (kw == "edge") {
      if (toks.size() != 3) throw ParseError(line_no, toks[0].column, "edge needs <id> <id>");
      b.edges.emplace_back(toks[1].text, toks[2].text);
      b.edge_pos.emplace_back(line_no, toks[1].column);
    } else if (kw == "path") {
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "path needs one chain");
      parse_chain(toks[1], line_no, b);
    } else if (toks.size() == 1 && kw.find('(') != std::string::npos) {
      parse_chain(toks[0], line_no, b);
    } else {
      throw ParseError(line_no, toks[0].column, "unknown record '" + kw + "'");
    }
    if (end == text.size()) break;
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (size_t i = 0; i < b.edges.size(); ++i) {
    auto resolve = [&](const std::string& name) {
      auto it = std::find(b.names.begin(), b.names.end(), name);
      if (it == b.names.end()) {
        throw ParseError(b.edge_pos[i].first, b.edge_pos[i].second,
                         "edge endpoint '" + name + "' is not a declared vertex");
      }
      return static_cast<VertexId>(it - b.names.begin());
    };
    edges.emplace_back(resolve(b.edges[i].first), resolve(b.edges[i].second));
  }
  return EmbeddedGraph(std::move(b.names), std::move(b.coords), std::move(edges));
}

// ---------------------------------------------------------------------------
// Symmetry and canonical keys

Decoration permute(const Decoration& deco, const Permutation& perm) {
  Decoration out(deco.size());
  for (size_t v = 0; v < deco.size(); ++v) out[perm[v]] = deco[v];
  return out;
}

namespace {

bool preserves(const Decoration& deco, const Permutation& perm) {
  for (size_t v = 0; v < deco.size(); ++v) {
    if (deco[perm[v]] != deco[v]) return false;
  }
  return true;
}

void append_code(std::vector<int>& code, const Decoration& deco, const Permutation& perm,
                 VertexId observer) {
  const int n = static_cast<int>(deco.size());
  std::vector<VertexId> inverse(n);
  for (int v = 0; v < n; ++v) inverse[perm[v]] = v;
  for (int slot = 0; slot < n; ++slot) {
    const VertexDeco& d = deco[inverse[slot]];
    code.push_back(inverse[slot] == observer ? 1 : 0);
    code.push_back(d.count);
    code.push_back(static_cast<int>(d.colors.size()));
    code.insert(code.end(), d.colors.begin(), d.colors.end());
  }
}

}  // namespace

std::vector<Symmetry> decorated_symmetries(const EmbeddedGraph& g, const Decoration& deco,
                                           VertexId fixed, bool isometric_only) {
  std::vector<Symmetry> out;
  const auto mode = isometric_only ? SymmetryMode::kIsometric : SymmetryMode::kGraph;
  for (const auto& perm : g.automorphisms(mode)) {
    if (perm[fixed] != fixed || !preserves(deco, perm)) continue;
    out.push_back({perm, isometric_only || g.is_isometry(perm)});
  }
  return out;
}

CanonicalForm canonicalize(const EmbeddedGraph& g, const Decoration& deco, VertexId observer,
                           SymmetryMode mode) {
  CanonicalForm best;
  bool first = true;
  std::vector<int> code;
  for (const auto& perm : g.automorphisms(mode)) {
    code.clear();
    append_code(code, deco, perm, observer);
    if (first || code < best.key.code) {
      best.key.code = code;
      best.to_canonical = perm;
      first = false;
    }
  }
  return best;
}

CanonicalKey canonical_key(const EmbeddedGraph& g, const Decoration& deco, VertexId observer,
                           SymmetryMode mode) {
  return canonicalize(g, deco, observer, mode).key;
}

std::string CanonicalKey::str() const {
  // Per vertex: optional '*' for the observer, multiplicity, then ':'-joined
  // colors ('h' for the observer's own hidden light); vertices joined by '/'.
  std::string out;
  size_t i = 0;
  bool first = true;
  while (i + 3 <= code.size()) {
    if (!first) out += '/';
    first = false;
    if (code[i] == 1) out += '*';
    out += std::to_string(code[i + 1]);
    const int ncolors = code[i + 2];
    for (int c = 0; c < ncolors; ++c) {
      const int color = code[i + 3 + c];
      out += ':';
      out += color == kHiddenColor ? std::string("h") : std::to_string(color);
    }
    i += 3 + ncolors;
  }
  return out;
}

}  // namespace lcm
