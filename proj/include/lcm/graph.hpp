#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcm {

using VertexId = int;
using Color = int;

/// Color slot of the observing robot when its own light is not visible to it.
inline constexpr Color kHiddenColor = -1;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised when a structurally well-formed input violates a domain invariant.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// perm[v] is the image of vertex v.
using Permutation = std::vector<VertexId>;

enum class SymmetryMode { kGraph, kIsometric };

std::string_view to_string(SymmetryMode mode);
SymmetryMode parse_symmetry_mode(std::string_view text);

/// An undirected, connected, simple graph whose vertices carry plane
/// coordinates. Immutable after construction; the automorphism group and
/// all-pairs hop distances are computed once up front.
class EmbeddedGraph {
 public:
  EmbeddedGraph(std::vector<std::string> names, std::vector<Point> coords,
                std::vector<std::pair<VertexId, VertexId>> edges);

  int order() const { return static_cast<int>(names_.size()); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  Point coord(VertexId v) const { return coords_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  /// Like find, but throws std::out_of_range for unknown names.
  VertexId at(std::string_view name) const;

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  bool adjacent(VertexId u, VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int distance(VertexId u, VertexId v) const { return distances_[u * order() + v]; }
  std::vector<int> degree_sequence() const;
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  /// Full automorphism group (identity first). In isometric mode only those
  /// automorphisms realized by a plane isometry of the embedding.
  const std::vector<Permutation>& automorphisms(SymmetryMode mode) const;
  bool is_isometry(const Permutation& perm) const;

  /// Serializes to `vertex`/`edge` records accepted by load_graph.
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<Point> coords_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<int> distances_;
  std::vector<Permutation> automorphisms_;
  std::vector<Permutation> isometries_;
};

/// Parses `vertex <id> <x> <y>` and `edge <id> <id>` records, plus the chain
/// shorthand `a(0,0)-b(1,0)-c(2,0)` (optionally prefixed by `path`). Blank
/// lines and `#` comments are skipped; other keywords are rejected.
EmbeddedGraph load_graph(std::string_view text);

/// Observable content of one vertex: robot multiplicity and the sorted
/// multiset of visible colors (empty when colors are not visible).
struct VertexDeco {
  int count = 0;
  std::vector<Color> colors;

  auto operator<=>(const VertexDeco&) const = default;
};

using Decoration = std::vector<VertexDeco>;

struct Symmetry {
  Permutation permutation;
  bool isometric = false;
};

/// All adjacency- and decoration-preserving permutations fixing `fixed`.
std::vector<Symmetry> decorated_symmetries(const EmbeddedGraph& g, const Decoration& deco,
                                           VertexId fixed, bool isometric_only);

/// Orbit invariant of a decorated snapshot seen from an observer vertex.
struct CanonicalKey {
  std::vector<int> code;

  std::string str() const;
  auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalForm {
  CanonicalKey key;
  /// Automorphism that takes the input situation to its canonical representative.
  Permutation to_canonical;
};

CanonicalForm canonicalize(const EmbeddedGraph& g, const Decoration& deco, VertexId observer,
                           SymmetryMode mode);

CanonicalKey canonical_key(const EmbeddedGraph& g, const Decoration& deco, VertexId observer,
                           SymmetryMode mode = SymmetryMode::kGraph);

/// Decoration image under a vertex permutation: result[perm[v]] = deco[v].
Decoration permute(const Decoration& deco, const Permutation& perm);

}  // namespace lcm
