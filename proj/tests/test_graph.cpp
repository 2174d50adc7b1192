#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "lcm/graph.hpp"
#include "lcm/problems.hpp"

using namespace lcm;

namespace {

EmbeddedGraph p3() { return load_graph("m0(0,0)-m1(1,0)-m2(2,0)"); }

EmbeddedGraph arena(const char* problem) { return *builtin_problem(problem).arena; }

Decoration empty_deco(const EmbeddedGraph& g) { return Decoration(g.order()); }

Decoration occupy(const EmbeddedGraph& g, std::vector<std::pair<VertexId, Color>> robots, bool colors = true) {
  Decoration d(g.order());
  for (auto [v, c] : robots) {
    ++d[v].count;
    if (colors) d[v].colors.push_back(c);
  }
  for (auto& x : d) std::sort(x.colors.begin(), x.colors.end());
  return d;
}

// Brute-force orbit representative of (deco, observer) under `group`.
std::vector<int> brute_rep(const std::vector<Permutation>& group, const Decoration& d, VertexId obs) {
  std::vector<int> best;
  for (const auto& p : group) {
    const Decoration img = permute(d, p);
    std::vector<int> code{p[obs]};
    for (const auto& x : img) {
      code.push_back(x.count);
      code.push_back(static_cast<int>(x.colors.size()));
      code.insert(code.end(), x.colors.begin(), x.colors.end());
    }
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

TEST(LoadGraph, ThreeVertexPath) {
  const auto g = p3();
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.degree_sequence(), (std::vector<int>{1, 2, 1}));
}

TEST(LoadGraph, DisconnectedIsRejected) {
  try {
    load_graph("vertex a 0 0\nvertex b 1 0\n");
    FAIL() << "expected an error";
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("disconnected"), std::string::npos);
  }
}

TEST(LoadGraph, DuplicateEdgeAndSelfLoop) {
  EXPECT_ANY_THROW(load_graph("vertex a 0 0\nvertex b 1 0\nedge a b\nedge b a\n"));
  EXPECT_ANY_THROW(load_graph("vertex a 0 0\nvertex b 1 0\nedge a b\nedge a a\n"));
  EXPECT_ANY_THROW(load_graph("vertex a 0 0\nvertex b 0 0\nedge a b\n"));
}

TEST(LoadGraph, ParseErrorCarriesPosition) {
  try {
    load_graph("vertex a 0 0\nvertex b 1 0\nedge a b\nbogus x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 1);
  }
  try {
    load_graph("vertex a 0 zero\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(LoadGraph, RoundTripThroughText) {
  const auto g = arena("moveOnce");
  const auto h = load_graph(g.to_text());
  ASSERT_EQ(h.order(), g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    const VertexId w = h.at(g.name(v));
    EXPECT_EQ(h.degree(w), g.degree(v));
    for (VertexId u = 0; u < g.order(); ++u) EXPECT_EQ(h.adjacent(w, h.at(g.name(u))), g.adjacent(v, u));
  }
}

TEST(LoadGraph, MoveOnceArenaMeetsDefinition) {
  const auto g = arena("moveOnce");
  auto deg = g.degree_sequence();
  std::sort(deg.begin(), deg.end());
  EXPECT_EQ(deg, (std::vector<int>{2, 2, 2, 3, 3}));
  // Non-adjacent degree-2 pairs, and how many of each pair's members have a
  // degree-2 neighbor.
  int pairs = 0;
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (g.degree(u) != 2 || g.degree(v) != 2 || g.adjacent(u, v)) continue;
      ++pairs;
      auto has_deg2_neighbor = [&](VertexId x) {
        for (VertexId y : g.neighbors(x)) {
          if (g.degree(y) == 2) return true;
        }
        return false;
      };
      EXPECT_EQ(has_deg2_neighbor(u) + has_deg2_neighbor(v), 1);
    }
  }
  // {a,c} and {a,d} are mirror images.
  EXPECT_EQ(pairs, 2);
}

TEST(Symmetries, PathReflectionAroundMiddle) {
  const auto g = p3();
  EXPECT_EQ(decorated_symmetries(g, empty_deco(g), 1, false).size(), 2u);
  EXPECT_EQ(decorated_symmetries(g, occupy(g, {{0, 0}}), 1, false).size(), 1u);
}

TEST(Symmetries, MoveOnceArenaAgainstBruteForce) {
  const auto g = arena("moveOnce");
  const auto all = testutil::brute_automorphisms(g);
  for (VertexId fixed = 0; fixed < g.order(); ++fixed) {
    size_t expected = 0;
    for (const auto& p : all) expected += p[fixed] == fixed;
    EXPECT_EQ(decorated_symmetries(g, empty_deco(g), fixed, false).size(), expected) << g.name(fixed);
  }
  EXPECT_EQ(decorated_symmetries(g, empty_deco(g), g.at("c"), false).size(), 1u);
  const auto at_a = decorated_symmetries(g, empty_deco(g), g.at("a"), false);
  ASSERT_EQ(at_a.size(), 2u);
  const auto& swap = at_a[0].permutation == Permutation{0, 1, 2, 3, 4} ? at_a[1] : at_a[0];
  EXPECT_EQ(swap.permutation[g.at("b")], g.at("e"));
  EXPECT_EQ(swap.permutation[g.at("c")], g.at("d"));
}

TEST(Symmetries, IsometricModeDropsNonIsometricAutomorphisms) {
  const auto uneven = load_graph("a(0,0)-b(1,0)-c(3,0)");
  EXPECT_EQ(uneven.automorphisms(SymmetryMode::kGraph).size(), 2u);
  EXPECT_EQ(uneven.automorphisms(SymmetryMode::kIsometric).size(), 1u);
  EXPECT_EQ(decorated_symmetries(uneven, empty_deco(uneven), 1, true).size(), 1u);
  EXPECT_EQ(decorated_symmetries(uneven, empty_deco(uneven), 1, false).size(), 2u);
  const auto even = p3();
  EXPECT_EQ(even.automorphisms(SymmetryMode::kIsometric).size(), 2u);
  // The two keys of the endpoints differ once the reflection is gone.
  const auto d = occupy(uneven, {{0, 0}, {2, 0}}, false);
  EXPECT_NE(canonical_key(uneven, d, 0, SymmetryMode::kIsometric),
            canonical_key(uneven, d, 2, SymmetryMode::kIsometric));
  EXPECT_EQ(canonical_key(uneven, d, 0, SymmetryMode::kGraph), canonical_key(uneven, d, 2, SymmetryMode::kGraph));
}

TEST(CanonicalKey, Examples) {
  const auto g = p3();
  const auto ends = occupy(g, {{0, 0}, {2, 0}}, false);
  EXPECT_EQ(canonical_key(g, ends, 0), canonical_key(g, ends, 2));
  const auto end_mid = occupy(g, {{0, 0}, {1, 0}}, false);
  EXPECT_NE(canonical_key(g, ends, 0), canonical_key(g, end_mid, 0));

  const auto m = arena("moveOnce");
  const auto ac = occupy(m, {{m.at("a"), 0}, {m.at("c"), 0}}, false);
  EXPECT_NE(canonical_key(m, ac, m.at("a")), canonical_key(m, ac, m.at("c")));
}

TEST(CanonicalKey, DeterministicAcrossCalls) {
  const auto g = arena("OSP");
  const auto d = occupy(g, {{2, 1}, {4, 0}, {5, 2}});
  const auto k1 = canonical_key(g, d, 4);
  const auto k2 = canonical_key(g, d, 4);
  EXPECT_EQ(k1, k2);
  EXPECT_EQ(k1.str(), k2.str());
}

TEST(GraphProperty, AutomorphismsMatchBruteForce) {
  for (const char* name : {"SUIR", "moveOnce", "negIL", "OSP"}) {
    const auto g = arena(name);
    auto expected = testutil::brute_automorphisms(g);
    auto got = g.automorphisms(SymmetryMode::kGraph);
    ASSERT_FALSE(got.empty());
    for (size_t v = 0; v < got.front().size(); ++v) EXPECT_EQ(got.front()[v], static_cast<int>(v));
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << name;
  }
}

TEST(GraphProperty, DecoratedSymmetriesFormAGroup) {
  for (const char* name : {"SUIR", "moveOnce", "negIL", "OSP"}) {
    const auto g = arena(name);
    std::vector<Decoration> decos{empty_deco(g), occupy(g, {{0, 0}}), occupy(g, {{0, 1}, {g.order() - 1, 0}})};
    if (g.order() > 3) decos.push_back(occupy(g, {{1, 0}, {g.order() - 2, 0}}, false));
    for (const auto& d : decos) {
      for (VertexId fixed = 0; fixed < g.order(); ++fixed) {
        for (bool iso : {false, true}) {
          const auto syms = decorated_symmetries(g, d, fixed, iso);
          std::set<Permutation> set;
          for (const auto& s : syms) {
            set.insert(s.permutation);
            EXPECT_EQ(s.permutation[fixed], fixed);
            EXPECT_EQ(permute(d, s.permutation), d);
            if (iso) EXPECT_TRUE(s.isometric);
            EXPECT_EQ(s.isometric, g.is_isometry(s.permutation));
          }
          Permutation id(g.order());
          std::iota(id.begin(), id.end(), 0);
          EXPECT_TRUE(set.count(id));
          for (const auto& a : set) {
            EXPECT_TRUE(set.count(testutil::inverse(a)));
            for (const auto& b : set) EXPECT_TRUE(set.count(testutil::compose(a, b)));
          }
        }
      }
    }
  }
}

TEST(GraphProperty, KeyInvariantUnderSymmetries) {
  for (const char* name : {"SUIR", "moveOnce", "negIL", "OSP"}) {
    const auto g = arena(name);
    const auto group = g.automorphisms(SymmetryMode::kGraph);
    const auto d = occupy(g, {{0, 1}, {1, 0}, {g.order() - 1, 1}});
    for (VertexId obs : {0, 1, g.order() - 1}) {
      const auto key = canonical_key(g, d, obs);
      for (const auto& p : group) EXPECT_EQ(canonical_key(g, permute(d, p), p[obs]), key);
    }
  }
}

// Exhaustive collision check: keys agree exactly when some automorphism maps
// one observer situation onto the other (up to three robots, three colors).
TEST(GraphProperty, KeyCollisionFreeOnSmallInstances) {
  for (const char* name : {"SUIR", "moveOnce", "negIL", "OSP"}) {
    const auto g = arena(name);
    const auto group = testutil::brute_automorphisms(g);
    std::vector<std::pair<VertexId, Color>> items;
    for (VertexId v = 0; v < g.order(); ++v) {
      for (Color c = 0; c < 3; ++c) items.emplace_back(v, c);
    }
    std::map<std::vector<int>, CanonicalKey> rep_to_key;
    std::map<CanonicalKey, std::vector<int>> key_to_rep;
    size_t situations = 0;
    auto check = [&](const std::vector<std::pair<VertexId, Color>>& robots, bool colors) {
      const Decoration d = occupy(g, robots, colors);
      std::set<VertexId> observers;
      for (auto [v, c] : robots) observers.insert(v);
      for (VertexId obs : observers) {
        ++situations;
        auto rep = brute_rep(group, d, obs);
        auto key = canonical_key(g, d, obs);
        auto [it, fresh] = rep_to_key.emplace(rep, key);
        ASSERT_EQ(it->second, key) << name << ": equivalent situations got different keys";
        auto [jt, fresh2] = key_to_rep.emplace(key, rep);
        ASSERT_EQ(jt->second, rep) << name << ": inequivalent situations share key " << key.str();
      }
    };
    const int n = static_cast<int>(items.size());
    for (int i = 0; i < n; ++i) {
      check({items[i]}, true);
      for (int j = i; j < n; ++j) {
        check({items[i], items[j]}, true);
        for (int k = j; k < n; ++k) check({items[i], items[j], items[k]}, true);
      }
    }
    // Colorless decorations reuse the color-0 items.
    for (VertexId a = 0; a < g.order(); ++a) {
      for (VertexId b = a; b < g.order(); ++b) {
        for (VertexId c = b; c < g.order(); ++c) check({{a, 0}, {b, 0}, {c, 0}}, false);
      }
    }
    EXPECT_GT(situations, 100u) << name;
  }
}
