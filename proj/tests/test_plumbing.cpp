#include <doctest.h>

#include "plumbstein/errors.hpp"
#include "plumbstein/plumbing.hpp"
#include "support.hpp"

using namespace plumbstein;

TEST_CASE("parse_graph reads vertices, signed edges and comments") {
  const PlumbingGraph g = parse_graph("# two vertices\nvertex a -3\nvertex b -2  # trailing\n\nedge a b -\n");
  REQUIRE(g.vertex_count() == 2);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.weight(0) == -3);
  CHECK(g.edge(0).sign == EdgeSign::Negative);
  CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("parse_graph reports the offending line") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("vertex a -2\nedge a b\n") == 2);
  CHECK(line_of("vertex a 0\n") == 1);
  CHECK(line_of("vertex a -2\nvertex a -3\n") == 2);
  CHECK(line_of("vertex a -2\nvertex b -2\nedge a b\nedge b a\n") == 4);
  CHECK(line_of("vertex a -2\nedge a a\n") == 2);
  CHECK(line_of("vertex a -2\nedge a\n") == 2);
  CHECK(line_of("vertex a -2 -3\n") == 1);
  CHECK(line_of("loop a\n") == 1);
  CHECK(line_of("vertex a -2\nvertex b -2\nedge a b *\n") == 3);
  CHECK(line_of("# nothing\n") == 0);
}

TEST_CASE("validate flags bad vertices, high valence and extra components") {
  const ValidationReport bad = validate(support::fixture("bad.plumb"));
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].vertex == "hub");
  CHECK(bad.violations[0].kind == ViolationKind::BadVertex);

  PlumbingGraph star;
  star.add_vertex("c", -5);
  for (int i = 0; i < 4; ++i) {
    star.add_vertex("l" + std::to_string(i), -2);
    star.add_edge("c", "l" + std::to_string(i));
  }
  CHECK(validate(star).has(ViolationKind::ValenceExceeded));
  CHECK_FALSE(validate(star).has(ViolationKind::BadVertex));

  const ValidationReport split = validate(parse_graph("vertex a -2\nvertex b -2\nvertex c -2\nedge a b\n"));
  REQUIRE(split.violations.size() == 1);
  CHECK(split.violations[0].kind == ViolationKind::Disconnected);
  CHECK(split.violations[0].vertex == "c");

  for (const auto& name : support::all_fixtures()) {
    CAPTURE(name);
    CHECK(validate(support::fixture(name)).ok());
  }
}

TEST_CASE("torus classes of the fixtures") {
  CHECK(torus_classes(support::fixture("fused_cycles.plumb")).size() == 7);
  CHECK(torus_classes(support::fixture("theta.plumb")).size() == 3);
  CHECK(torus_classes(support::fixture("cycle.plumb")).empty());
  CHECK(torus_classes(support::fixture("lens.plumb")).empty());
  CHECK(torus_classes(support::fixture("family_y.plumb")).size() == 1);
  // Nine edges joining six trivalent vertices directly.
  CHECK(torus_classes(support::fixture("k33.plumb")).size() == 9);

  const PlumbingGraph theta = support::fixture("theta.plumb");
  for (const TorusClass& t : torus_classes(theta)) {
    REQUIRE(t.path.size() == 3);
    CHECK(theta.valence(t.path.front()) == 3);
    CHECK(theta.valence(t.path[1]) == 2);
    CHECK(theta.valence(t.path.back()) == 3);
  }
}

TEST_CASE("a cycle hanging off one trivalent vertex is one class") {
  const PlumbingGraph g = parse_graph(
      "vertex t -3\nvertex x -2\nvertex y -2\nvertex l -2\n"
      "edge t x\nedge x y\nedge y t\nedge t l\n");
  const auto tori = torus_classes(g);
  REQUIRE(tori.size() == 1);
  CHECK(tori[0].path.front() == tori[0].path.back());
  CHECK(tori[0].edges.size() == 3);
}

TEST_CASE("decompose splits clusters from trees") {
  const PlumbingGraph fused = support::fixture("fused_cycles.plumb");
  const Decomposition d = decompose(fused);
  REQUIRE(d.clusters.size() == 1);
  CHECK(d.clusters[0].vertices.size() == 6);
  CHECK(d.clusters[0].edges.size() == 7);
  CHECK(d.trees.size() == 3);
  CHECK(d.connectors.empty());

  const Decomposition lens = decompose(support::fixture("lens.plumb"));
  CHECK(lens.clusters.empty());
  REQUIRE(lens.trees.size() == 1);
  CHECK(lens.trees[0].vertices.size() == 3);

  // Two triangles joined by a bridge path u - m - w.
  const PlumbingGraph dumbbell = parse_graph(
      "vertex a -2\nvertex b -2\nvertex u -3\nvertex m -2\nvertex w -3\nvertex c -2\nvertex d -2\n"
      "edge a b\nedge b u\nedge u a\nedge u m\nedge m w\nedge w c\nedge c d\nedge d w\n");
  const Decomposition db = decompose(dumbbell);
  CHECK(db.clusters.size() == 2);
  REQUIRE(db.trees.size() == 1);
  REQUIRE(db.connectors.size() == 1);
  CHECK(db.connectors[0].path.size() == 3);
}

TEST_CASE("decompose covers every edge exactly once on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const PlumbingGraph g = support::random_valid_graph(rng, 12);
    CAPTURE(format_graph(g));
    const Decomposition d = decompose(g);
    std::vector<int> seen(g.edge_count(), 0);
    for (const auto& c : d.clusters) {
      for (std::size_t e : c.edges) ++seen[e];
    }
    for (const auto& t : d.trees) {
      for (std::size_t e : t.edges) ++seen[e];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
  }
}

TEST_CASE("intersection matrix agrees with the edge-list oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const PlumbingGraph g = support::random_valid_graph(rng, 12);
    CHECK(intersection_matrix(g) == support::oracle_intersection_matrix(g));
  }
}

TEST_CASE("random generators yield valid graphs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const PlumbingGraph g = support::random_valid_graph(rng, 12);
    CAPTURE(format_graph(g));
    CHECK(validate(g).ok());
    CHECK(g.vertex_count() <= 12);
  }
}
