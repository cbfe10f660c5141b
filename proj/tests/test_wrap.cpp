#include <doctest.h>

#include "plumbstein/errors.hpp"
#include "plumbstein/wrap.hpp"
#include "support.hpp"

using namespace plumbstein;

namespace {

std::vector<std::string> row_ids(const WrappedForm& w, std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t v : w.rows[r].vertices) out.push_back(w.graph.id(v));
  return out;
}

std::string edge_name(const PlumbingGraph& g, std::size_t e) {
  std::string a = g.id(g.edge(e).u), b = g.id(g.edge(e).v);
  if (b < a) std::swap(a, b);
  return a + "-" + b;
}

// Independent structural checks: curved count, spanning forest, row partition.
void check_structure(const WrappedForm& w) {
  const PlumbingGraph& g = w.graph;
  CHECK(w.curved.size() == support::oracle_cycle_rank(g));
  std::vector<std::pair<std::size_t, std::size_t>> tree;
  for (const WrappedEdge& e : w.edges) {
    if (e.kind != EdgeKind::Curved) tree.emplace_back(g.edge(e.edge).u, g.edge(e.edge).v);
  }
  CHECK(tree.size() + 1 == g.vertex_count());
  CHECK(support::is_forest(g.vertex_count(), tree));
  std::vector<int> seen(g.vertex_count(), 0);
  for (const Row& r : w.rows) {
    for (std::size_t v : r.vertices) ++seen[v];
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
}

std::size_t face_with(const PlumbingGraph& g, const PlanarEmbedding& emb, std::set<std::string> ids) {
  for (std::size_t f = 0; f < emb.faces.size(); ++f) {
    std::set<std::string> have;
    for (std::size_t v : emb.faces[f].vertices) have.insert(g.id(v));
    if (have == ids) return f;
  }
  FAIL("no face with the requested vertices");
  return 0;
}

}  // namespace

TEST_CASE("a single cycle wraps to one row closed by one curved edge") {
  const WrappedForm w = wrap(support::fixture("cycle.plumb"));
  CHECK(is_wrapped(w));
  REQUIRE(w.rows.size() == 1);
  CHECK(row_ids(w, 0) == std::vector<std::string>{"v0", "v1", "v2", "v3", "v4"});
  REQUIRE(w.curved.size() == 1);
  CHECK(edge_name(w.graph, w.curved[0]) == "v0-v4");
  check_structure(w);
}

TEST_CASE("theta graph wraps into two rows with two nested curves") {
  const WrappedForm w = wrap(support::fixture("theta.plumb"));
  CHECK(is_wrapped(w));
  REQUIRE(w.rows.size() == 2);
  CHECK(row_ids(w, 0) == std::vector<std::string>{"s", "p2", "t", "p3"});
  CHECK(row_ids(w, 1) == std::vector<std::string>{"p1"});
  CHECK(w.curved.size() == 2);
  check_structure(w);
}

TEST_CASE("three-loop graph wraps canonically around its octagonal face") {
  const WrappedForm w = wrap(support::fixture("three_loops.plumb"));
  CHECK(is_wrapped(w));
  REQUIRE(w.rows.size() == 3);
  CHECK(row_ids(w, 0) == std::vector<std::string>{"y", "z", "a", "b", "c"});
  CHECK(row_ids(w, 1) == std::vector<std::string>{"d", "e", "x"});
  CHECK(row_ids(w, 2) == std::vector<std::string>{"w"});
  CHECK(w.curved.size() == 3);
  check_structure(w);
}

TEST_CASE("wrapping along a chosen dual path gives the hand-drawn two-row layout") {
  const PlumbingGraph g = support::fixture("three_loops.plumb");
  PlanarEmbedding emb = std::get<PlanarEmbedding>(planar_embed(g));
  const std::size_t square = face_with(g, emb, {"x", "y", "z", "w"});
  const std::size_t octagon = face_with(g, emb, {"x", "w", "z", "a", "b", "c", "d", "e"});
  const std::size_t left = face_with(g, emb, {"x", "y", "c", "d", "e"});
  const std::size_t right = face_with(g, emb, {"y", "z", "a", "b", "c"});
  emb.outer_face = right;
  HamPath path;
  path.faces = {square, octagon, left, right};
  for (std::size_t k = 0; k + 1 < path.faces.size(); ++k) {
    const auto& a = emb.faces[path.faces[k]].edges;
    std::size_t smallest = SIZE_MAX;
    for (std::size_t e : emb.faces[path.faces[k + 1]].edges) {
      if (std::find(a.begin(), a.end(), e) != a.end()) smallest = std::min(smallest, e);
    }
    path.crossed.push_back(smallest);
  }
  const WrappedForm w = wrap_along(g, emb, path);
  CHECK(is_wrapped(w));
  REQUIRE(w.rows.size() == 2);
  CHECK(row_ids(w, 0) == std::vector<std::string>{"x", "y", "z", "w"});
  CHECK(row_ids(w, 1) == std::vector<std::string>{"e", "a", "b", "c", "d"});
  std::vector<std::string> curved;
  for (std::size_t e : w.curved) curved.push_back(edge_name(g, e));
  CHECK(curved == std::vector<std::string>{"w-x", "d-e", "c-y"});
}

TEST_CASE("fused-cycle cluster wraps into two rows") {
  const PlumbingGraph g = support::fixture("fused_cycles.plumb");
  const Cluster c = decompose(g).clusters.at(0);
  const WrappedForm w = wrap(g.subgraph(c.edges));
  CHECK(is_wrapped(w));
  REQUIRE(w.rows.size() == 2);
  CHECK(row_ids(w, 0) == std::vector<std::string>{"a", "a1", "a2"});
  CHECK(row_ids(w, 1) == std::vector<std::string>{"b", "c2", "c"});
  check_structure(w);
}

TEST_CASE("damaged wrapped forms are rejected") {
  const WrappedForm good = wrap(support::fixture("three_loops.plumb"));

  WrappedForm swapped = good;
  std::swap(swapped.rows[0], swapped.rows[1]);
  CHECK_FALSE(is_wrapped(swapped));

  WrappedForm uncurved = good;
  const std::size_t e = uncurved.curved.back();
  uncurved.curved.pop_back();
  uncurved.edges[e].kind = EdgeKind::Horizontal;
  uncurved.edges[e].nesting.reset();
  CHECK_FALSE(is_wrapped(uncurved));

  WrappedForm shuffled = good;
  std::swap(shuffled.rows[0].vertices[0], shuffled.rows[0].vertices[2]);
  CHECK_FALSE(is_wrapped(shuffled));

  WrappedForm renested = good;
  std::swap(renested.curved[0], renested.curved[1]);
  std::swap(renested.edges[renested.curved[0]].nesting, renested.edges[renested.curved[1]].nesting);
  CHECK_FALSE(is_wrapped(renested));
  CHECK_FALSE(wrapped_form_problems(renested).empty());
}

TEST_CASE("nonplanar and path-free clusters are unsupported") {
  CHECK_THROWS_AS(wrap(support::fixture("k33.plumb")), UnsupportedShape);
  CHECK_THROWS_AS(wrap(support::petersen()), UnsupportedShape);
  CHECK_THROWS_AS(wrap(support::truncated_cube()), SearchExhausted);
}

TEST_CASE("random planar clusters always wrap") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const PlumbingGraph g = support::decorate(support::random_planar_cluster(rng, 14), rng);
    CAPTURE(format_graph(g));
    const WrappedForm w = wrap(g);
    CHECK(wrapped_form_problems(w) == std::vector<std::string>{});
    check_structure(w);
  }
}

TEST_CASE("wrapping is deterministic") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const PlumbingGraph g = support::decorate(support::random_planar_cluster(rng, 14), rng);
    CHECK(wrap(g) == wrap(g));
  }
}
