#include <doctest.h>

#include "plumbstein/render.hpp"
#include "support.hpp"

using namespace plumbstein;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("three-loop wrapped form draws three nested arcs") {
  const WrappedForm w = wrap(support::fixture("three_loops.plumb"));
  const std::string svg = to_svg(w);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(occurrences(svg, "class=\"curved\"") == 3);
  CHECK(occurrences(svg, "class=\"vertex\"") == 9);
  for (int k = 0; k < 3; ++k) CHECK(occurrences(svg, "data-nesting=\"" + std::to_string(k) + "\"") == 1);
  const std::string dot = to_dot(w);
  CHECK(occurrences(dot, "kind=\"curved\"") == 3);
  CHECK(dot.rfind("graph wrapped {", 0) == 0);
}

TEST_CASE("three-loop diagram draws three pairs of 1-handle boxes") {
  const HandlebodyDiagram h = assemble(support::fixture("three_loops.plumb"));
  const std::string svg = to_svg(h);
  CHECK(occurrences(svg, "class=\"one-handle\"") == 3);
  CHECK(occurrences(svg, "class=\"handle-box\"") == 6);
  CHECK(occurrences(svg, "class=\"unknot\"") == 9);
  CHECK(occurrences(svg, "class=\"clasp\"") == 11);
}

TEST_CASE("a tree draws only unknot glyphs") {
  const HandlebodyDiagram h = assemble(support::fixture("lens.plumb"));
  const std::string svg = to_svg(h);
  CHECK(occurrences(svg, "class=\"unknot\"") == 3);
  CHECK(occurrences(svg, "class=\"handle-box\"") == 0);
  CHECK(occurrences(svg, "class=\"curved\"") == 0);
}

TEST_CASE("emitters are pure functions of their input") {
  for (const auto& name : support::all_fixtures()) {
    CAPTURE(name);
    const PlumbingGraph g = support::fixture(name);
    CHECK(to_svg(assemble(g)) == to_svg(assemble(support::fixture(name))));
    CHECK(to_dot(assemble(g)) == to_dot(assemble(support::fixture(name))));
  }
  const WrappedForm w = wrap(support::fixture("theta.plumb"));
  CHECK(to_svg(w) == to_svg(wrap(support::fixture("theta.plumb"))));
}

TEST_CASE("labels are escaped") {
  PlumbingGraph g;
  g.add_vertex("a<&>", -2);
  g.add_vertex("b\"", -2);
  g.add_vertex("c", -2);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  const std::string svg = to_svg(wrap(g));
  CHECK(svg.find("a&lt;&amp;&gt;") != std::string::npos);
  CHECK(svg.find("a<&>") == std::string::npos);
  CHECK(to_dot(wrap(g)).find("\"b\\\"\"") != std::string::npos);
}
