#pragma once

// Fixture loading, seeded random generators and independent oracles shared by
// the unit tests and the acceptance binary.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "plumbstein/embedding.hpp"
#include "plumbstein/errors.hpp"
#include "plumbstein/plumbing.hpp"
#include "plumbstein/torsion.hpp"

namespace support {

using plumbstein::EdgeSign;
using plumbstein::Integer;
using plumbstein::PlumbingGraph;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline PlumbingGraph fixture(const std::string& name) {
  return plumbstein::parse_graph(read_file(fixture_path(name)));
}

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names{"cycle.plumb", "theta.plumb",  "three_loops.plumb",       "fused_cycles.plumb",
                                              "k33.plumb",   "k33_signed.plumb", "lens.plumb", "family_y.plumb"};
  return names;
}

// Simple undirected graph as an edge list; generators assign weights and signs
// once the shape is fixed.
struct Shape {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n, 0);
    for (auto [u, v] : edges) ++d[u], ++d[v];
    return d;
  }
  bool has_edge(std::size_t u, std::size_t v) const {
    return std::any_of(edges.begin(), edges.end(),
                       [&](auto e) { return (e.first == u && e.second == v) || (e.first == v && e.second == u); });
  }
};

// 2-connected planar graph of maximum valence 3, grown from a cycle by adding
// ears inside faces. Faces are tracked as cyclic vertex lists, so each ear
// keeps the drawing planar; endpoints must still have valence 2.
inline Shape random_planar_cluster(std::mt19937& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> cycle_len(3, std::min<std::size_t>(6, max_vertices));
  Shape s;
  s.n = cycle_len(rng);
  std::vector<std::size_t> ring(s.n);
  std::iota(ring.begin(), ring.end(), 0);
  for (std::size_t i = 0; i < s.n; ++i) s.edges.emplace_back(i, (i + 1) % s.n);
  std::vector<std::vector<std::size_t>> faces{ring, std::vector<std::size_t>(ring.rbegin(), ring.rend())};

  const std::size_t ears = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
  for (std::size_t attempt = 0; attempt < 4 * ears + 4 && s.n < max_vertices; ++attempt) {
    const auto deg = s.degrees();
    auto& face = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)];
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (deg[face[i]] == 2) open.push_back(i);
    }
    if (open.size() < 2) continue;
    std::shuffle(open.begin(), open.end(), rng);
    std::size_t i = std::min(open[0], open[1]), j = std::max(open[0], open[1]);
    const std::size_t room = max_vertices - s.n;
    std::size_t interior = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(3, room))(rng);
    if (interior == 0 && s.has_edge(face[i], face[j])) interior = room > 0 ? 1 : 0;
    if (interior == 0 && s.has_edge(face[i], face[j])) continue;

    std::vector<std::size_t> path{face[i]};
    for (std::size_t k = 0; k < interior; ++k) path.push_back(s.n++);
    path.push_back(face[j]);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) s.edges.emplace_back(path[k], path[k + 1]);

    // Split the face along the ear: face[i..j] + reversed ear interior, and
    // face[j..i] + ear interior.
    std::vector<std::size_t> first(face.begin() + static_cast<long>(i), face.begin() + static_cast<long>(j) + 1);
    first.insert(first.end(), path.rbegin() + 1, path.rend() - 1);
    std::vector<std::size_t> second(face.begin() + static_cast<long>(j), face.end());
    second.insert(second.end(), face.begin(), face.begin() + static_cast<long>(i) + 1);
    second.insert(second.end(), path.begin() + 1, path.end() - 1);
    face = std::move(first);
    faces.push_back(std::move(second));
  }
  return s;
}

// Weights run from -max(valence, 2) down by at most `spread`.
inline PlumbingGraph decorate(const Shape& s, std::mt19937& rng, std::int64_t spread = 3) {
  const auto deg = s.degrees();
  PlumbingGraph g;
  for (std::size_t v = 0; v < s.n; ++v) {
    const auto low = static_cast<std::int64_t>(std::max<std::size_t>(deg[v], 2));
    g.add_vertex("v" + std::to_string(v), -std::uniform_int_distribution<std::int64_t>(low, low + spread)(rng));
  }
  std::bernoulli_distribution negative(0.3);
  for (auto [u, v] : s.edges) g.add_edge(u, v, negative(rng) ? EdgeSign::Negative : EdgeSign::Positive);
  return g;
}

// Connected valid graph: up to two planar clusters joined and decorated by
// trees, every new piece attached through a single bridge.
inline PlumbingGraph random_valid_graph(std::mt19937& rng, std::size_t max_vertices, std::int64_t spread = 3) {
  Shape s;
  const std::size_t clusters = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  for (std::size_t c = 0; c < clusters && s.n + 3 <= max_vertices; ++c) {
    const std::size_t budget = std::min<std::size_t>(8, max_vertices - s.n);
    const Shape part = random_planar_cluster(rng, budget);
    const std::size_t offset = s.n;
    const auto deg = s.degrees();
    const auto part_deg = part.degrees();
    s.n += part.n;
    for (auto [u, v] : part.edges) s.edges.emplace_back(u + offset, v + offset);
    if (offset > 0) {
      std::vector<std::size_t> a, b;
      for (std::size_t v = 0; v < offset; ++v) {
        if (deg[v] < 3) a.push_back(v);
      }
      for (std::size_t v = 0; v < part.n; ++v) {
        if (part_deg[v] < 3) b.push_back(v + offset);
      }
      if (a.empty() || b.empty()) {
        s.n = offset;
        s.edges.resize(s.edges.size() - part.edges.size());
        break;
      }
      s.edges.emplace_back(a[rng() % a.size()], b[rng() % b.size()]);
    }
  }
  if (s.n == 0) s.n = 1;
  const std::size_t target = std::uniform_int_distribution<std::size_t>(s.n, max_vertices)(rng);
  while (s.n < target) {
    const auto deg = s.degrees();
    std::vector<std::size_t> open;
    for (std::size_t v = 0; v < s.n; ++v) {
      if (deg[v] < 3) open.push_back(v);
    }
    if (open.empty()) break;
    s.edges.emplace_back(open[rng() % open.size()], s.n++);
  }
  return decorate(s, rng, spread);
}

inline plumbstein::ContinuedFraction random_cf(std::mt19937& rng, std::size_t min_len, std::size_t max_len, int max_coef) {
  plumbstein::ContinuedFraction c;
  const std::size_t len = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
  for (std::size_t i = 0; i < len; ++i) c.coefficients.emplace_back(std::uniform_int_distribution<int>(2, max_coef)(rng));
  return c;
}

inline plumbstein::FamilyY random_family_y(std::mt19937& rng) {
  plumbstein::FamilyY y;
  y.chain = random_cf(rng, 2, 4, 5);
  // Trivalent ends need weight <= -3 to avoid bad vertices.
  for (Integer* end : {&y.chain.coefficients.front(), &y.chain.coefficients.back()}) *end = std::max<Integer>(*end, 3);
  for (auto& leg : y.legs) leg = random_cf(rng, 1, 3, 4);
  return y;
}

// Cube with every corner cut off: 24 vertices, eight triangles and six
// octagons. Its dual has no Hamiltonian path (the eight triangle faces only
// touch octagons, and six octagons cannot separate eight triangles).
inline PlumbingGraph truncated_cube() {
  PlumbingGraph g;
  for (std::size_t c = 0; c < 8; ++c) {
    for (std::size_t d = 0; d < 3; ++d) g.add_vertex("t" + std::to_string(c) + std::to_string(d), -3);
  }
  for (std::size_t c = 0; c < 8; ++c) {
    g.add_edge(3 * c, 3 * c + 1);
    g.add_edge(3 * c + 1, 3 * c + 2);
    g.add_edge(3 * c + 2, 3 * c);
    for (std::size_t d = 0; d < 3; ++d) {
      const std::size_t other = c ^ (std::size_t{1} << d);
      if (c < other) g.add_edge(3 * c + d, 3 * other + d);
    }
  }
  return g;
}

// Outer 5-cycle, inner pentagram, spokes. Cubic and nonplanar, not K3,3.
inline PlumbingGraph petersen() {
  PlumbingGraph g;
  for (std::size_t i = 0; i < 10; ++i) g.add_vertex("p" + std::to_string(i), -3);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

// Dual path from the first outer-face candidate that admits one, the same
// fallback order wrap() uses; `emb.outer_face` is updated to match.
inline plumbstein::HamPath first_dual_path(plumbstein::PlanarEmbedding& emb) {
  for (std::size_t f : plumbstein::outer_face_candidates(emb)) {
    plumbstein::DualGraph d = plumbstein::dual_graph(emb);
    d.outer = f;
    try {
      plumbstein::HamPath p = plumbstein::hamiltonian_path(d);
      emb.outer_face = f;
      return p;
    } catch (const plumbstein::SearchExhausted&) {
    }
  }
  throw plumbstein::SearchExhausted("no outer face admits a dual path");
}

// ---- Oracles ----

// Weights on the diagonal, summed edge signs off it, straight from the edge list.
inline std::vector<std::vector<std::int64_t>> oracle_intersection_matrix(const PlumbingGraph& g) {
  std::vector<std::vector<std::int64_t>> m(g.vertex_count(), std::vector<std::int64_t>(g.vertex_count(), 0));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) m[v][v] = g.vertex(v).weight;
  for (const auto& e : g.edges()) {
    m[e.u][e.v] += static_cast<int>(e.sign);
    m[e.v][e.u] += static_cast<int>(e.sign);
  }
  return m;
}

inline Integer oracle_lower_bound(const PlumbingGraph& g) {
  Integer n = 1;
  for (const auto& v : g.vertices()) n *= -v.weight - 1;
  return n;
}

inline std::size_t oracle_cycle_rank(const PlumbingGraph& g) { return g.edge_count() + 1 - g.vertex_count(); }

// a1 - 1/(a2 - 1/(...)) evaluated from the back with boost::rational.
inline boost::rational<long long> oracle_ncf_value(const std::vector<long long>& a) {
  boost::rational<long long> x(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) x = boost::rational<long long>(a[i]) - 1 / x;
  return x;
}

// 2 * prod over legs of prod_{j >= 2} (b_j - 1).
inline Integer oracle_twisting_count(const plumbstein::FamilyY& y) {
  Integer n = 2;
  for (const auto& leg : y.legs) {
    for (std::size_t j = 1; j < leg.coefficients.size(); ++j) n *= leg.coefficients[j] - 1;
  }
  return n;
}

// Union-find acyclicity of an edge subset.
inline bool is_forest(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    const std::size_t a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace support
