#include "plumbstein/wrap.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "plumbstein/errors.hpp"

namespace plumbstein {

std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Horizontal:
      return "horizontal";
    case EdgeKind::Vertical:
      return "vertical";
    case EdgeKind::Curved:
      return "curved";
  }
  return "?";
}

std::pair<std::size_t, std::size_t> WrappedForm::coordinate(std::size_t v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& vs = rows[r].vertices;
    const auto it = std::find(vs.begin(), vs.end(), v);
    if (it != vs.end()) return {r, static_cast<std::size_t>(it - vs.begin())};
  }
  throw DomainError("vertex " + std::to_string(v) + " is not placed in any row");
}

namespace {

// Maximal run of edges through bivalent vertices containing `e`, listed from
// the end with the smaller vertex index. Empty `ends` means the graph is a cycle.
struct Chain {
  std::vector<std::size_t> edges;
  std::vector<std::size_t> ends;
};

Chain chain_through(const PlumbingGraph& g, std::size_t e) {
  auto walk = [&](std::size_t from_edge, std::size_t towards) {
    std::vector<std::size_t> out;
    std::size_t via = from_edge;
    std::size_t cur = towards;
    while (g.valence(cur) == 2) {
      const auto inc = g.incident_edges(cur);
      via = inc[0] == via ? inc[1] : inc[0];
      if (via == e) return std::make_pair(out, SIZE_MAX);
      out.push_back(via);
      cur = g.edge(via).other(cur);
    }
    return std::make_pair(out, cur);
  };
  const Edge& edge = g.edge(e);
  auto [forward, end_v] = walk(e, edge.v);
  if (end_v == SIZE_MAX) return {{}, {}};
  auto [backward, end_u] = walk(e, edge.u);
  Chain c;
  c.edges.assign(backward.rbegin(), backward.rend());
  c.edges.push_back(e);
  c.edges.insert(c.edges.end(), forward.begin(), forward.end());
  c.ends = {end_u, end_v};
  if (end_v < end_u) {
    std::reverse(c.edges.begin(), c.edges.end());
    std::swap(c.ends[0], c.ends[1]);
  }
  return c;
}

std::size_t choose_curved(const PlumbingGraph& g, std::size_t crossed) {
  const Chain chain = chain_through(g, crossed);
  if (chain.ends.empty()) {
    // Whole graph is a cycle: close it at the first vertex, towards its later neighbour.
    const auto inc = g.incident_edges(0);
    return g.edge(inc[0]).other(0) > g.edge(inc[1]).other(0) ? inc[0] : inc[1];
  }
  return chain.edges[(chain.edges.size() - 1) / 2];
}

// Vertices met walking the face from position `start` in direction `step`
// until the next edge to cross is `stop`.
std::vector<std::size_t> arc(const Face& face, std::size_t start, int step, std::size_t stop) {
  const std::size_t n = face.vertices.size();
  std::vector<std::size_t> out;
  std::size_t pos = start;
  for (std::size_t guard = 0; guard <= n; ++guard) {
    out.push_back(face.vertices[pos]);
    const std::size_t edge_pos = step > 0 ? pos : (pos + n - 1) % n;
    if (face.edges[edge_pos] == stop) return out;
    pos = step > 0 ? (pos + 1) % n : (pos + n - 1) % n;
  }
  throw DomainError("face walk does not contain the expected edge");
}

std::size_t position_of(const std::vector<std::size_t>& xs, std::size_t x) {
  const auto it = std::find(xs.begin(), xs.end(), x);
  if (it == xs.end()) throw DomainError("face walk does not contain the expected edge");
  return static_cast<std::size_t>(it - xs.begin());
}

}  // namespace

WrappedForm wrap_along(const PlumbingGraph& g, const PlanarEmbedding& emb, const HamPath& path) {
  if (path.faces.size() < 2 || path.faces.back() != emb.outer_face) {
    throw DomainError("dual path must have at least two faces and end at the outer face");
  }
  const std::size_t n = path.crossed.size();

  WrappedForm w;
  w.graph = g;
  for (std::size_t k = 0; k < n; ++k) w.curved.push_back(choose_curved(g, path.crossed[k]));

  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t u_prev = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Face& face = emb.faces[path.faces[k]];
    const Edge& ck = g.edge(w.curved[k]);
    Row row{k, {}};
    std::size_t u_next = 0;
    if (k == 0) {
      u_next = std::min(ck.u, ck.v);
      const std::size_t i = position_of(face.edges, w.curved[0]);
      const std::size_t next = (i + 1) % face.vertices.size();
      const std::size_t start = face.vertices[next] == u_next ? next : i;
      const int step = start == i ? -1 : 1;
      row.vertices = arc(face, start, step, w.curved[0]);
    } else {
      const std::size_t i = position_of(face.edges, w.curved[k - 1]);
      const std::size_t size = face.vertices.size();
      // The walk crosses c_{k-1} between positions i and i+1.
      const bool u_first = face.vertices[i] == u_prev;
      const std::size_t u_pos = u_first ? i : (i + 1) % size;
      const std::size_t v_pos = u_first ? (i + 1) % size : i;
      const int u_step = u_first ? -1 : 1;
      const auto left = arc(face, u_pos, u_step, w.curved[k]);
      const auto right = arc(face, v_pos, -u_step, w.curved[k]);
      u_next = left.back();
      for (auto it = left.rbegin(); it != left.rend(); ++it) {
        if (!seen[*it]) row.vertices.push_back(*it);
      }
      for (std::size_t v : right) {
        if (!seen[v]) row.vertices.push_back(v);
      }
    }
    for (std::size_t v : face.vertices) seen[v] = true;
    if (k == 0) w.innermost_cycle = row.vertices;
    if (!row.vertices.empty()) w.rows.push_back(std::move(row));
    u_prev = u_next;
  }

  std::map<std::size_t, std::pair<std::size_t, std::size_t>> coord;
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    for (std::size_t c = 0; c < w.rows[r].vertices.size(); ++c) coord[w.rows[r].vertices[c]] = {r, c};
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto it = std::find(w.curved.begin(), w.curved.end(), e);
    if (it != w.curved.end()) {
      w.edges.push_back({e, EdgeKind::Curved, static_cast<std::size_t>(it - w.curved.begin())});
      continue;
    }
    const auto [ru, cu] = coord.at(g.edge(e).u);
    const auto [rv, cv] = coord.at(g.edge(e).v);
    const bool horizontal = ru == rv && (cu + 1 == cv || cv + 1 == cu);
    w.edges.push_back({e, horizontal ? EdgeKind::Horizontal : EdgeKind::Vertical, std::nullopt});
  }
  return w;
}

WrappedForm wrap(const PlumbingGraph& cluster) {
  auto embedded = planar_embed(cluster);
  if (auto* cert = std::get_if<NonplanarCertificate>(&embedded)) {
    throw UnsupportedShape(cert->is_k33 ? "cluster is K3,3; it has no planar wrapped form"
                                        : "cluster is nonplanar and not K3,3");
  }
  PlanarEmbedding emb = std::get<PlanarEmbedding>(std::move(embedded));
  for (std::size_t outer : outer_face_candidates(emb)) {
    emb.outer_face = outer;
    try {
      const HamPath path = hamiltonian_path(dual_graph(emb));
      return wrap_along(cluster, emb, path);
    } catch (const SearchExhausted&) {
    }
  }
  throw SearchExhausted("no face of the embedding admits a dual Hamiltonian path ending there");
}

namespace {

std::set<std::size_t> symmetric_difference(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  std::set<std::size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Tree path between a and b as an edge set, following parent pointers of a
// BFS from a.
std::vector<std::size_t> tree_path(const PlumbingGraph& g, const std::vector<bool>& in_tree, std::size_t a,
                                   std::size_t b, std::vector<std::size_t>* vertices) {
  std::vector<std::size_t> parent_edge(g.vertex_count(), SIZE_MAX);
  std::vector<bool> reached(g.vertex_count(), false);
  std::vector<std::size_t> queue{a};
  reached[a] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t v = queue[i];
    for (std::size_t e : g.incident_edges(v)) {
      if (!in_tree[e]) continue;
      const std::size_t w = g.edge(e).other(v);
      if (!reached[w]) {
        reached[w] = true;
        parent_edge[w] = e;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> edges;
  if (!reached[b]) return edges;
  std::size_t cur = b;
  if (vertices) vertices->push_back(b);
  while (cur != a) {
    edges.push_back(parent_edge[cur]);
    cur = g.edge(parent_edge[cur]).other(cur);
    if (vertices) vertices->push_back(cur);
  }
  return edges;
}

bool is_simple_cycle(const PlumbingGraph& g, const std::set<std::size_t>& edges) {
  if (edges.size() < 3) return false;
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (std::size_t e : edges) {
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }
  for (const auto& [v, inc] : adj) {
    if (inc.size() != 2) return false;
  }
  // Connected: walk around from one vertex.
  const std::size_t start = adj.begin()->first;
  std::size_t cur = start, via = adj[start][0], steps = 0;
  do {
    cur = g.edge(via).other(cur);
    via = adj[cur][0] == via ? adj[cur][1] : adj[cur][0];
    ++steps;
  } while (cur != start && steps <= edges.size());
  return steps == edges.size();
}

}  // namespace

std::vector<std::string> wrapped_form_problems(const WrappedForm& w) {
  std::vector<std::string> problems;
  const PlumbingGraph& g = w.graph;
  const std::size_t V = g.vertex_count();
  const std::size_t E = g.edge_count();

  std::vector<int> placed(V, 0);
  std::vector<std::size_t> row_of(V, 0), col_of(V, 0);
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    for (std::size_t c = 0; c < w.rows[r].vertices.size(); ++c) {
      const std::size_t v = w.rows[r].vertices[c];
      if (v >= V) {
        problems.push_back("row " + std::to_string(r) + " names a vertex outside the graph");
        return problems;
      }
      ++placed[v];
      row_of[v] = r;
      col_of[v] = c;
    }
  }
  for (std::size_t v = 0; v < V; ++v) {
    if (placed[v] != 1) problems.push_back("vertex " + g.id(v) + " is placed " + std::to_string(placed[v]) + " times");
  }

  if (w.edges.size() != E) {
    problems.push_back("edge classification covers " + std::to_string(w.edges.size()) + " of " + std::to_string(E) +
                       " edges");
    return problems;
  }
  std::vector<bool> in_tree(E, false);
  std::vector<std::size_t> nested;
  for (std::size_t i = 0; i < E; ++i) {
    const WrappedEdge& we = w.edges[i];
    if (we.edge != i) problems.push_back("edge record " + std::to_string(i) + " is out of order");
    if (we.kind == EdgeKind::Curved) {
      if (!we.nesting) problems.push_back("curved edge " + std::to_string(i) + " has no nesting position");
      nested.push_back(i);
    } else {
      in_tree[i] = true;
      if (we.nesting) problems.push_back("non-curved edge " + std::to_string(i) + " has a nesting position");
    }
  }
  const std::size_t rank = E + 1 - V;
  if (nested.size() != rank || w.curved.size() != rank) {
    problems.push_back("expected " + std::to_string(rank) + " curved edges, found " + std::to_string(nested.size()));
  }
  for (std::size_t k = 0; k < w.curved.size(); ++k) {
    const std::size_t e = w.curved[k];
    if (e >= E || w.edges[e].kind != EdgeKind::Curved || w.edges[e].nesting != k) {
      problems.push_back("curved order disagrees with edge records at position " + std::to_string(k));
    }
  }
  if (!problems.empty() || w.curved.empty()) {
    if (w.curved.empty()) problems.push_back("no curved edges");
    return problems;
  }

  // Non-curved edges must form a spanning tree.
  std::vector<std::size_t> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < E; ++e) {
    if (!in_tree[e]) continue;
    const std::size_t a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) {
      problems.push_back("non-curved edges contain a cycle");
      return problems;
    }
    parent[a] = b;
  }

  // Faces of the nested picture: Z_0, Z_{k-1} + Z_k, ..., Z_{n-1}.
  const std::size_t n = w.curved.size();
  std::vector<std::set<std::size_t>> cycles;
  std::vector<std::size_t> innermost;
  for (std::size_t k = 0; k < n; ++k) {
    const Edge& c = g.edge(w.curved[k]);
    const auto path = tree_path(g, in_tree, c.u, c.v, k == 0 ? &innermost : nullptr);
    std::set<std::size_t> z(path.begin(), path.end());
    z.insert(w.curved[k]);
    cycles.push_back(std::move(z));
  }
  std::vector<std::set<std::size_t>> faces{cycles[0]};
  for (std::size_t k = 1; k < n; ++k) faces.push_back(symmetric_difference(cycles[k - 1], cycles[k]));
  faces.push_back(cycles[n - 1]);

  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (!is_simple_cycle(g, faces[f])) problems.push_back("face " + std::to_string(f) + " is not a simple cycle");
  }
  std::vector<int> face_count(E, 0);
  for (const auto& f : faces) {
    for (std::size_t e : f) ++face_count[e];
  }
  for (std::size_t e = 0; e < E; ++e) {
    if (face_count[e] != 2) {
      problems.push_back("edge " + std::to_string(e) + " borders " + std::to_string(face_count[e]) + " faces");
    }
  }
  if (V + faces.size() != E + 2) problems.push_back("Euler characteristic is not 2");
  for (std::size_t k = 0; k + 1 < faces.size(); ++k) {
    if (!faces[k].contains(w.curved[k]) || !faces[k + 1].contains(w.curved[k])) {
      problems.push_back("curved edge " + std::to_string(k) + " does not separate faces " + std::to_string(k) +
                         " and " + std::to_string(k + 1));
    }
  }
  // Around every vertex the faces must close up into a single disk.
  for (std::size_t v = 0; v < V && problems.empty(); ++v) {
    const auto inc = g.incident_edges(v);
    std::vector<std::size_t> link(inc.size());
    std::iota(link.begin(), link.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) { return link[x] == x ? x : link[x] = root(link[x]); };
    for (const auto& f : faces) {
      std::vector<std::size_t> at_v;
      for (std::size_t i = 0; i < inc.size(); ++i) {
        if (f.contains(inc[i])) at_v.push_back(i);
      }
      if (at_v.size() == 2) link[root(at_v[0])] = root(at_v[1]);
    }
    for (std::size_t i = 1; i < inc.size(); ++i) {
      if (root(i) != root(0)) problems.push_back("faces around " + g.id(v) + " do not form a disk");
    }
  }

  // Rows: the innermost cycle is the bottom row; each later row holds
  // exactly the vertices first met on its face.
  std::reverse(innermost.begin(), innermost.end());
  const Edge& gamma = g.edge(w.curved[0]);
  if (!innermost.empty() && innermost.front() != std::min(gamma.u, gamma.v)) {
    std::reverse(innermost.begin(), innermost.end());
  }
  if (w.rows.empty() || w.rows[0].vertices != innermost || w.innermost_cycle != innermost) {
    problems.push_back("bottom row is not the tree path closed by the innermost curved edge");
  }
  std::vector<std::size_t> level(V, SIZE_MAX);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t e : faces[f]) {
      level[g.edge(e).u] = std::min(level[g.edge(e).u], f);
      level[g.edge(e).v] = std::min(level[g.edge(e).v], f);
    }
  }
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    if (r > 0 && w.rows[r].level <= w.rows[r - 1].level) {
      problems.push_back("row " + std::to_string(r) + " is out of nesting order");
    }
    for (std::size_t v : w.rows[r].vertices) {
      if (level[v] != w.rows[r].level) {
        problems.push_back("vertex " + g.id(v) + " sits in row " + std::to_string(r) + " but first appears on face " +
                           std::to_string(level[v]));
      }
    }
  }

  for (std::size_t e = 0; e < E && problems.empty(); ++e) {
    if (!in_tree[e]) continue;
    const Edge& edge = g.edge(e);
    const bool adjacent = row_of[edge.u] == row_of[edge.v] &&
                          (col_of[edge.u] + 1 == col_of[edge.v] || col_of[edge.v] + 1 == col_of[edge.u]);
    const EdgeKind expected = adjacent ? EdgeKind::Horizontal : EdgeKind::Vertical;
    if (w.edges[e].kind != expected) {
      problems.push_back("edge " + g.id(edge.u) + "-" + g.id(edge.v) + " should be " +
                         std::string(to_string(expected)));
    }
  }
  return problems;
}

}  // namespace plumbstein
