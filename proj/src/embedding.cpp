#include "plumbstein/embedding.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "plumbstein/errors.hpp"

namespace plumbstein {

bool is_k33(const PlumbingGraph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
  std::vector<int> side(6, -1);
  side[0] = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  const auto left = std::count(side.begin(), side.end(), 0);
  return left == 3 && std::count(side.begin(), side.end(), 1) == 3;
}

PlanarEmbedding embedding_from_rotation(const PlumbingGraph& g, std::vector<std::vector<std::size_t>> rotation) {
  PlanarEmbedding emb;
  emb.rotation = std::move(rotation);
  // Darts are (edge, 0) for u -> v and (edge, 1) for v -> u.
  std::vector<std::array<bool, 2>> used(g.edge_count(), {false, false});
  for (std::size_t e0 = 0; e0 < g.edge_count(); ++e0) {
    for (int d0 = 0; d0 < 2; ++d0) {
      if (used[e0][d0]) continue;
      Face face;
      std::size_t e = e0;
      int d = d0;
      while (!used[e][d]) {
        used[e][d] = true;
        const Edge& edge = g.edge(e);
        const std::size_t from = d == 0 ? edge.u : edge.v;
        const std::size_t to = d == 0 ? edge.v : edge.u;
        face.vertices.push_back(from);
        face.edges.push_back(e);
        const auto& rot = emb.rotation.at(to);
        const auto pos = std::find(rot.begin(), rot.end(), e) - rot.begin();
        e = rot[(static_cast<std::size_t>(pos) + 1) % rot.size()];
        d = g.edge(e).u == to ? 0 : 1;
      }
      emb.faces.push_back(std::move(face));
    }
  }
  emb.outer_face = outer_face_candidates(emb).front();
  return emb;
}

std::vector<std::size_t> outer_face_candidates(const PlanarEmbedding& emb) {
  std::vector<std::size_t> order(emb.faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto earliest = [&](std::size_t f) {
    return *std::min_element(emb.faces[f].vertices.begin(), emb.faces[f].vertices.end());
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto la = emb.faces[a].edges.size(), lb = emb.faces[b].edges.size();
    if (la != lb) return la > lb;
    return earliest(a) < earliest(b);
  });
  return order;
}

std::variant<PlanarEmbedding, NonplanarCertificate> planar_embed(const PlumbingGraph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

  BGraph bg(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    boost::add_edge(g.edge(e).u, g.edge(e).v, static_cast<int>(e), bg);
  }
  std::vector<std::vector<BEdge>> rotation(g.vertex_count());
  std::vector<BEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(rotation.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  const auto edge_index = boost::get(boost::edge_index, bg);
  if (!planar) {
    NonplanarCertificate cert;
    for (const BEdge& be : kuratowski) cert.edges.push_back(static_cast<std::size_t>(edge_index[be]));
    std::sort(cert.edges.begin(), cert.edges.end());
    cert.is_k33 = is_k33(g);
    return cert;
  }
  std::vector<std::vector<std::size_t>> rot(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const BEdge& be : rotation[v]) rot[v].push_back(static_cast<std::size_t>(edge_index[be]));
  }
  return embedding_from_rotation(g, std::move(rot));
}

std::vector<std::size_t> DualGraph::adjacent(std::size_t f) const {
  std::set<std::size_t> out;
  for (const DualEdge& e : edges) {
    if (e.a == f && e.b != f) out.insert(e.b);
    if (e.b == f && e.a != f) out.insert(e.a);
  }
  return {out.begin(), out.end()};
}

DualGraph dual_graph(const PlanarEmbedding& emb) {
  DualGraph d;
  d.face_count = emb.faces.size();
  d.outer = emb.outer_face;
  std::size_t edge_count = 0;
  for (const Face& f : emb.faces) {
    for (std::size_t e : f.edges) edge_count = std::max(edge_count, e + 1);
  }
  std::vector<std::vector<std::size_t>> sides(edge_count);
  for (std::size_t f = 0; f < emb.faces.size(); ++f) {
    for (std::size_t e : emb.faces[f].edges) sides[e].push_back(f);
  }
  for (std::size_t e = 0; e < edge_count; ++e) {
    if (sides[e].size() == 2) d.edges.push_back({sides[e][0], sides[e][1], e});
  }
  return d;
}

HamPath hamiltonian_path(const DualGraph& d) {
  const std::size_t n = d.face_count;
  if (n == 0) throw DomainError("dual graph has no faces");
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t f = 0; f < n; ++f) adj[f] = d.adjacent(f);

  std::vector<bool> visited(n, false);
  std::vector<std::size_t> reversed{d.outer};
  visited[d.outer] = true;

  auto rest_connected = [&]() {
    std::size_t start = n;
    std::size_t remaining = 0;
    for (std::size_t f = 0; f < n; ++f) {
      if (!visited[f]) {
        ++remaining;
        if (start == n) start = f;
      }
    }
    if (remaining == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      for (std::size_t h : adj[f]) {
        if (!visited[h] && !seen[h]) {
          seen[h] = true;
          ++reached;
          stack.push_back(h);
        }
      }
    }
    return reached == remaining;
  };

  std::function<bool()> extend = [&]() {
    if (reversed.size() == n) return true;
    for (std::size_t next : adj[reversed.back()]) {
      if (visited[next]) continue;
      visited[next] = true;
      reversed.push_back(next);
      if (rest_connected() && extend()) return true;
      reversed.pop_back();
      visited[next] = false;
    }
    return false;
  };
  if (!extend()) {
    throw SearchExhausted("dual graph has no Hamiltonian path ending at face " + std::to_string(d.outer));
  }

  HamPath path;
  path.faces.assign(reversed.rbegin(), reversed.rend());
  for (std::size_t k = 0; k + 1 < path.faces.size(); ++k) {
    std::size_t best = SIZE_MAX;
    for (const DualEdge& e : d.edges) {
      const bool joins = (e.a == path.faces[k] && e.b == path.faces[k + 1]) ||
                         (e.b == path.faces[k] && e.a == path.faces[k + 1]);
      if (joins) best = std::min(best, e.primal);
    }
    path.crossed.push_back(best);
  }
  return path;
}

}  // namespace plumbstein
