#include "plumbstein/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "plumbstein/errors.hpp"

namespace plumbstein {

std::size_t PlumbingGraph::add_vertex(std::string id, std::int64_t weight) {
  if (id.empty()) throw DomainError("empty vertex id");
  if (weight >= 0) throw DomainError("weight of vertex '" + id + "' must be a negative integer");
  if (by_id_.contains(id)) throw DomainError("duplicate vertex id '" + id + "'");
  const std::size_t index = vertices_.size();
  by_id_.emplace(id, index);
  vertices_.push_back({std::move(id), weight});
  incidence_.emplace_back();
  return index;
}

std::size_t PlumbingGraph::add_edge(std::size_t u, std::size_t v, EdgeSign sign) {
  if (u >= vertices_.size() || v >= vertices_.size()) throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("self-loop at '" + vertices_[u].id + "'");
  if (find_edge(u, v)) {
    throw DomainError("multiple edges between '" + vertices_[u].id + "' and '" + vertices_[v].id + "'");
  }
  const std::size_t index = edges_.size();
  edges_.push_back({u, v, sign});
  incidence_[u].push_back(index);
  incidence_[v].push_back(index);
  return index;
}

std::size_t PlumbingGraph::add_edge(std::string_view u, std::string_view v, EdgeSign sign) {
  const auto iu = index_of(u);
  const auto iv = index_of(v);
  if (!iu) throw DomainError("edge references unknown vertex '" + std::string(u) + "'");
  if (!iv) throw DomainError("edge references unknown vertex '" + std::string(v) + "'");
  return add_edge(*iu, *iv, sign);
}

std::vector<std::size_t> PlumbingGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e : incidence_.at(v)) out.push_back(edges_[e].other(v));
  return out;
}

std::optional<std::size_t> PlumbingGraph::index_of(std::string_view id) const {
  const auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PlumbingGraph::find_edge(std::size_t u, std::size_t v) const {
  for (std::size_t e : incidence_.at(u)) {
    if (edges_[e].other(u) == v) return e;
  }
  return std::nullopt;
}

bool PlumbingGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertices_.size();
}

PlumbingGraph PlumbingGraph::subgraph(std::span<const std::size_t> edge_ids,
                                      std::span<const std::size_t> extra_vertices) const {
  std::set<std::size_t> keep(extra_vertices.begin(), extra_vertices.end());
  for (std::size_t e : edge_ids) {
    keep.insert(edges_.at(e).u);
    keep.insert(edges_.at(e).v);
  }
  PlumbingGraph sub;
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t v : keep) remap[v] = sub.add_vertex(vertices_[v].id, vertices_[v].weight);
  for (std::size_t e : edge_ids) {
    const Edge& edge = edges_[e];
    sub.add_edge(remap[edge.u], remap[edge.v], edge.sign);
  }
  return sub;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

PlumbingGraph parse_graph(std::string_view text) {
  PlumbingGraph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    try {
      if (tokens[0] == "vertex") {
        if (tokens.size() != 3) throw ParseError(line_no, "expected 'vertex <id> <weight>'");
        const auto weight = parse_int(tokens[2]);
        if (!weight) throw ParseError(line_no, "weight '" + std::string(tokens[2]) + "' is not an integer");
        g.add_vertex(std::string(tokens[1]), *weight);
      } else if (tokens[0] == "edge") {
        if (tokens.size() != 3 && tokens.size() != 4) {
          throw ParseError(line_no, "expected 'edge <id1> <id2> [+|-]'");
        }
        EdgeSign sign = EdgeSign::Positive;
        if (tokens.size() == 4) {
          if (tokens[3] == "+") {
            sign = EdgeSign::Positive;
          } else if (tokens[3] == "-") {
            sign = EdgeSign::Negative;
          } else {
            throw ParseError(line_no, "edge sign must be '+' or '-'");
          }
        }
        g.add_edge(tokens[1], tokens[2], sign);
      } else {
        throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
      }
    } catch (const DomainError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (g.vertex_count() == 0) throw ParseError(0, "graph has no vertices");
  return g;
}

std::string format_graph(const PlumbingGraph& g) {
  std::ostringstream out;
  for (const Vertex& v : g.vertices()) out << "vertex " << v.id << ' ' << v.weight << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << g.id(e.u) << ' ' << g.id(e.v) << ' ' << sign_char(e.sign) << '\n';
  }
  return out.str();
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::BadVertex:
      return "bad-vertex";
    case ViolationKind::ValenceExceeded:
      return "valence-exceeded";
    case ViolationKind::Disconnected:
      return "disconnected";
    case ViolationKind::LoopOrMultiEdge:
      return "loop/multi-edge";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind k) const {
  return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

ValidationReport validate(const PlumbingGraph& g) {
  ValidationReport report;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto valence = static_cast<std::int64_t>(g.valence(v));
    if (valence > 3) {
      report.violations.push_back({g.id(v), ViolationKind::ValenceExceeded,
                                   "valence " + std::to_string(valence) + " exceeds 3"});
    }
    if (-g.weight(v) < valence) {
      report.violations.push_back({g.id(v), ViolationKind::BadVertex,
                                   "weight " + std::to_string(g.weight(v)) + " with valence " +
                                       std::to_string(valence)});
    }
  }
  // One report per component not containing the first vertex.
  std::vector<int> component(g.vertex_count(), -1);
  int next = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (component[s] >= 0) continue;
    if (next > 0) {
      report.violations.push_back({g.id(s), ViolationKind::Disconnected, "not reachable from " + g.id(0)});
    }
    std::vector<std::size_t> stack{s};
    component[s] = next;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : g.neighbors(v)) {
        if (component[w] < 0) {
          component[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return report;
}

std::vector<TorusClass> torus_classes(const PlumbingGraph& g) {
  std::vector<TorusClass> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t t = 0; t < g.vertex_count(); ++t) {
    if (g.valence(t) != 3) continue;
    for (std::size_t first : g.incident_edges(t)) {
      TorusClass cls;
      cls.path = {t};
      std::size_t via = first;
      std::size_t cur = g.edge(first).other(t);
      cls.edges.push_back(first);
      cls.path.push_back(cur);
      while (g.valence(cur) == 2) {
        const auto inc = g.incident_edges(cur);
        via = inc[0] == via ? inc[1] : inc[0];
        cur = g.edge(via).other(cur);
        cls.edges.push_back(via);
        cls.path.push_back(cur);
      }
      if (g.valence(cur) != 3) continue;
      std::vector<std::size_t> key = cls.edges;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(std::move(cls));
    }
  }
  return out;
}

namespace {

// Edge-based biconnected components (Hopcroft-Tarjan).
std::vector<std::vector<std::size_t>> biconnected_blocks(const PlumbingGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t timer = 0;

  std::function<void(std::size_t, std::optional<std::size_t>)> dfs = [&](std::size_t v,
                                                                         std::optional<std::size_t> parent_edge) {
    disc[v] = low[v] = ++timer;
    for (std::size_t e : g.incident_edges(v)) {
      if (parent_edge && e == *parent_edge) continue;
      const std::size_t w = g.edge(e).other(v);
      if (disc[w] == 0) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<std::size_t> block;
          while (true) {
            const std::size_t top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] == 0) dfs(v, std::nullopt);
  }
  return blocks;
}

std::vector<std::size_t> vertices_of(const PlumbingGraph& g, std::span<const std::size_t> edges) {
  std::set<std::size_t> vs;
  for (std::size_t e : edges) {
    vs.insert(g.edge(e).u);
    vs.insert(g.edge(e).v);
  }
  return {vs.begin(), vs.end()};
}

}  // namespace

Decomposition decompose(const PlumbingGraph& g) {
  Decomposition d;
  std::vector<std::size_t> bridges;
  for (auto& block : biconnected_blocks(g)) {
    if (block.size() == 1) {
      bridges.push_back(block.front());
    } else {
      d.clusters.push_back({vertices_of(g, block), std::move(block)});
    }
  }
  std::sort(d.clusters.begin(), d.clusters.end(),
            [](const Cluster& a, const Cluster& b) { return a.vertices.front() < b.vertices.front(); });

  std::vector<int> cluster_of(g.vertex_count(), -1);
  for (std::size_t c = 0; c < d.clusters.size(); ++c) {
    for (std::size_t v : d.clusters[c].vertices) cluster_of[v] = static_cast<int>(c);
  }

  // Components of the bridge forest.
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t e : bridges) parent[find(g.edge(e).u)] = find(g.edge(e).v);
  std::map<std::size_t, std::vector<std::size_t>> tree_edges;
  for (std::size_t e : bridges) tree_edges[find(g.edge(e).u)].push_back(e);

  for (auto& [root, edges] : tree_edges) {
    std::sort(edges.begin(), edges.end());
    Tree t{vertices_of(g, edges), edges, {}};
    for (std::size_t v : t.vertices) {
      if (cluster_of[v] >= 0) t.attachments.push_back({v, static_cast<std::size_t>(cluster_of[v])});
    }
    d.trees.push_back(std::move(t));
  }
  if (d.clusters.empty() && d.trees.empty() && g.vertex_count() > 0) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) d.trees.push_back({{v}, {}, {}});
  }
  std::sort(d.trees.begin(), d.trees.end(),
            [](const Tree& a, const Tree& b) { return a.vertices.front() < b.vertices.front(); });

  for (std::size_t ti = 0; ti < d.trees.size(); ++ti) {
    const Tree& t = d.trees[ti];
    std::set<std::size_t> attach_set;
    for (const auto& a : t.attachments) attach_set.insert(a.vertex);
    for (std::size_t i = 0; i < t.attachments.size(); ++i) {
      for (std::size_t j = i + 1; j < t.attachments.size(); ++j) {
        if (t.attachments[i].cluster == t.attachments[j].cluster) continue;
        // Tree path by BFS over the tree's edges.
        std::map<std::size_t, std::size_t> prev;
        std::queue<std::size_t> q;
        const std::size_t src = t.attachments[i].vertex;
        const std::size_t dst = t.attachments[j].vertex;
        q.push(src);
        prev[src] = src;
        while (!q.empty()) {
          const std::size_t v = q.front();
          q.pop();
          for (std::size_t e : g.incident_edges(v)) {
            if (!std::binary_search(t.edges.begin(), t.edges.end(), e)) continue;
            const std::size_t w = g.edge(e).other(v);
            if (!prev.contains(w)) {
              prev[w] = v;
              q.push(w);
            }
          }
        }
        std::vector<std::size_t> path{dst};
        while (path.back() != src) path.push_back(prev.at(path.back()));
        std::reverse(path.begin(), path.end());
        const bool direct = std::none_of(path.begin() + 1, path.end() - 1,
                                         [&](std::size_t v) { return attach_set.contains(v); });
        if (direct) d.connectors.push_back({ti, std::move(path)});
      }
    }
  }
  return d;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v) m[v][v] = g.weight(v);
  for (const Edge& e : g.edges()) {
    m[e.u][e.v] = m[e.v][e.u] = as_int(e.sign);
  }
  return m;
}

}  // namespace plumbstein
