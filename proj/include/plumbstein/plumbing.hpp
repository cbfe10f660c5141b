#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace plumbstein {

enum class EdgeSign : int { Negative = -1, Positive = 1 };

inline int as_int(EdgeSign s) { return static_cast<int>(s); }
inline char sign_char(EdgeSign s) { return s == EdgeSign::Positive ? '+' : '-'; }

struct Vertex {
  std::string id;
  std::int64_t weight;

  bool operator==(const Vertex&) const = default;
};

struct Edge {
  std::size_t u;
  std::size_t v;
  EdgeSign sign = EdgeSign::Positive;

  std::size_t other(std::size_t w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// A decorated plumbing graph: vertices carry strictly negative integer
/// weights, edges carry a sign. Self-loops and parallel edges are rejected
/// when the graph is built. Vertex and edge indices follow insertion order,
/// which is also the order used for every matrix and enumeration.
class PlumbingGraph {
 public:
  std::size_t add_vertex(std::string id, std::int64_t weight);
  std::size_t add_edge(std::size_t u, std::size_t v, EdgeSign sign = EdgeSign::Positive);
  std::size_t add_edge(std::string_view u, std::string_view v, EdgeSign sign = EdgeSign::Positive);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  const std::string& id(std::size_t i) const { return vertices_.at(i).id; }
  std::int64_t weight(std::size_t i) const { return vertices_.at(i).weight; }

  std::size_t valence(std::size_t v) const { return incidence_.at(v).size(); }
  std::span<const std::size_t> incident_edges(std::size_t v) const { return incidence_.at(v); }
  std::vector<std::size_t> neighbors(std::size_t v) const;

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;

  bool is_connected() const;

  /// Subgraph spanned by the given edges (plus any extra vertices), keeping
  /// ids, weights and signs. Vertices appear in parent order.
  PlumbingGraph subgraph(std::span<const std::size_t> edge_ids,
                         std::span<const std::size_t> extra_vertices = {}) const;

  bool operator==(const PlumbingGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

/// Reads the line-oriented graph format:
///   vertex <id> <weight>
///   edge <id1> <id2> [+|-]
///   # comment
/// Throws ParseError with the offending line.
PlumbingGraph parse_graph(std::string_view text);

/// Inverse of parse_graph (vertices first, then edges, input order).
std::string format_graph(const PlumbingGraph& g);

enum class ViolationKind { BadVertex, ValenceExceeded, Disconnected, LoopOrMultiEdge };

std::string_view to_string(ViolationKind k);

struct Violation {
  std::string vertex;
  ViolationKind kind;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const;
  bool operator==(const ValidationReport&) const = default;
};

/// ok iff connected, every valence <= 3 and -weight >= valence everywhere.
ValidationReport validate(const PlumbingGraph& g);

/// A maximal chain of bivalent vertices between two trivalent endpoints.
/// `path` lists vertex indices end to end; the endpoints coincide when the
/// chain is a cycle hanging off a single trivalent vertex.
struct TorusClass {
  std::vector<std::size_t> path;
  std::vector<std::size_t> edges;

  bool operator==(const TorusClass&) const = default;
};

std::vector<TorusClass> torus_classes(const PlumbingGraph& g);

struct Cluster {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  bool operator==(const Cluster&) const = default;
};

struct Attachment {
  std::size_t vertex;
  std::size_t cluster;

  bool operator==(const Attachment&) const = default;
};

struct Tree {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::vector<Attachment> attachments;

  bool operator==(const Tree&) const = default;
};

/// Path inside one tree joining attachment vertices of two different clusters.
struct Connector {
  std::size_t tree;
  std::vector<std::size_t> path;

  bool operator==(const Connector&) const = default;
};

struct Decomposition {
  std::vector<Cluster> clusters;
  std::vector<Tree> trees;
  std::vector<Connector> connectors;

  bool operator==(const Decomposition&) const = default;
};

/// Clusters are the biconnected blocks containing a cycle; the bridges form
/// the trees. In a graph of valence <= 3, distinct clusters never share a vertex.
Decomposition decompose(const PlumbingGraph& g);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Weights on the diagonal, +1 / -1 per signed edge.
IntMatrix intersection_matrix(const PlumbingGraph& g);

}  // namespace plumbstein
