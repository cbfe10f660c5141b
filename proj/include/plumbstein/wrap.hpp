#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumbstein/embedding.hpp"
#include "plumbstein/plumbing.hpp"

namespace plumbstein {

enum class EdgeKind { Horizontal, Vertical, Curved };

std::string_view to_string(EdgeKind k);

struct WrappedEdge {
  std::size_t edge;
  EdgeKind kind;
  /// Position in the nesting order for curved edges; 0 is the innermost.
  std::optional<std::size_t> nesting;

  bool operator==(const WrappedEdge&) const = default;
};

/// Vertices first appearing on face `level` of the dual path, left to right.
struct Row {
  std::size_t level;
  std::vector<std::size_t> vertices;

  bool operator==(const Row&) const = default;
};

/// A 2-connected cluster drawn in rows (bottom row first). Curved edges go
/// around the bottom of the picture; the non-curved edges form a spanning
/// tree, and the fundamental cycles of the curved edges are nested, with the
/// bottom row plus the first curved edge forming the innermost cycle.
struct WrappedForm {
  PlumbingGraph graph;
  std::vector<Row> rows;
  /// One record per graph edge, in edge order.
  std::vector<WrappedEdge> edges;
  /// Curved edge indices, innermost first.
  std::vector<std::size_t> curved;
  std::vector<std::size_t> innermost_cycle;

  /// (row index, column) of a vertex.
  std::pair<std::size_t, std::size_t> coordinate(std::size_t v) const;
  bool operator==(const WrappedForm&) const = default;
};

/// Throws UnsupportedShape for nonplanar input (route K3,3 to build_k33) and
/// SearchExhausted when no face admits a dual Hamiltonian path.
WrappedForm wrap(const PlumbingGraph& cluster);

/// Wrap along a given embedding and dual path (path must end at the outer face).
WrappedForm wrap_along(const PlumbingGraph& cluster, const PlanarEmbedding& emb, const HamPath& path);

/// Empty when `w` is a valid wrapped-up form; otherwise one line per failed check.
std::vector<std::string> wrapped_form_problems(const WrappedForm& w);

inline bool is_wrapped(const WrappedForm& w) { return wrapped_form_problems(w).empty(); }

}  // namespace plumbstein
