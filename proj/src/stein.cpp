#include "plumbstein/stein.hpp"

#include <algorithm>
#include <map>

#include "plumbstein/embedding.hpp"
#include "plumbstein/errors.hpp"

namespace plumbstein {

std::string_view to_string(LinkKind k) {
  switch (k) {
    case LinkKind::Horizontal:
      return "horizontal";
    case LinkKind::Vertical:
      return "vertical";
    case LinkKind::ThroughHandle:
      return "through-handle";
  }
  return "?";
}

std::string_view to_string(SlideKind k) {
  switch (k) {
    case SlideKind::OverHandle:
      return "over-handle";
    case SlideKind::UnknotOverHandle:
      return "unknot-over-handle";
    case SlideKind::BandOverHandle:
      return "band-over-handle";
    case SlideKind::CrossingFix:
      return "crossing-fix";
  }
  return "?";
}

std::string_view to_string(PartKind k) { return k == PartKind::Cluster ? "cluster" : "tree"; }

IntMatrix HandlebodyDiagram::linking_matrix() const {
  const std::size_t n = two_handles.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    m[v][v] = two_handles[v].framing;
    for (const Link& l : two_handles[v].links) m[v][l.to] += as_int(l.sign);
  }
  return m;
}

namespace {

struct Layout {
  std::vector<Row> rows;
  std::vector<EdgeKind> kinds;
  std::vector<std::size_t> curved;
};

HandlebodyDiagram from_layout(const PlumbingGraph& g, const Layout& layout) {
  const std::size_t V = g.vertex_count();
  std::vector<std::size_t> row_of(V), col_of(V);
  for (std::size_t r = 0; r < layout.rows.size(); ++r) {
    for (std::size_t c = 0; c < layout.rows[r].vertices.size(); ++c) {
      row_of[layout.rows[r].vertices[c]] = r;
      col_of[layout.rows[r].vertices[c]] = c;
    }
  }
  auto end_of_row = [&](std::size_t v) {
    return col_of[v] == 0 || col_of[v] + 1 == layout.rows[row_of[v]].vertices.size();
  };
  auto row_major_before = [&](std::size_t a, std::size_t b) {
    return std::pair(row_of[a], col_of[a]) < std::pair(row_of[b], col_of[b]);
  };
  std::vector<int> curved_count(V, 0);
  for (std::size_t e : layout.curved) {
    ++curved_count[g.edge(e).u];
    ++curved_count[g.edge(e).v];
  }

  HandlebodyDiagram h;
  h.graph = g;
  for (std::size_t v = 0; v < V; ++v) {
    const Row& row = layout.rows[row_of[v]];
    h.two_handles.push_back({v, g.weight(v), {}, {}, {}, {}, {PartKind::Cluster, 0, row_of[v], col_of[v], row.level}});
  }
  for (std::size_t k = 0; k < layout.curved.size(); ++k) {
    const Edge& e = g.edge(layout.curved[k]);
    const std::size_t p = row_major_before(e.u, e.v) ? e.u : e.v;
    const std::size_t q = e.other(p);
    std::size_t carrier = p;
    bool protrusion = false;
    if (end_of_row(p) != end_of_row(q)) {
      carrier = end_of_row(p) ? p : q;
    } else if (end_of_row(p)) {
      carrier = curved_count[q] > curved_count[p] ? q : p;
    } else {
      protrusion = true;
      carrier = row_of[q] > row_of[p] ? q : p;
    }
    h.one_handles.push_back({k, layout.curved[k], 0, k, carrier, e.other(carrier), protrusion});
    h.two_handles[carrier].passes.push_back(k);
    if (protrusion) h.two_handles[carrier].protrusions.push_back(k);
  }
  std::vector<std::optional<std::size_t>> handle_of(g.edge_count());
  for (std::size_t k = 0; k < layout.curved.size(); ++k) handle_of[layout.curved[k]] = k;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    LinkKind kind = LinkKind::Horizontal;
    if (layout.kinds[i] == EdgeKind::Vertical) kind = LinkKind::Vertical;
    if (layout.kinds[i] == EdgeKind::Curved) kind = LinkKind::ThroughHandle;
    h.two_handles[e.u].links.push_back({e.v, e.sign, kind, handle_of[i]});
    h.two_handles[e.v].links.push_back({e.u, e.sign, kind, handle_of[i]});
  }
  for (const TwoHandle& t : h.two_handles) {
    if (t.passes.size() > 2) throw DomainError("unknot " + g.id(t.vertex) + " would run through three 1-handles");
  }
  return h;
}

void require_supported_valence(const PlumbingGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.valence(v) > 3) throw UnsupportedShape("vertex " + g.id(v) + " has valence " + std::to_string(g.valence(v)));
  }
}

}  // namespace

HandlebodyDiagram build_handlebody(const WrappedForm& w) {
  const auto problems = wrapped_form_problems(w);
  if (!problems.empty()) throw DomainError("malformed wrapped form: " + problems.front());
  Layout layout{w.rows, {}, w.curved};
  for (const WrappedEdge& e : w.edges) layout.kinds.push_back(e.kind);
  return from_layout(w.graph, layout);
}

HandlebodyDiagram build_k33(const PlumbingGraph& g) {
  if (!is_k33(g)) throw DomainError("graph is not K3,3");
  std::vector<std::size_t> near{0}, far;
  for (std::size_t v = 1; v < 6; ++v) (g.find_edge(0, v) ? far : near).push_back(v);
  const std::size_t a = near[0], b = near[1], c = near[2];
  const std::size_t d = far[0], e = far[1], f = far[2];

  Layout layout;
  layout.rows = {{0, {d, a, e, c}}, {1, {b, f}}};
  layout.kinds.assign(9, EdgeKind::Horizontal);
  for (auto [x, y] : {std::pair{b, d}, std::pair{c, f}}) layout.kinds[*g.find_edge(x, y)] = EdgeKind::Vertical;
  for (auto [x, y] : {std::pair{d, c}, std::pair{b, f}, std::pair{a, f}, std::pair{b, e}}) {
    const std::size_t edge = *g.find_edge(x, y);
    layout.kinds[edge] = EdgeKind::Curved;
    layout.curved.push_back(edge);
  }
  HandlebodyDiagram h = from_layout(g, layout);
  h.two_handles[b].slides.push_back({SlideKind::CrossingFix, 2});
  return h;
}

HandlebodyDiagram assemble(const PlumbingGraph& g, const Decomposition& d) {
  require_supported_valence(g);
  HandlebodyDiagram h;
  h.graph = g;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    h.two_handles.push_back({v, g.weight(v), {}, {}, {}, {}, {PartKind::Tree, 0, 0, 0, 0}});
  }
  std::vector<bool> placed(g.vertex_count(), false);
  std::size_t row_offset = 0;
  for (std::size_t ci = 0; ci < d.clusters.size(); ++ci) {
    const Cluster& cluster = d.clusters[ci];
    const PlumbingGraph sub = g.subgraph(cluster.edges);
    HandlebodyDiagram part;
    if (is_k33(sub)) {
      part = build_k33(sub);
    } else {
      part = build_handlebody(wrap(sub));
    }
    const std::size_t handle_offset = h.one_handles.size();
    for (OneHandle oh : part.one_handles) {
      oh.id += handle_offset;
      oh.edge = cluster.edges[oh.edge];
      oh.cluster = ci;
      oh.carrier = cluster.vertices[oh.carrier];
      oh.partner = cluster.vertices[oh.partner];
      h.one_handles.push_back(oh);
    }
    std::size_t rows = 0;
    for (const TwoHandle& t : part.two_handles) {
      TwoHandle& out = h.two_handles[cluster.vertices[t.vertex]];
      for (std::size_t k : t.passes) out.passes.push_back(k + handle_offset);
      for (std::size_t k : t.protrusions) out.protrusions.push_back(k + handle_offset);
      for (Slide s : t.slides) {
        s.handle += handle_offset;
        out.slides.push_back(s);
      }
      for (Link l : t.links) {
        l.to = cluster.vertices[l.to];
        if (l.handle) *l.handle += handle_offset;
        out.links.push_back(l);
      }
      out.placement = {PartKind::Cluster, ci, t.placement.row + row_offset, t.placement.column, t.placement.level};
      placed[out.vertex] = true;
      rows = std::max(rows, t.placement.row + 1);
    }
    row_offset += rows;
  }
  for (std::size_t ti = 0; ti < d.trees.size(); ++ti) {
    std::size_t column = 0;
    for (std::size_t v : d.trees[ti].vertices) {
      if (placed[v]) continue;
      h.two_handles[v].placement = {PartKind::Tree, ti, row_offset, column++, 0};
      placed[v] = true;
    }
    if (column > 0) ++row_offset;
    for (std::size_t e : d.trees[ti].edges) {
      const Edge& edge = g.edge(e);
      h.two_handles[edge.u].links.push_back({edge.v, edge.sign, LinkKind::Horizontal, std::nullopt});
      h.two_handles[edge.v].links.push_back({edge.u, edge.sign, LinkKind::Horizontal, std::nullopt});
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!placed[v]) h.two_handles[v].placement = {PartKind::Tree, d.trees.size(), row_offset++, 0, 0};
  }
  // Links in the order of the plumbing edges at each vertex.
  for (TwoHandle& t : h.two_handles) {
    std::vector<Link> ordered;
    for (std::size_t e : g.incident_edges(t.vertex)) {
      const std::size_t other = g.edge(e).other(t.vertex);
      const auto it = std::find_if(t.links.begin(), t.links.end(), [&](const Link& l) { return l.to == other; });
      ordered.push_back(*it);
    }
    t.links = std::move(ordered);
  }
  return h;
}

HandlebodyDiagram assemble(const PlumbingGraph& g) {
  require_supported_valence(g);
  return assemble(g, decompose(g));
}

Stabilization stabilization_for(std::int64_t weight, std::int64_t rot) {
  const std::int64_t budget = -weight - 2;
  if (budget < 0) throw UnsupportedShape("weight " + std::to_string(weight) + " has no tb = weight + 1 Legendrian unknot");
  if (rot < -budget || rot > budget || (budget + rot) % 2 != 0) {
    throw DomainError("rotation " + std::to_string(rot) + " is not reachable with " + std::to_string(budget) +
                      " stabilizations");
  }
  return {(budget + rot) / 2, (budget - rot) / 2};
}

LegendrianDiagram legendrianize(const HandlebodyDiagram& h, const std::vector<Stabilization>& choice) {
  if (choice.size() != h.two_handles.size()) throw DomainError("need one stabilization choice per vertex");
  LegendrianDiagram out;
  out.diagram = h;
  for (std::size_t v = 0; v < h.two_handles.size(); ++v) {
    const TwoHandle& t = h.two_handles[v];
    const Stabilization& s = choice[v];
    const std::int64_t a = -t.framing;
    if (a < 2) throw UnsupportedShape("weight " + std::to_string(t.framing) + " has no tb = weight + 1 Legendrian unknot");
    if (s.left < 0 || s.right < 0 || s.left + s.right != a - 2) {
      throw DomainError("vertex " + h.graph.id(v) + " needs " + std::to_string(a - 2) + " stabilizations, got " +
                        std::to_string(s.left) + "+" + std::to_string(s.right));
    }
    LegendrianUnknot k{-1 - (s.left + s.right), s.left - s.right, s, t.slides};
    for (const Link& l : t.links) {
      if (l.kind != LinkKind::Vertical || l.sign != EdgeSign::Positive) continue;
      if (h.two_handles[l.to].placement.row >= t.placement.row) continue;
      for (const OneHandle& oh : h.one_handles) {
        const bool same_part = t.placement.part == PartKind::Cluster && oh.cluster == t.placement.index;
        const Slide slide{SlideKind::OverHandle, oh.id};
        if (same_part && oh.level < t.placement.level &&
            std::find(k.slides.begin(), k.slides.end(), slide) == k.slides.end()) {
          k.slides.push_back(slide);
        }
      }
    }
    if (t.passes.size() == 2) k.slides.push_back({SlideKind::UnknotOverHandle, std::max(t.passes[0], t.passes[1])});
    for (std::size_t p : t.protrusions) k.slides.push_back({SlideKind::BandOverHandle, p});
    out.unknots.push_back(std::move(k));
  }
  return out;
}

SteinEnumerator::SteinEnumerator(const HandlebodyDiagram& h) {
  for (const TwoHandle& t : h.two_handles) {
    const std::int64_t budget = -t.framing - 2;
    if (budget < 0) throw UnsupportedShape("weight " + std::to_string(t.framing) + " has no tb = weight + 1 Legendrian unknot");
    bounds_.push_back(budget);
    current_.push_back(-budget);
  }
}

Integer SteinEnumerator::count() const {
  Integer n = 1;
  for (std::int64_t b : bounds_) n *= b + 1;
  return n;
}

std::optional<std::vector<std::int64_t>> SteinEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<std::int64_t> out = current_;
  std::size_t i = current_.size();
  while (i > 0 && current_[i - 1] == bounds_[i - 1]) {
    current_[i - 1] = -bounds_[i - 1];
    --i;
  }
  if (i == 0) {
    done_ = true;
  } else {
    current_[i - 1] += 2;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> enumerate_stein(const HandlebodyDiagram& h) {
  SteinEnumerator it(h);
  std::vector<std::vector<std::int64_t>> out;
  while (auto v = it.next()) out.push_back(std::move(*v));
  return out;
}

Integer lower_bound(const PlumbingGraph& g) {
  require_supported_valence(g);
  const ValidationReport report = validate(g);
  if (!report.ok()) throw DomainError("graph is not valid: " + report.violations.front().detail);
  Integer n = 1;
  for (const Vertex& v : g.vertices()) {
    if (v.weight > -2) throw UnsupportedShape("weight " + std::to_string(v.weight) + " has no tb = weight + 1 Legendrian unknot");
    n *= -v.weight - 1;
  }
  return n;
}

}  // namespace plumbstein
