#include "plumbstein/render.hpp"

#include <algorithm>
#include <sstream>

namespace plumbstein {

namespace {

constexpr long kGrid = 80;
constexpr long kMargin = 60;
constexpr long kArcStep = 30;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string vertex_label(const PlumbingGraph& g, std::size_t v) {
  return g.id(v) + " (" + std::to_string(g.weight(v)) + ")";
}

std::size_t widest_row(const std::vector<Row>& rows) {
  std::size_t w = 1;
  for (const Row& r : rows) w = std::max(w, r.vertices.size());
  return w;
}

struct Panel {
  long width;
  long height;
};

Panel wrapped_size(const WrappedForm& w) {
  const long cols = static_cast<long>(widest_row(w.rows));
  const long rows = static_cast<long>(std::max<std::size_t>(w.rows.size(), 1));
  return {2 * kMargin + (cols - 1) * kGrid, 2 * kMargin + (rows - 1) * kGrid + kArcStep * static_cast<long>(w.curved.size())};
}

// Draws `w` with its top edge at `top`.
void wrapped_body(std::ostream& os, const WrappedForm& w, long top) {
  const PlumbingGraph& g = w.graph;
  const long rows = static_cast<long>(std::max<std::size_t>(w.rows.size(), 1));
  const long bottom = top + kMargin + (rows - 1) * kGrid;
  auto x_of = [&](std::size_t v) { return kMargin + static_cast<long>(w.coordinate(v).second) * kGrid; };
  auto y_of = [&](std::size_t v) { return bottom - static_cast<long>(w.coordinate(v).first) * kGrid; };

  for (const WrappedEdge& e : w.edges) {
    const Edge& edge = g.edge(e.edge);
    const long x1 = x_of(edge.u), y1 = y_of(edge.u), x2 = x_of(edge.v), y2 = y_of(edge.v);
    const std::string dash = edge.sign == EdgeSign::Negative ? " stroke-dasharray=\"6 4\"" : "";
    if (e.kind == EdgeKind::Curved) {
      const long depth = bottom + kArcStep * static_cast<long>(*e.nesting + 1);
      os << "  <path class=\"curved\" data-nesting=\"" << *e.nesting << "\" d=\"M " << x1 << ' ' << y1 << " C " << x1
         << ' ' << depth << ", " << x2 << ' ' << depth << ", " << x2 << ' ' << y2
         << "\" fill=\"none\" stroke=\"black\"" << dash << "/>\n";
    } else {
      os << "  <line class=\"" << (e.kind == EdgeKind::Horizontal ? "horizontal" : "vertical") << "\" x1=\"" << x1
         << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\"black\"" << dash << "/>\n";
    }
  }
  for (const Row& r : w.rows) {
    for (std::size_t v : r.vertices) {
      os << "  <circle class=\"vertex\" cx=\"" << x_of(v) << "\" cy=\"" << y_of(v) << "\" r=\"6\" fill=\"black\"/>\n";
      os << "  <text x=\"" << x_of(v) + 8 << "\" y=\"" << y_of(v) - 8 << "\" font-size=\"12\">"
         << escape(vertex_label(g, v)) << "</text>\n";
    }
  }
}

void svg_open(std::ostream& os, long width, long height) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
     << width << ' ' << height << "\">\n";
}

void wrapped_dot_body(std::ostream& os, const WrappedForm& w, const std::string& prefix) {
  const PlumbingGraph& g = w.graph;
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    os << "  { rank=same;";
    for (std::size_t v : w.rows[r].vertices) os << ' ' << dot_quote(prefix + g.id(v));
    os << " }\n";
  }
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    for (std::size_t c = 0; c < w.rows[r].vertices.size(); ++c) {
      const std::size_t v = w.rows[r].vertices[c];
      os << "  " << dot_quote(prefix + g.id(v)) << " [label=" << dot_quote(vertex_label(g, v)) << ", pos=\"" << c << ','
         << r << "!\"];\n";
    }
  }
  for (const WrappedEdge& e : w.edges) {
    const Edge& edge = g.edge(e.edge);
    os << "  " << dot_quote(prefix + g.id(edge.u)) << " -- " << dot_quote(prefix + g.id(edge.v)) << " [kind=\""
       << to_string(e.kind) << "\", sign=\"" << sign_char(edge.sign) << '"';
    if (e.kind == EdgeKind::Curved) os << ", nesting=" << *e.nesting << ", style=dashed, constraint=false";
    os << "];\n";
  }
}

}  // namespace

std::string to_svg(const WrappedForm& w) { return to_svg(std::vector<WrappedForm>{w}); }

std::string to_svg(const std::vector<WrappedForm>& forms) {
  long width = 2 * kMargin, height = 0;
  for (const WrappedForm& w : forms) {
    const Panel p = wrapped_size(w);
    width = std::max(width, p.width);
    height += p.height;
  }
  std::ostringstream os;
  svg_open(os, width, std::max(height, 2 * kMargin));
  long top = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    os << " <g class=\"cluster\" data-index=\"" << i << "\">\n";
    wrapped_body(os, forms[i], top);
    os << " </g>\n";
    top += wrapped_size(forms[i]).height;
  }
  os << "</svg>\n";
  return os.str();
}

std::string to_dot(const WrappedForm& w) {
  std::ostringstream os;
  os << "graph wrapped {\n  node [shape=circle];\n";
  wrapped_dot_body(os, w, "");
  os << "}\n";
  return os.str();
}

std::string to_dot(const std::vector<WrappedForm>& forms) {
  std::ostringstream os;
  os << "graph wrapped {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    os << " subgraph cluster_" << i << " {\n";
    wrapped_dot_body(os, forms[i], forms.size() > 1 ? std::to_string(i) + ":" : "");
    os << " }\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_svg(const HandlebodyDiagram& h) {
  const PlumbingGraph& g = h.graph;
  std::size_t rows = 1, cols = 1;
  for (const TwoHandle& t : h.two_handles) {
    rows = std::max(rows, t.placement.row + 1);
    cols = std::max(cols, t.placement.column + 1);
  }
  // 1-handle box pairs sit in two columns outside the unknot grid.
  const long box_columns = h.one_handles.empty() ? 0 : 1;
  const long left = kMargin + box_columns * kGrid;
  const long width = 2 * left + (static_cast<long>(cols) - 1) * kGrid;
  const long unknot_height = kMargin + (static_cast<long>(rows) - 1) * kGrid;
  const long height = unknot_height + kMargin + kArcStep * static_cast<long>(h.one_handles.size());
  auto x_of = [&](const TwoHandle& t) { return left + static_cast<long>(t.placement.column) * kGrid; };
  auto y_of = [&](const TwoHandle& t) { return unknot_height - static_cast<long>(t.placement.row) * kGrid; };

  std::ostringstream os;
  svg_open(os, width, height);
  for (const OneHandle& o : h.one_handles) {
    const long y = unknot_height + kArcStep * static_cast<long>(o.id + 1) - 10;
    os << " <g class=\"one-handle\" data-id=\"" << o.id << "\">\n";
    os << "  <rect class=\"handle-box\" x=\"10\" y=\"" << y << "\" width=\"20\" height=\"20\" fill=\"none\" stroke=\"black\"/>\n";
    os << "  <rect class=\"handle-box\" x=\"" << width - 30 << "\" y=\"" << y
       << "\" width=\"20\" height=\"20\" fill=\"none\" stroke=\"black\"/>\n";
    const TwoHandle& carrier = h.two_handles[o.carrier];
    os << "  <path class=\"strand\" d=\"M 30 " << y + 10 << " L " << x_of(carrier) << ' ' << y_of(carrier)
       << "\" fill=\"none\" stroke=\"gray\"/>\n";
    os << "  <path class=\"strand\" d=\"M " << width - 30 << ' ' << y + 10 << " L " << x_of(carrier) << ' '
       << y_of(carrier) << "\" fill=\"none\" stroke=\"gray\"/>\n";
    os << " </g>\n";
  }
  for (const TwoHandle& t : h.two_handles) {
    for (const Link& l : t.links) {
      if (l.to < t.vertex) continue;
      const TwoHandle& other = h.two_handles[l.to];
      os << " <line class=\"clasp\" data-kind=\"" << to_string(l.kind) << "\" x1=\"" << x_of(t) << "\" y1=\"" << y_of(t)
         << "\" x2=\"" << x_of(other) << "\" y2=\"" << y_of(other) << "\" stroke=\"black\""
         << (l.sign == EdgeSign::Negative ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    }
  }
  for (const TwoHandle& t : h.two_handles) {
    os << " <ellipse class=\"unknot\" cx=\"" << x_of(t) << "\" cy=\"" << y_of(t)
       << "\" rx=\"24\" ry=\"12\" fill=\"white\" stroke=\"black\"/>\n";
    os << " <text x=\"" << x_of(t) - 20 << "\" y=\"" << y_of(t) + 4 << "\" font-size=\"10\">"
       << escape(g.id(t.vertex) + " " + std::to_string(t.framing)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string to_dot(const HandlebodyDiagram& h) {
  const PlumbingGraph& g = h.graph;
  std::ostringstream os;
  os << "graph handlebody {\n  node [shape=ellipse];\n";
  for (const TwoHandle& t : h.two_handles) {
    os << "  " << dot_quote(g.id(t.vertex)) << " [label=" << dot_quote(vertex_label(g, t.vertex)) << ", pos=\""
       << t.placement.column << ',' << t.placement.row << "!\"];\n";
  }
  for (const OneHandle& o : h.one_handles) {
    os << "  \"h" << o.id << "\" [shape=box, label=\"1-handle " << o.id << "\"];\n";
  }
  for (const TwoHandle& t : h.two_handles) {
    for (const Link& l : t.links) {
      if (l.to < t.vertex) continue;
      os << "  " << dot_quote(g.id(t.vertex)) << " -- " << dot_quote(g.id(l.to)) << " [kind=\"" << to_string(l.kind)
         << "\", sign=\"" << sign_char(l.sign) << "\"];\n";
    }
    for (std::size_t p : t.passes) os << "  " << dot_quote(g.id(t.vertex)) << " -- \"h" << p << "\" [style=dotted];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace plumbstein
