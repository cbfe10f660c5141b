#include "plumbstein/serialize.hpp"

#include <limits>

#include "plumbstein/errors.hpp"

namespace plumbstein {

namespace {

std::size_t vertex_ref(const PlumbingGraph& g, const json& j) {
  const auto v = g.index_of(j.get<std::string>());
  if (!v) throw DomainError("unknown vertex id '" + j.get<std::string>() + "'");
  return *v;
}

json ids(const PlumbingGraph& g, const std::vector<std::size_t>& vs) {
  json out = json::array();
  for (std::size_t v : vs) out.push_back(g.id(v));
  return out;
}

std::vector<std::size_t> refs(const PlumbingGraph& g, const json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(vertex_ref(g, x));
  return out;
}

std::string sign_string(EdgeSign s) { return std::string(1, sign_char(s)); }

EdgeSign sign_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "+") return EdgeSign::Positive;
  if (s == "-") return EdgeSign::Negative;
  throw DomainError("sign must be '+' or '-'");
}

template <typename Enum, std::size_t N>
Enum enum_from(const json& j, const std::array<Enum, N>& all) {
  const auto s = j.get<std::string>();
  for (Enum e : all) {
    if (to_string(e) == s) return e;
  }
  throw DomainError("unknown value '" + s + "'");
}

constexpr std::array kViolationKinds{ViolationKind::BadVertex, ViolationKind::ValenceExceeded,
                                     ViolationKind::Disconnected, ViolationKind::LoopOrMultiEdge};
constexpr std::array kEdgeKinds{EdgeKind::Horizontal, EdgeKind::Vertical, EdgeKind::Curved};
constexpr std::array kLinkKinds{LinkKind::Horizontal, LinkKind::Vertical, LinkKind::ThroughHandle};
constexpr std::array kSlideKinds{SlideKind::OverHandle, SlideKind::UnknotOverHandle, SlideKind::BandOverHandle,
                                 SlideKind::CrossingFix};
constexpr std::array kPartKinds{PartKind::Cluster, PartKind::Tree};

json slides_to_json(const std::vector<Slide>& slides) {
  json out = json::array();
  for (const Slide& s : slides) out.push_back({{"kind", to_string(s.kind)}, {"handle", s.handle}});
  return out;
}

std::vector<Slide> slides_from_json(const json& j) {
  std::vector<Slide> out;
  for (const auto& s : j) out.push_back({enum_from(s.at("kind"), kSlideKinds), s.at("handle").get<std::size_t>()});
  return out;
}

}  // namespace

json integer_to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return ContinuedFraction::parse(j.get<std::string>()).coefficients.at(0);
  throw DomainError("expected an integer");
}

void to_json(json& j, const PlumbingGraph& g) {
  j = json::object();
  j["vertices"] = json::array();
  for (const Vertex& v : g.vertices()) j["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    j["edges"].push_back({{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"sign", sign_string(e.sign)}});
  }
}

void from_json(const json& j, PlumbingGraph& g) {
  g = PlumbingGraph();
  for (const auto& v : j.at("vertices")) g.add_vertex(v.at("id").get<std::string>(), v.at("weight").get<std::int64_t>());
  for (const auto& e : j.at("edges")) {
    g.add_edge(e.at("u").get<std::string>(), e.at("v").get<std::string>(), sign_from(e.at("sign")));
  }
}

void to_json(json& j, const ValidationReport& r) {
  j = json::object();
  j["ok"] = r.ok();
  j["violations"] = json::array();
  for (const Violation& v : r.violations) {
    j["violations"].push_back({{"vertex", v.vertex}, {"kind", to_string(v.kind)}, {"detail", v.detail}});
  }
}

void from_json(const json& j, ValidationReport& r) {
  r.violations.clear();
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({v.at("vertex").get<std::string>(), enum_from(v.at("kind"), kViolationKinds),
                            v.at("detail").get<std::string>()});
  }
}

void to_json(json& j, const Fraction& f) { j = f.str(); }
void from_json(const json& j, Fraction& f) { f = Fraction::parse(j.get<std::string>()); }

void to_json(json& j, const ContinuedFraction& c) {
  j = json::array();
  for (const Integer& a : c.coefficients) j.push_back(integer_to_json(a));
}

void from_json(const json& j, ContinuedFraction& c) {
  c.coefficients.clear();
  for (const auto& a : j) c.coefficients.push_back(integer_from_json(a));
}

void to_json(json& j, const GluingMatrix& m) {
  j = json::array({json::array({integer_to_json(m.at(0, 0)), integer_to_json(m.at(0, 1))}),
                   json::array({integer_to_json(m.at(1, 0)), integer_to_json(m.at(1, 1))})});
}

void from_json(const json& j, GluingMatrix& m) {
  m = GluingMatrix(integer_from_json(j.at(0).at(0)), integer_from_json(j.at(0).at(1)), integer_from_json(j.at(1).at(0)),
                   integer_from_json(j.at(1).at(1)));
}

void to_json(json& j, const ChainIdentityReport& r) {
  j = json::object();
  j["chain"] = r.chain;
  j["lhs"] = r.lhs;
  j["stated"] = r.stated;
  j["stated_value"] = r.stated_value ? json(*r.stated_value) : json(nullptr);
  j["stated_holds"] = r.stated_holds;
  j["reconciled"] = r.reconciled;
  j["reconciled_value"] = r.reconciled_value ? json(*r.reconciled_value) : json(nullptr);
  j["reconciled_holds"] = r.reconciled_holds;
  j["lhs_expansion"] = r.lhs_expansion ? json(*r.lhs_expansion) : json(nullptr);
}

void from_json(const json& j, ChainIdentityReport& r) {
  r.chain = j.at("chain").get<ContinuedFraction>();
  r.lhs = j.at("lhs").get<Fraction>();
  r.stated = j.at("stated").get<ContinuedFraction>();
  r.stated_value = j.at("stated_value").is_null() ? std::nullopt : std::optional(j.at("stated_value").get<Fraction>());
  r.stated_holds = j.at("stated_holds").get<bool>();
  r.reconciled = j.at("reconciled").get<ContinuedFraction>();
  r.reconciled_value =
      j.at("reconciled_value").is_null() ? std::nullopt : std::optional(j.at("reconciled_value").get<Fraction>());
  r.reconciled_holds = j.at("reconciled_holds").get<bool>();
  r.lhs_expansion =
      j.at("lhs_expansion").is_null() ? std::nullopt : std::optional(j.at("lhs_expansion").get<ContinuedFraction>());
}

void to_json(json& j, const PlanarEmbedding& e) {
  j = json::object();
  j["rotation"] = e.rotation;
  j["faces"] = json::array();
  for (const Face& f : e.faces) j["faces"].push_back({{"vertices", f.vertices}, {"edges", f.edges}});
  j["outer_face"] = e.outer_face;
}

void from_json(const json& j, PlanarEmbedding& e) {
  e.rotation = j.at("rotation").get<std::vector<std::vector<std::size_t>>>();
  e.faces.clear();
  for (const auto& f : j.at("faces")) {
    e.faces.push_back({f.at("vertices").get<std::vector<std::size_t>>(), f.at("edges").get<std::vector<std::size_t>>()});
  }
  e.outer_face = j.at("outer_face").get<std::size_t>();
}

void to_json(json& j, const DualGraph& d) {
  j = json::object();
  j["face_count"] = d.face_count;
  j["outer"] = d.outer;
  j["edges"] = json::array();
  for (const DualEdge& e : d.edges) j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"primal", e.primal}});
}

void from_json(const json& j, DualGraph& d) {
  d.face_count = j.at("face_count").get<std::size_t>();
  d.outer = j.at("outer").get<std::size_t>();
  d.edges.clear();
  for (const auto& e : j.at("edges")) {
    d.edges.push_back({e.at("a").get<std::size_t>(), e.at("b").get<std::size_t>(), e.at("primal").get<std::size_t>()});
  }
}

void to_json(json& j, const HamPath& p) { j = {{"faces", p.faces}, {"crossed", p.crossed}}; }

void from_json(const json& j, HamPath& p) {
  p.faces = j.at("faces").get<std::vector<std::size_t>>();
  p.crossed = j.at("crossed").get<std::vector<std::size_t>>();
}

void to_json(json& j, const WrappedForm& w) {
  const PlumbingGraph& g = w.graph;
  j = json::object();
  j["graph"] = g;
  j["rows"] = json::array();
  for (const Row& r : w.rows) j["rows"].push_back({{"level", r.level}, {"vertices", ids(g, r.vertices)}});
  j["coordinates"] = json::object();
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    for (std::size_t c = 0; c < w.rows[r].vertices.size(); ++c) j["coordinates"][g.id(w.rows[r].vertices[c])] = {r, c};
  }
  j["edges"] = json::array();
  for (const WrappedEdge& e : w.edges) {
    const Edge& edge = g.edge(e.edge);
    j["edges"].push_back({{"edge", e.edge},
                          {"u", g.id(edge.u)},
                          {"v", g.id(edge.v)},
                          {"sign", sign_string(edge.sign)},
                          {"kind", to_string(e.kind)},
                          {"nesting", e.nesting ? json(*e.nesting) : json(nullptr)}});
  }
  j["curved"] = w.curved;
  j["innermost_cycle"] = ids(g, w.innermost_cycle);
}

void from_json(const json& j, WrappedForm& w) {
  w.graph = j.at("graph").get<PlumbingGraph>();
  const PlumbingGraph& g = w.graph;
  w.rows.clear();
  for (const auto& r : j.at("rows")) w.rows.push_back({r.at("level").get<std::size_t>(), refs(g, r.at("vertices"))});
  w.edges.clear();
  for (const auto& e : j.at("edges")) {
    const auto& n = e.at("nesting");
    w.edges.push_back({e.at("edge").get<std::size_t>(), enum_from(e.at("kind"), kEdgeKinds),
                       n.is_null() ? std::nullopt : std::optional(n.get<std::size_t>())});
  }
  w.curved = j.at("curved").get<std::vector<std::size_t>>();
  w.innermost_cycle = refs(g, j.at("innermost_cycle"));
}

void to_json(json& j, const HandlebodyDiagram& h) {
  const PlumbingGraph& g = h.graph;
  j = json::object();
  j["graph"] = g;
  j["one_handles"] = json::array();
  for (const OneHandle& o : h.one_handles) {
    j["one_handles"].push_back({{"id", o.id},
                                {"edge", o.edge},
                                {"cluster", o.cluster},
                                {"level", o.level},
                                {"carrier", g.id(o.carrier)},
                                {"partner", g.id(o.partner)},
                                {"protrusion", o.protrusion}});
  }
  j["two_handles"] = json::array();
  for (const TwoHandle& t : h.two_handles) {
    json links = json::array();
    for (const Link& l : t.links) {
      links.push_back({{"to", g.id(l.to)},
                       {"sign", sign_string(l.sign)},
                       {"kind", to_string(l.kind)},
                       {"handle", l.handle ? json(*l.handle) : json(nullptr)}});
    }
    j["two_handles"].push_back({{"id", g.id(t.vertex)},
                                {"framing", t.framing},
                                {"passes", t.passes},
                                {"links", links},
                                {"protrusions", t.protrusions},
                                {"slides", slides_to_json(t.slides)},
                                {"placement",
                                 {{"part", to_string(t.placement.part)},
                                  {"index", t.placement.index},
                                  {"row", t.placement.row},
                                  {"column", t.placement.column},
                                  {"level", t.placement.level}}}});
  }
}

void from_json(const json& j, HandlebodyDiagram& h) {
  h.graph = j.at("graph").get<PlumbingGraph>();
  const PlumbingGraph& g = h.graph;
  h.one_handles.clear();
  for (const auto& o : j.at("one_handles")) {
    h.one_handles.push_back({o.at("id").get<std::size_t>(), o.at("edge").get<std::size_t>(),
                             o.at("cluster").get<std::size_t>(), o.at("level").get<std::size_t>(),
                             vertex_ref(g, o.at("carrier")), vertex_ref(g, o.at("partner")),
                             o.at("protrusion").get<bool>()});
  }
  h.two_handles.clear();
  for (const auto& t : j.at("two_handles")) {
    TwoHandle out;
    out.vertex = vertex_ref(g, t.at("id"));
    out.framing = t.at("framing").get<std::int64_t>();
    out.passes = t.at("passes").get<std::vector<std::size_t>>();
    for (const auto& l : t.at("links")) {
      const auto& handle = l.at("handle");
      out.links.push_back({vertex_ref(g, l.at("to")), sign_from(l.at("sign")), enum_from(l.at("kind"), kLinkKinds),
                           handle.is_null() ? std::nullopt : std::optional(handle.get<std::size_t>())});
    }
    out.protrusions = t.at("protrusions").get<std::vector<std::size_t>>();
    out.slides = slides_from_json(t.at("slides"));
    const auto& p = t.at("placement");
    out.placement = {enum_from(p.at("part"), kPartKinds), p.at("index").get<std::size_t>(), p.at("row").get<std::size_t>(),
                     p.at("column").get<std::size_t>(), p.at("level").get<std::size_t>()};
    h.two_handles.push_back(std::move(out));
  }
}

void to_json(json& j, const LegendrianDiagram& d) {
  to_json(j, d.diagram);
  for (std::size_t v = 0; v < d.unknots.size(); ++v) {
    const LegendrianUnknot& k = d.unknots[v];
    json& t = j["two_handles"][v];
    t["tb"] = k.tb;
    t["rot"] = k.rot;
    t["stabilizations"] = {{"left", k.stabilization.left}, {"right", k.stabilization.right}};
    t["legendrian_slides"] = slides_to_json(k.slides);
  }
}

void from_json(const json& j, LegendrianDiagram& d) {
  from_json(j, d.diagram);
  d.unknots.clear();
  for (const auto& t : j.at("two_handles")) {
    const auto& s = t.at("stabilizations");
    d.unknots.push_back({t.at("tb").get<std::int64_t>(), t.at("rot").get<std::int64_t>(),
                         {s.at("left").get<std::int64_t>(), s.at("right").get<std::int64_t>()},
                         slides_from_json(t.at("legendrian_slides"))});
  }
}

void to_json(json& j, const FamilyY& y) {
  j = json::object();
  j["chain"] = y.chain;
  j["legs"] = json::array();
  for (const auto& leg : y.legs) j["legs"].push_back(leg);
}

void from_json(const json& j, FamilyY& y) {
  y.chain = j.at("chain").get<ContinuedFraction>();
  const auto& legs = j.at("legs");
  if (legs.size() != 4) throw DomainError("family Y needs exactly four legs");
  for (std::size_t i = 0; i < 4; ++i) y.legs[i] = legs.at(i).get<ContinuedFraction>();
}

void to_json(json& j, const TwistingAssignment& a) {
  j = json::object();
  j["chain"] = sign_string(a.chain);
  j["first_blocks"] = json::array();
  for (EdgeSign s : a.first_blocks) j["first_blocks"].push_back(sign_string(s));
  j["later_blocks"] = a.later_blocks;
}

void from_json(const json& j, TwistingAssignment& a) {
  a.chain = sign_from(j.at("chain"));
  for (std::size_t i = 0; i < 4; ++i) {
    a.first_blocks[i] = sign_from(j.at("first_blocks").at(i));
    a.later_blocks[i] = j.at("later_blocks").at(i).get<std::vector<std::size_t>>();
  }
}

json tori_to_json(const PlumbingGraph& g, const std::vector<TorusClass>& tori) {
  json out = json::array();
  for (const TorusClass& t : tori) out.push_back({{"path", ids(g, t.path)}, {"edges", t.edges}});
  return out;
}

std::vector<TorusClass> tori_from_json(const PlumbingGraph& g, const json& j) {
  std::vector<TorusClass> out;
  for (const auto& t : j) out.push_back({refs(g, t.at("path")), t.at("edges").get<std::vector<std::size_t>>()});
  return out;
}

json decomposition_to_json(const PlumbingGraph& g, const Decomposition& d) {
  json out = json::object();
  out["clusters"] = json::array();
  for (const Cluster& c : d.clusters) out["clusters"].push_back({{"vertices", ids(g, c.vertices)}, {"edges", c.edges}});
  out["trees"] = json::array();
  for (const Tree& t : d.trees) {
    json attachments = json::array();
    for (const Attachment& a : t.attachments) attachments.push_back({{"vertex", g.id(a.vertex)}, {"cluster", a.cluster}});
    out["trees"].push_back({{"vertices", ids(g, t.vertices)}, {"edges", t.edges}, {"attachments", attachments}});
  }
  out["connectors"] = json::array();
  for (const Connector& c : d.connectors) out["connectors"].push_back({{"tree", c.tree}, {"path", ids(g, c.path)}});
  return out;
}

Decomposition decomposition_from_json(const PlumbingGraph& g, const json& j) {
  Decomposition d;
  for (const auto& c : j.at("clusters")) {
    d.clusters.push_back({refs(g, c.at("vertices")), c.at("edges").get<std::vector<std::size_t>>()});
  }
  for (const auto& t : j.at("trees")) {
    Tree tree{refs(g, t.at("vertices")), t.at("edges").get<std::vector<std::size_t>>(), {}};
    for (const auto& a : t.at("attachments")) {
      tree.attachments.push_back({vertex_ref(g, a.at("vertex")), a.at("cluster").get<std::size_t>()});
    }
    d.trees.push_back(std::move(tree));
  }
  for (const auto& c : j.at("connectors")) d.connectors.push_back({c.at("tree").get<std::size_t>(), refs(g, c.at("path"))});
  return d;
}

}  // namespace plumbstein
