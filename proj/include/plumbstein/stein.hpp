#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "plumbstein/integer.hpp"
#include "plumbstein/plumbing.hpp"
#include "plumbstein/wrap.hpp"

namespace plumbstein {

enum class LinkKind { Horizontal, Vertical, ThroughHandle };

std::string_view to_string(LinkKind k);

/// Clasp between two 2-handle attaching circles, one per plumbing edge.
/// The sign is the edge sign; ThroughHandle links run through `handle`.
struct Link {
  std::size_t to;
  EdgeSign sign;
  LinkKind kind;
  std::optional<std::size_t> handle;

  bool operator==(const Link&) const = default;
};

enum class SlideKind {
  /// Upper unknot of a positive vertical clasp slides over a lower 1-handle.
  OverHandle,
  /// Unknot running through two 1-handles slides over the outer one.
  UnknotOverHandle,
  /// Band from a protruding unknot slides over its 1-handle.
  BandOverHandle,
  /// Crossing of the two wrapped K3,3 edges removed by a slide.
  CrossingFix,
};

std::string_view to_string(SlideKind k);

struct Slide {
  SlideKind kind;
  std::size_t handle;

  bool operator==(const Slide&) const = default;
};

/// 1-handle for one curved edge. The carrier is the endpoint whose unknot
/// runs through the handle; `protrusion` marks a carrier that is not at the
/// end of its row and so reaches the handle through a vertical band.
struct OneHandle {
  std::size_t id;
  std::size_t edge;
  std::size_t cluster;
  std::size_t level;
  std::size_t carrier;
  std::size_t partner;
  bool protrusion = false;

  bool operator==(const OneHandle&) const = default;
};

enum class PartKind { Cluster, Tree };

std::string_view to_string(PartKind k);

/// Global row (clusters stacked bottom to top, then trees), column within
/// the row, and the face level of the row inside its cluster.
struct Placement {
  PartKind part;
  std::size_t index;
  std::size_t row;
  std::size_t column;
  std::size_t level;

  bool operator==(const Placement&) const = default;
};

struct TwoHandle {
  std::size_t vertex;
  std::int64_t framing;
  /// 1-handles this unknot runs through, innermost first (at most two).
  std::vector<std::size_t> passes;
  std::vector<Link> links;
  /// 1-handles from which this unknot protrudes as a half unknot.
  std::vector<std::size_t> protrusions;
  std::vector<Slide> slides;
  Placement placement;

  bool operator==(const TwoHandle&) const = default;
};

struct HandlebodyDiagram {
  PlumbingGraph graph;
  std::vector<OneHandle> one_handles;
  /// One per graph vertex, in vertex order.
  std::vector<TwoHandle> two_handles;

  /// Framings on the diagonal, clasp signs off the diagonal.
  IntMatrix linking_matrix() const;
  bool operator==(const HandlebodyDiagram&) const = default;
};

/// Throws DomainError unless is_wrapped(w).
HandlebodyDiagram build_handlebody(const WrappedForm& w);

/// Fixed wrapped layout of K3,3: the part containing vertex 0 is (a, b, c),
/// the other (d, e, f), each in vertex order. Rows [d, a, e, c] and [b, f];
/// curved edges d-c, b-f, a-f, b-e from the inside out. The crossing of a-f
/// with b-e is recorded as a slide of b over the second outermost 1-handle.
/// Throws DomainError if g is not K3,3.
HandlebodyDiagram build_k33(const PlumbingGraph& g);

/// Clusters are wrapped (or laid out as K3,3) and stacked in order; tree
/// vertices follow as plain linked unknots. Throws UnsupportedShape on
/// valence >= 4 or a nonplanar cluster other than K3,3.
HandlebodyDiagram assemble(const PlumbingGraph& g, const Decomposition& d);
HandlebodyDiagram assemble(const PlumbingGraph& g);

struct Stabilization {
  std::int64_t left = 0;
  std::int64_t right = 0;

  bool operator==(const Stabilization&) const = default;
};

struct LegendrianUnknot {
  std::int64_t tb;
  std::int64_t rot;
  Stabilization stabilization;
  std::vector<Slide> slides;

  bool operator==(const LegendrianUnknot&) const = default;
};

struct LegendrianDiagram {
  HandlebodyDiagram diagram;
  std::vector<LegendrianUnknot> unknots;

  bool operator==(const LegendrianDiagram&) const = default;
};

/// tb = -1 - (left + right), rot = left - right. Each weight -a needs
/// left + right = a - 2 (DomainError otherwise); weight -1 is
/// UnsupportedShape since no Legendrian unknot has tb = 0.
LegendrianDiagram legendrianize(const HandlebodyDiagram& h, const std::vector<Stabilization>& choice);

/// Stabilization giving rotation number `rot` on a vertex of weight -a.
Stabilization stabilization_for(std::int64_t weight, std::int64_t rot);

/// Rotation vectors with |rot_v| <= a_v - 2 and rot_v = a_v (mod 2), produced
/// lazily in lexicographic order.
class SteinEnumerator {
 public:
  explicit SteinEnumerator(const HandlebodyDiagram& h);

  Integer count() const;
  std::optional<std::vector<std::int64_t>> next();

 private:
  std::vector<std::int64_t> bounds_;
  std::vector<std::int64_t> current_;
  bool done_ = false;
};

std::vector<std::vector<std::int64_t>> enumerate_stein(const HandlebodyDiagram& h);

/// Product of (a_v - 1) over all vertices.
Integer lower_bound(const PlumbingGraph& g);

}  // namespace plumbstein
