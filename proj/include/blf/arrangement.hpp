#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace blf {

using VertexId = std::string;
using CurveId = std::string;  // edge or vertexless circle
using FaceId = std::string;

enum class VertexKind { double_point, cusp };

/// Side of an oriented curve piece: left or right of its direction of travel.
/// For a circle, left is the inside.
enum class Side { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

struct Vertex {
  VertexId id;
  VertexKind kind = VertexKind::double_point;

  bool operator==(const Vertex&) const = default;
};

int valence(VertexKind kind);

/// Attachment of an edge end to a vertex; `slot` indexes the counterclockwise
/// rotation at that vertex.
struct EdgeEnd {
  VertexId vertex;
  int slot = 0;

  bool operator==(const EdgeEnd&) const = default;
};

/// Arc of the round image between two vertices, oriented from ends[0] (tail) to
/// ends[1] (head). `left`/`right` name the faces on either side.
struct Edge {
  CurveId id;
  std::array<EdgeEnd, 2> ends;
  FaceId left;
  FaceId right;

  const FaceId& face(Side s) const { return s == Side::left ? left : right; }
  FaceId& face(Side s) { return s == Side::left ? left : right; }
  bool operator==(const Edge&) const = default;
};

struct Circle {
  CurveId id;
  FaceId left;  // inside
  FaceId right;

  const FaceId& face(Side s) const { return s == Side::left ? left : right; }
  FaceId& face(Side s) { return s == Side::left ? left : right; }
  bool operator==(const Circle&) const = default;
};

/// Combinatorial planar map of the round image on the sphere. The rotation
/// system is carried by edge end slots; how components nest is carried by the
/// face names on curve sides.
struct ArrangementMap {
  std::map<VertexId, Vertex> vertices;
  std::map<CurveId, Edge> edges;
  std::map<CurveId, Circle> circles;

  bool empty() const { return vertices.empty() && edges.empty() && circles.empty(); }
  bool has_curve(const CurveId& id) const { return edges.count(id) || circles.count(id); }
  const FaceId& face(const CurveId& curve, Side side) const;
  FaceId& face(const CurveId& curve, Side side);

  bool operator==(const ArrangementMap&) const = default;
};

struct SideRef {
  CurveId curve;
  Side side = Side::left;

  auto operator<=>(const SideRef&) const = default;
};

/// One end of an edge seen from its vertex.
struct Dart {
  CurveId edge;
  int end = 0;  // 0 = tail at this vertex, 1 = head

  bool operator==(const Dart&) const = default;
};

/// Side of the dart's edge on the left when leaving the vertex along it.
inline Side left_of_outgoing(const Dart& d) { return d.end == 0 ? Side::left : Side::right; }
inline Side right_of_outgoing(const Dart& d) { return opposite(left_of_outgoing(d)); }

/// Darts indexed by rotation slot; throws Error(invalid_argument) if the
/// vertex or any slot is malformed.
std::vector<Dart> rotation(const ArrangementMap& a, const VertexId& v);

/// Checks ids, vertex valences and that every slot is used exactly once.
/// Returns human-readable problems; empty when well formed.
std::vector<std::string> structural_problems(const ArrangementMap& a);

using Circuit = std::vector<SideRef>;

struct TracedFace {
  FaceId label;  // empty only for the empty arrangement
  std::vector<Circuit> circuits;

  /// Compactly supported Euler characteristic of the open face.
  int euler_c() const { return 2 - static_cast<int>(circuits.size()); }
};

/// Boundary circuits with the face on their left, grouped into faces by label.
/// Faces are ordered by their lowest side, circuits likewise, and each circuit
/// starts at its lowest side. Throws Error(not_sphere) when some component is
/// not planar, when a circuit carries mixed labels, or when the labels do not
/// nest the components into a sphere.
std::vector<TracedFace> trace_faces(const ArrangementMap& a);

/// Connected components of the round image, each as its sorted curve ids.
std::vector<std::vector<CurveId>> curve_components(const ArrangementMap& a);

std::string to_string(VertexKind kind);
std::string to_string(Side side);

}  // namespace blf
