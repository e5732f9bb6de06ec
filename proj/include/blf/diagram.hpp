#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blf/arrangement.hpp"
#include "blf/fiber.hpp"
#include "blf/mcg.hpp"

namespace blf {

using PointId = std::string;

/// Fold data of one edge or circle. The arrow points from `high` to `low`;
/// `surgery` acts on the fiber over `high`.
struct Fold {
  FaceId high;
  FaceId low;
  SurgeryDescriptor surgery;

  bool operator==(const Fold&) const = default;
};

struct LefschetzPoint {
  PointId id;
  FaceId face;
  ComponentId component;
  std::int64_t order = 0;  // position in the face's monodromy factorization
  std::vector<std::int64_t> cycle;  // vanishing class, 2*genus coordinates

  bool operator==(const LefschetzPoint&) const = default;
};

/// Broken Lefschetz fibration (or pencil, when basepoints > 0) over S^2.
/// `sections` counts exceptional sections recorded by a blow-up.
struct BlfDiagram {
  ArrangementMap arrangement;
  std::map<FaceId, FiberDescription> fibers;
  std::map<CurveId, Fold> folds;
  std::map<PointId, LefschetzPoint> lefschetz;
  std::int64_t basepoints = 0;
  std::int64_t sections = 0;

  bool operator==(const BlfDiagram&) const = default;
};

enum class Severity { error, warning };

struct Issue {
  std::string code;  // V1..V7 for violations, W3/W6 for warnings
  Severity severity = Severity::error;
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const;
  std::vector<Issue> violations() const;
  std::vector<Issue> warnings() const;
};

ValidationReport validate(const BlfDiagram& d);

/// Throws Error(precondition_violated) carrying the first violation.
void require_valid(const BlfDiagram& d);

/// Traced faces with the face of the empty arrangement named after its fiber
/// record.
std::vector<TracedFace> faces_of(const BlfDiagram& d);

/// Side of `curve` that faces its fold's high face.
Side high_side(const BlfDiagram& d, const CurveId& curve);

struct Stratum {
  enum class Kind { face, lefschetz, fold, vertex };
  Kind kind = Kind::face;
  std::string id;
};

std::int64_t stratum_fiber_euler(const BlfDiagram& d, const Stratum& stratum);

/// Face around a double point that lies on the high side of both branches.
FaceId both_out_face(const BlfDiagram& d, const VertexId& v);

/// e(X) by additivity of compactly supported Euler characteristic over the
/// strata of the base. Throws Error(is_pencil) for pencils.
std::int64_t euler_characteristic(const BlfDiagram& d);

struct DiagramCounts {
  std::size_t faces = 0;
  std::size_t edges = 0;
  std::size_t circles = 0;
  std::size_t double_points = 0;
  std::size_t cusps = 0;
  std::size_t lefschetz = 0;
};

DiagramCounts counts(const BlfDiagram& d);

/// e(X) ≡ #Lefschetz + #cusps (mod 2).
bool parity_check(const BlfDiagram& d);

struct ConnectivityReport {
  std::map<FaceId, bool> face_connected;
  bool all_connected = true;
};

ConnectivityReport connectivity_report(const BlfDiagram& d);

/// Monodromy around the Lefschetz points of `face` lying on `component`, as a
/// twist word: the point of lowest order is attached first and acts first.
mcg::TwistWord face_monodromy(const BlfDiagram& d, const FaceId& face, const ComponentId& component,
                              mcg::Handedness lefschetz_handedness = mcg::Handedness::right);

}  // namespace blf
