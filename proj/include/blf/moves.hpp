#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "blf/diagram.hpp"

namespace blf {

/// Optional overrides for the strata a finger slide creates. Unset fields are
/// filled with the first choice that validates.
struct SlideData {
  std::optional<FiberDescription> bigon_fiber;
  std::optional<SurgeryDescriptor> crossed_surgery;  // on the crossed arc's middle piece
  std::optional<SurgeryDescriptor> tip_surgery;      // on the sliding arc's tip
};

/// One step of a slide path: the face to enter and, optionally, the edge or
/// circle to cross into it (default: the lowest-id curve separating the current
/// low face of the tip from `face`).
struct SlideStep {
  FaceId face;
  std::optional<CurveId> via;
};

/// Pushes a finger of `arc` in the direction of its arrow, across one curve per
/// step. `path[0]` must be the arc's low face; each later step creates two
/// double points. Returns the validated result.
/// Errors: ArrowViolation (path starts on the high side), NotAdjacent,
/// InvalidResult.
BlfDiagram slide_arc(const BlfDiagram& d, const CurveId& arc, const std::vector<SlideStep>& path,
                     const SlideData& data = {});

/// Removes a bigon bounded by two arcs between two double points. Legal when
/// at least one of the two arcs has its arrow pointing into the bigon.
/// Errors: NotAdjacent (not a bigon), IndexViolation, InvalidResult.
BlfDiagram r2_remove(const BlfDiagram& d, const FaceId& bigon);

/// Moves a Lefschetz point from the low face of `edge` to its high face, where
/// it gets `cycle` on `component` and the next free order.
/// Errors: NotAdjacent, LiftMismatch, InvalidResult.
BlfDiagram push_lefschetz(const BlfDiagram& d, const PointId& point, const CurveId& edge,
                          const ComponentId& component, const std::vector<std::int64_t>& cycle);

/// Placement of the Lefschetz point that replaces a cusp. Defaults: the cusp's
/// high face, the cusp surgery's component, cycle (1,1,0,...).
struct CuspPlacement {
  std::optional<ComponentId> component;
  std::optional<std::vector<std::int64_t>> cycle;
};

/// Smooths a cusp into a fold arc plus one Lefschetz point in the high face.
/// Errors: NotACusp, InvalidResult.
BlfDiagram cusp_modify(const BlfDiagram& d, const VertexId& cusp, const CuspPlacement& placement = {});

struct FlipParams {
  std::optional<ComponentId> component;  // component of the high face that gains a handle
  std::optional<FaceId> loop_face;       // name of the new region
  std::optional<CuspPlacement> first_cusp;
  std::optional<CuspPlacement> second_cusp;
};

/// The flip of generic maps: kinks `arc` into a loop protruding into its high
/// side, with two new cusps and one double point. The new region's fiber has
/// one more handle on the chosen component.
BlfDiagram generic_flip(const BlfDiagram& d, const CurveId& arc, const FlipParams& params = {});

/// generic_flip followed by cusp_modify on both new cusps:
/// +1 double point, +2 Lefschetz points.
BlfDiagram flip(const BlfDiagram& d, const CurveId& arc, const FlipParams& params = {});

struct SlipStep {
  enum class Kind { across, uncross };
  Kind kind = Kind::across;
  FaceId face;  // across: face to push the arc into; uncross: bigon to remove
  std::optional<CurveId> via;
};

struct SlipTraceEntry {
  std::string step;
  bool valid = false;
  std::int64_t euler = 0;
};

struct SlipResult {
  BlfDiagram diagram;
  std::vector<SlipTraceEntry> trace;
};

/// A long slide of `arc`: finger pushes and bigon removals in sequence, each
/// checked on its own. An empty path is the identity.
SlipResult slip(const BlfDiagram& d, const CurveId& arc, const std::vector<SlipStep>& path);

/// Turns a single embedded circle with connected outer fiber and two-component
/// inner fiber into a circle with connected fibers, via flip, flip, slip.
/// Errors: PreconditionViolated.
BlfDiagram connect_fibers(const BlfDiagram& d);

/// Fibration with `basepoints` exceptional sections. Errors: NotAPencil.
BlfDiagram blow_up(const BlfDiagram& d);

/// Inverse of blow_up. Errors: NoSections.
BlfDiagram blow_down(const BlfDiagram& d);

/// Euler characteristic of a pencil's total space.
std::int64_t pencil_euler(const BlfDiagram& d);

/// Smallest id `prefix` + n (n = 0, 1, ...) not in `taken`.
std::string fresh_id(const std::string& prefix, const std::set<std::string>& taken);

}  // namespace blf
