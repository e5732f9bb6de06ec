#include "blf/moves.hpp"

#include <algorithm>

#include "blf/error.hpp"

namespace blf {

std::string fresh_id(const std::string& prefix, const std::set<std::string>& taken) {
  for (std::size_t n = 0;; ++n) {
    std::string id = prefix + std::to_string(n);
    if (!taken.count(id)) return id;
  }
}

namespace {

template <class Map>
std::set<std::string> keys(const Map& m) {
  std::set<std::string> out;
  for (const auto& [k, _] : m) out.insert(k);
  return out;
}

std::set<std::string> curve_ids(const BlfDiagram& d) {
  auto out = keys(d.arrangement.edges);
  for (const auto& [k, _] : d.arrangement.circles) out.insert(k);
  for (const auto& [k, _] : d.folds) out.insert(k);
  return out;
}

// Shorter ids first, then lexicographic.
bool id_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

void check_result(const BlfDiagram& d, const std::string& move) {
  auto report = validate(d);
  if (!report.ok()) {
    const auto v = report.violations().front();
    throw Error(ErrorCode::invalid_result, move + " produced an invalid diagram: " + v.code + " " + v.subject +
                                               ": " + v.message);
  }
}

void require_input(const BlfDiagram& d, const std::string& move) {
  auto report = validate(d);
  if (!report.ok()) {
    const auto v = report.violations().front();
    throw Error(ErrorCode::precondition_violated,
                move + " needs a valid diagram: " + v.code + " " + v.subject + ": " + v.message);
  }
}

const FiberDescription& fiber_at(const BlfDiagram& d, const FaceId& f) {
  auto it = d.fibers.find(f);
  if (it == d.fibers.end()) throw Error(ErrorCode::unknown_reference, "no face " + f);
  return it->second;
}

const Fold& fold_at(const BlfDiagram& d, const CurveId& c) {
  auto it = d.folds.find(c);
  if (it == d.folds.end()) throw Error(ErrorCode::unknown_reference, "no curve " + c);
  return it->second;
}

std::int64_t next_order(const BlfDiagram& d, const FaceId& face) {
  std::int64_t next = 0;
  for (const auto& [_, p] : d.lefschetz) {
    if (p.face == face) next = std::max(next, p.order + 1);
  }
  return next;
}

Edge reversed(Edge e) {
  std::swap(e.ends[0], e.ends[1]);
  std::swap(e.left, e.right);
  return e;
}

// Re-expresses `s`, a surgery on `from`, on the equivalent fiber `to`.
SurgeryDescriptor transport(SurgeryDescriptor s, const FiberDescription& from, const FiberDescription& to) {
  if (auto m = component_matching(from, to); m && m->count(s.component)) s.component = m->at(s.component);
  return s;
}

// Renames face `from` to `to` everywhere. The fibers must be equivalent;
// component ids of `from` are rewritten to those of `to`, and Lefschetz orders
// of `from` are appended after those of `to`.
void merge_faces(BlfDiagram& d, const FaceId& keep, const FaceId& drop) {
  const FiberDescription& fk = fiber_at(d, keep);
  const FiberDescription& fd = fiber_at(d, drop);
  auto matching = component_matching(fd, fk);
  if (!matching) {
    throw Error(ErrorCode::invalid_result, "cannot merge faces " + keep + " (" + to_string(fk) + ") and " + drop +
                                               " (" + to_string(fd) + ")");
  }
  const std::int64_t shift = next_order(d, keep);
  for (auto& [_, e] : d.arrangement.edges) {
    if (e.left == drop) e.left = keep;
    if (e.right == drop) e.right = keep;
  }
  for (auto& [_, c] : d.arrangement.circles) {
    if (c.left == drop) c.left = keep;
    if (c.right == drop) c.right = keep;
  }
  for (auto& [_, f] : d.folds) {
    if (f.high == drop) {
      f.high = keep;
      f.surgery.component = matching->at(f.surgery.component);
    }
    if (f.low == drop) f.low = keep;
  }
  for (auto& [_, p] : d.lefschetz) {
    if (p.face != drop) continue;
    p.face = keep;
    p.component = matching->at(p.component);
    p.order += shift;
  }
  d.fibers.erase(drop);
}

}  // namespace

BlfDiagram blow_up(const BlfDiagram& d) {
  if (d.basepoints <= 0) throw Error(ErrorCode::not_a_pencil, "diagram has no base points");
  BlfDiagram out = d;
  out.sections += out.basepoints;
  out.basepoints = 0;
  return out;
}

BlfDiagram blow_down(const BlfDiagram& d) {
  if (d.sections <= 0) throw Error(ErrorCode::no_sections, "diagram records no exceptional sections");
  BlfDiagram out = d;
  out.basepoints += out.sections;
  out.sections = 0;
  return out;
}

std::int64_t pencil_euler(const BlfDiagram& d) {
  const std::int64_t m = d.basepoints;
  return euler_characteristic(blow_up(d)) - m;
}

BlfDiagram push_lefschetz(const BlfDiagram& d, const PointId& point, const CurveId& edge,
                          const ComponentId& component, const std::vector<std::int64_t>& cycle) {
  require_input(d, "push");
  auto pit = d.lefschetz.find(point);
  if (pit == d.lefschetz.end()) throw Error(ErrorCode::unknown_reference, "no Lefschetz point " + point);
  const Fold& fold = fold_at(d, edge);
  const LefschetzPoint& p = pit->second;
  if (p.face != fold.low) {
    throw Error(ErrorCode::not_adjacent, "point " + point + " lies in " + p.face + ", not in the low face " +
                                             fold.low + " of " + edge);
  }
  const FiberDescription& high = fiber_at(d, fold.high);
  const FiberComponent* target = high.find(component);
  if (target == nullptr) {
    throw Error(ErrorCode::lift_mismatch, "no component " + component + " over " + fold.high);
  }
  if (cycle.size() != static_cast<std::size_t>(2 * target->genus)) {
    throw Error(ErrorCode::lift_mismatch, "lifted cycle needs " + std::to_string(2 * target->genus) +
                                              " coordinates, got " + std::to_string(cycle.size()));
  }
  // The low component must be what `component` becomes after the fold surgery.
  const FiberDescription surgered = apply_surgery(high, fold.surgery);
  auto matching = component_matching(surgered, fiber_at(d, fold.low));
  bool lifts = false;
  for (const auto& [from, to] : matching.value_or(std::map<ComponentId, ComponentId>{})) {
    if (to != p.component) continue;
    const auto [a, b] = derived_ids(fold.surgery.component);
    const bool derived = fold.surgery.kind == SurgeryDescriptor::Kind::separating && (from == a || from == b);
    lifts = (derived ? fold.surgery.component : from) == component;
  }
  if (!lifts) {
    throw Error(ErrorCode::lift_mismatch, "component " + component + " over " + fold.high +
                                              " does not lie over component " + p.component + " of " + p.face);
  }
  BlfDiagram out = d;
  LefschetzPoint& q = out.lefschetz.at(point);
  q.order = next_order(d, fold.high);
  q.face = fold.high;
  q.component = component;
  q.cycle = cycle;
  check_result(out, "push");
  return out;
}

BlfDiagram cusp_modify(const BlfDiagram& d, const VertexId& cusp, const CuspPlacement& placement) {
  auto vit = d.arrangement.vertices.find(cusp);
  if (vit == d.arrangement.vertices.end()) throw Error(ErrorCode::unknown_reference, "no vertex " + cusp);
  if (vit->second.kind != VertexKind::cusp) throw Error(ErrorCode::not_a_cusp, cusp + " is a double point");
  require_input(d, "cusp-modify");

  BlfDiagram out = d;
  auto& a = out.arrangement;
  const auto darts = rotation(a, cusp);
  const Fold fold = fold_at(d, darts[0].edge);
  if (darts[0].edge == darts[1].edge) {
    const Edge e = a.edges.at(darts[0].edge);
    a.edges.erase(e.id);
    a.circles.emplace(e.id, Circle{e.id, e.left, e.right});
  } else {
    // Travel into the cusp along the first arc and out along the second.
    const Edge p = a.edges.at(darts[0].edge);
    const Edge q = a.edges.at(darts[1].edge);
    const Edge pin = darts[0].end == 1 ? p : reversed(p);
    const Edge qout = darts[1].end == 0 ? q : reversed(q);
    Edge merged{pin.id, {pin.ends[0], qout.ends[1]}, pin.left, pin.right};
    const bool keep_p = id_less(p.id, q.id);
    merged.id = keep_p ? p.id : q.id;
    const bool forward = keep_p ? darts[0].end == 1 : darts[1].end == 0;
    if (!forward) merged = reversed(merged);
    a.edges.erase(p.id);
    a.edges.erase(q.id);
    out.folds.erase(keep_p ? q.id : p.id);
    a.edges.emplace(merged.id, merged);
  }
  a.vertices.erase(cusp);

  const FiberDescription& high = fiber_at(d, fold.high);
  const ComponentId comp = placement.component.value_or(fold.surgery.component);
  const FiberComponent* c = high.find(comp);
  if (c == nullptr) throw Error(ErrorCode::invalid_result, "no component " + comp + " over " + fold.high);
  std::vector<std::int64_t> cycle(2 * c->genus, 0);
  if (placement.cycle) {
    cycle = *placement.cycle;
  } else if (c->genus > 0) {
    cycle[0] = cycle[1] = 1;
  }
  const PointId id = fresh_id("p", keys(d.lefschetz));
  out.lefschetz.emplace(id, LefschetzPoint{id, fold.high, comp, next_order(d, fold.high), cycle});
  check_result(out, "cusp-modify");
  return out;
}

namespace {

struct Stub {
  VertexId vertex;
  int slot;
};

// Joins the two edge ends sitting at `s` and `t` (on vertices about to be
// deleted) into one curve.
// Joins the edges ending at stubs `s` and `t`. `via` names a removed piece
// that ran from s to t (forward) or back; it competes for the surviving id.
void glue(BlfDiagram& d, const Stub& s, const Stub& t, const CurveId& via = {}, bool via_forward = true) {
  auto& a = d.arrangement;
  auto find = [&](const Stub& st) -> Dart {
    for (const auto& [id, e] : a.edges) {
      for (int end = 0; end < 2; ++end) {
        if (e.ends[end].vertex == st.vertex && e.ends[end].slot == st.slot) return {id, end};
      }
    }
    throw Error(ErrorCode::invalid_result, "dangling stub at " + st.vertex);
  };
  auto rename = [&](const CurveId& from, const CurveId& to) {
    d.folds[to] = d.folds.at(from);
    d.folds.erase(from);
  };
  const Dart ds = find(s);
  const Dart dt = find(t);
  if (ds.edge == dt.edge) {
    Edge e = a.edges.at(ds.edge);
    a.edges.erase(e.id);
    if (!via.empty() && id_less(via, e.id)) {
      rename(e.id, via);
      e.id = via;
    }
    a.circles.emplace(e.id, Circle{e.id, e.left, e.right});
    return;
  }
  const Edge p = a.edges.at(ds.edge);
  const Edge q = a.edges.at(dt.edge);
  const Edge pin = ds.end == 1 ? p : reversed(p);
  const Edge qout = dt.end == 0 ? q : reversed(q);
  const bool keep_p = id_less(p.id, q.id);
  Edge merged{keep_p ? p.id : q.id, {pin.ends[0], qout.ends[1]}, pin.left, pin.right};
  a.edges.erase(p.id);
  a.edges.erase(q.id);
  d.folds.erase(keep_p ? q.id : p.id);
  if (!via.empty() && id_less(via, merged.id)) {
    rename(merged.id, via);
    merged.id = via;
    if (!via_forward) merged = reversed(merged);
  } else if (!(keep_p ? ds.end == 1 : dt.end == 0)) {
    merged = reversed(merged);
  }
  a.edges.emplace(merged.id, merged);
}

}  // namespace

BlfDiagram r2_remove(const BlfDiagram& d, const FaceId& bigon) {
  require_input(d, "r2-remove");
  const TracedFace* face = nullptr;
  const auto faces = faces_of(d);
  for (const auto& f : faces) {
    if (f.label == bigon) face = &f;
  }
  if (face == nullptr) throw Error(ErrorCode::unknown_reference, "no face " + bigon);
  const auto& arr = d.arrangement;
  auto not_bigon = [&](const std::string& why) {
    return Error(ErrorCode::not_adjacent, bigon + " is not a bigon: " + why);
  };
  if (face->circuits.size() != 1 || face->circuits[0].size() != 2) {
    throw not_bigon("needs one boundary circuit of two arcs");
  }
  const CurveId x = face->circuits[0][0].curve;
  const CurveId y = face->circuits[0][1].curve;
  if (x == y || !arr.edges.count(x) || !arr.edges.count(y)) throw not_bigon("needs two distinct arcs");
  const Edge& ex = arr.edges.at(x);
  const VertexId u = ex.ends[0].vertex;
  const VertexId v = ex.ends[1].vertex;
  if (u == v) throw not_bigon("arcs must join two distinct vertices");
  for (const auto& w : {u, v}) {
    if (arr.vertices.at(w).kind != VertexKind::double_point) throw not_bigon("corners must be double points");
  }
  const auto& fx = fold_at(d, x);
  const auto& fy = fold_at(d, y);
  if (fx.low != bigon && fy.low != bigon) {
    throw Error(ErrorCode::index_violation,
                "both arrows on the boundary of " + bigon + " point out of it");
  }

  // At each corner the bigon is the quadrant q_s between slots s and s+1; the
  // face opposite it is q_{s+2}, and the stubs continuing x and y sit opposite.
  struct Corner {
    FaceId opposite;
    Stub x_stub;
    Stub y_stub;
  };
  auto corner = [&](const VertexId& w) {
    const auto darts = rotation(arr, w);
    for (int s = 0; s < 4; ++s) {
      const Dart& a = darts[s];
      const Dart& b = darts[(s + 1) % 4];
      if (arr.face(a.edge, left_of_outgoing(a)) != bigon) continue;
      if (!((a.edge == x && b.edge == y) || (a.edge == y && b.edge == x))) continue;
      const Dart& o = darts[(s + 2) % 4];
      const int sx = a.edge == x ? (s + 2) % 4 : (s + 3) % 4;
      const int sy = a.edge == x ? (s + 3) % 4 : (s + 2) % 4;
      return Corner{arr.face(o.edge, left_of_outgoing(o)), {w, sx}, {w, sy}};
    }
    throw not_bigon("arcs are not adjacent at " + w);
  };
  const Corner cu = corner(u);
  const Corner cv = corner(v);

  BlfDiagram out = d;
  out.arrangement.edges.erase(x);
  out.arrangement.edges.erase(y);
  out.folds.erase(x);
  out.folds.erase(y);
  out.fibers.erase(bigon);
  if (cu.opposite != cv.opposite) {
    const bool keep_u = id_less(cu.opposite, cv.opposite);
    merge_faces(out, keep_u ? cu.opposite : cv.opposite, keep_u ? cv.opposite : cu.opposite);
  }
  glue(out, cu.x_stub, cv.x_stub, x, ex.ends[0].vertex == u);
  const Edge& ey = arr.edges.at(y);
  glue(out, cu.y_stub, cv.y_stub, y, ey.ends[0].vertex == u);
  out.arrangement.vertices.erase(u);
  out.arrangement.vertices.erase(v);
  check_result(out, "r2-remove");
  return out;
}

namespace {

struct FlipOutcome {
  BlfDiagram diagram;
  VertexId first_cusp;
  VertexId second_cusp;
};

FlipOutcome flip_impl(const BlfDiagram& d, const CurveId& arc, const FlipParams& params) {
  require_input(d, "flip");
  const Fold fold = fold_at(d, arc);
  const FaceId p = fold.high;
  const FaceId q = fold.low;
  const FiberDescription& fp = fiber_at(d, p);
  const ComponentId k = params.component.value_or(fp.components().front().id);
  if (fp.find(k) == nullptr) {
    throw Error(ErrorCode::invalid_result, "no component " + k + " over the high face " + p + " of " + arc);
  }
  auto faces = keys(d.fibers);
  const FaceId loop = params.loop_face.value_or(fresh_id(p + ".", faces));
  if (faces.count(loop)) throw Error(ErrorCode::duplicate_id, "face " + loop + " already exists");
  std::vector<FiberComponent> comps = fp.components();
  for (auto& c : comps) {
    if (c.id == k) ++c.genus;
  }

  BlfDiagram out = d;
  auto& a = out.arrangement;
  auto vertices = keys(a.vertices);
  auto take = [](std::set<std::string>& taken, const std::string& prefix) {
    auto id = fresh_id(prefix, taken);
    taken.insert(id);
    return id;
  };
  const VertexId x = take(vertices, "v");
  const VertexId c1 = take(vertices, "v");
  const VertexId c2 = take(vertices, "v");
  auto curves = curve_ids(d);
  const CurveId la = take(curves, arc + ".");
  const CurveId lb = take(curves, arc + ".");
  const CurveId lc = take(curves, arc + ".");

  // Travel along the arc with its high side P on the left. The loop leaves the
  // crossing to the north-east and returns from the north-west.
  const bool forward = high_side(d, arc) == Side::left;
  if (auto it = a.edges.find(arc); it != a.edges.end()) {
    const Edge e = it->second;
    const CurveId out_id = take(curves, arc + ".");
    Edge in{forward ? arc : out_id, {forward ? e.ends[0] : e.ends[1], EdgeEnd{x, 2}}, p, q};
    Edge on{forward ? out_id : arc, {EdgeEnd{x, 3}, forward ? e.ends[1] : e.ends[0]}, p, q};
    if (!forward) {
      in = reversed(in);
      on = reversed(on);
    }
    a.edges.erase(arc);
    a.edges[in.id] = in;
    a.edges[on.id] = on;
    out.folds[out_id] = fold;
  } else {
    Edge e{arc, {EdgeEnd{x, 3}, EdgeEnd{x, 2}}, p, q};
    a.circles.erase(arc);
    a.edges[arc] = forward ? e : reversed(e);
  }
  a.vertices[x] = Vertex{x, VertexKind::double_point};
  a.vertices[c1] = Vertex{c1, VertexKind::cusp};
  a.vertices[c2] = Vertex{c2, VertexKind::cusp};
  a.edges[la] = Edge{la, {EdgeEnd{x, 0}, EdgeEnd{c1, 0}}, loop, p};
  a.edges[lb] = Edge{lb, {EdgeEnd{c1, 1}, EdgeEnd{c2, 0}}, loop, p};
  a.edges[lc] = Edge{lc, {EdgeEnd{c2, 1}, EdgeEnd{x, 1}}, loop, p};
  for (const auto& id : {la, lb, lc}) out.folds[id] = Fold{loop, p, SurgeryDescriptor::nonseparating(k)};
  out.fibers[loop] = FiberDescription(std::move(comps));
  check_result(out, "flip");
  return {std::move(out), c1, c2};
}

}  // namespace

BlfDiagram generic_flip(const BlfDiagram& d, const CurveId& arc, const FlipParams& params) {
  return flip_impl(d, arc, params).diagram;
}

BlfDiagram flip(const BlfDiagram& d, const CurveId& arc, const FlipParams& params) {
  auto r = flip_impl(d, arc, params);
  auto once = cusp_modify(r.diagram, r.first_cusp, params.first_cusp.value_or(CuspPlacement{}));
  return cusp_modify(once, r.second_cusp, params.second_cusp.value_or(CuspPlacement{}));
}

namespace {

// All sides on the boundary circuit through `start`, walking with the face on
// the left.
std::vector<SideRef> circuit_through(const ArrangementMap& a, const SideRef& start) {
  if (a.circles.count(start.curve)) return {start};
  std::vector<SideRef> out;
  CurveId cur = start.curve;
  int dir = start.side == Side::left ? 0 : 1;
  std::set<std::pair<CurveId, int>> seen;
  while (seen.insert({cur, dir}).second) {
    out.push_back({cur, dir == 0 ? Side::left : Side::right});
    const EdgeEnd& arrive = a.edges.at(cur).ends[dir == 0 ? 1 : 0];
    const auto darts = rotation(a, arrive.vertex);
    const int k = static_cast<int>(darts.size());
    const Dart& next = darts[(arrive.slot + k - 1) % k];
    cur = next.edge;
    dir = next.end == 0 ? 0 : 1;
  }
  return out;
}

struct FingerOutcome {
  BlfDiagram diagram;
  CurveId tip;
  FaceId bigon;
};

struct FingerFibers {
  FiberDescription bigon;
  SurgeryDescriptor mid;
  SurgeryDescriptor tip;
};

// Fiber data for the new bigon B and the two new fold pieces bounding it.
// When the crossed arc points away from the finger (high side L), crossing e
// then f is reordered to f' then e'. Otherwise B is the highest quadrant and
// gets one extra handle over H.
std::optional<FingerFibers> finger_fibers(const FiberDescription& fh, const FiberDescription& fl,
                                          const FiberDescription& fm, const SurgeryDescriptor& se,
                                          const SurgeryDescriptor& sf, bool f_high_is_l,
                                          const SlideData& data) {
  auto tip_for = [&](const FiberDescription& fb) -> std::optional<SurgeryDescriptor> {
    if (data.tip_surgery) return data.tip_surgery;
    for (const auto& s : applicable_surgeries(fb)) {
      if (equivalent(apply_surgery(fb, s), fm)) return s;
    }
    return std::nullopt;
  };
  if (data.bigon_fiber) {
    const FiberDescription& fb = *data.bigon_fiber;
    std::optional<SurgeryDescriptor> mid = data.crossed_surgery;
    const FiberDescription& from = f_high_is_l ? fh : fb;
    const FiberDescription& to = f_high_is_l ? fb : fh;
    if (!mid) {
      for (const auto& s : applicable_surgeries(from)) {
        if (equivalent(apply_surgery(from, s), to)) {
          mid = s;
          break;
        }
      }
    }
    auto tip = tip_for(fb);
    if (!mid || !tip) return std::nullopt;
    return FingerFibers{fb, *mid, *tip};
  }
  if (f_high_is_l) {
    const FiberDescription after_e = apply_surgery(fh, se);
    auto cp = commute_surgeries(fh, se, transport(sf, fl, after_e));
    if (!cp) return std::nullopt;
    const SurgeryDescriptor mid = data.crossed_surgery.value_or(cp->first);
    if (!is_applicable(fh, mid)) return std::nullopt;
    FiberDescription fb = apply_surgery(fh, mid);
    auto tip = data.tip_surgery ? data.tip_surgery : std::optional<SurgeryDescriptor>(cp->second);
    if (data.crossed_surgery) tip = tip_for(fb);
    if (!tip) return std::nullopt;
    return FingerFibers{std::move(fb), mid, *tip};
  }
  for (const auto& ha : handle_additions(fh)) {
    if (data.crossed_surgery && !(ha.undo == *data.crossed_surgery)) continue;
    if (auto tip = tip_for(ha.fiber)) return FingerFibers{ha.fiber, ha.undo, *tip};
  }
  return std::nullopt;
}

// Pushes a finger of `e` across `f`. Picture f horizontal with e's low face L
// below it and M above; the finger rises from e, crosses f at u (west) and v
// (east) and its tip bounds the new bigon B above f. Rotation slots at u and v
// are 0 = east, 1 = north, 2 = west, 3 = south.
FingerOutcome finger(const BlfDiagram& d, const CurveId& e_id, const CurveId& f_id, const SlideData& data) {
  const auto& arr = d.arrangement;
  if (e_id == f_id) throw Error(ErrorCode::not_adjacent, "an arc cannot be pushed across itself");
  const Fold fe = fold_at(d, e_id);
  const Fold ff = fold_at(d, f_id);
  const FaceId h = fe.high;
  const FaceId l = fe.low;
  Side f_l_side;
  if (arr.face(f_id, Side::left) == l) {
    f_l_side = Side::left;
  } else if (arr.face(f_id, Side::right) == l) {
    f_l_side = Side::right;
  } else {
    throw Error(ErrorCode::not_adjacent, f_id + " does not bound " + l + ", the low face of " + e_id);
  }
  const FaceId m = arr.face(f_id, opposite(f_l_side));
  const Side e_high = high_side(d, e_id);
  const Side f_high = high_side(d, f_id);
  const bool f_high_is_l = ff.high == l;

  bool split = false;
  for (const auto& s : circuit_through(arr, {e_id, opposite(e_high)})) {
    if (s.curve == f_id && s.side == f_l_side) split = true;
  }

  auto fibers = finger_fibers(fiber_at(d, h), fiber_at(d, l), fiber_at(d, m), fe.surgery, ff.surgery,
                              f_high_is_l, data);
  if (!fibers) {
    throw Error(ErrorCode::invalid_result, "no fiber data makes pushing " + e_id + " across " + f_id + " consistent");
  }

  auto faces = keys(d.fibers);
  auto vertices = keys(arr.vertices);
  auto curves = curve_ids(d);
  auto take = [](std::set<std::string>& taken, const std::string& prefix) {
    auto id = fresh_id(prefix, taken);
    taken.insert(id);
    return id;
  };
  const FaceId la = l;
  const FaceId lb = split ? take(faces, l + ".") : l;
  const FaceId b = take(faces, m + ".");
  const VertexId u = take(vertices, "v");
  const VertexId v = take(vertices, "v");

  BlfDiagram out = d;
  auto& a = out.arrangement;
  std::vector<Edge> f_pieces;
  CurveId f_mid;
  const bool f_east = f_l_side == Side::right;  // f travels west to east
  if (auto it = arr.edges.find(f_id); it != arr.edges.end()) {
    const Edge f = it->second;
    const CurveId p1 = take(curves, f_id + ".");
    const CurveId p2 = take(curves, f_id + ".");
    f_mid = p1;
    if (f_east) {
      f_pieces = {Edge{f_id, {f.ends[0], EdgeEnd{u, 2}}, m, la}, Edge{p1, {EdgeEnd{u, 0}, EdgeEnd{v, 2}}, b, h},
                  Edge{p2, {EdgeEnd{v, 0}, f.ends[1]}, m, lb}};
    } else {
      f_pieces = {Edge{f_id, {f.ends[0], EdgeEnd{v, 0}}, lb, m}, Edge{p1, {EdgeEnd{v, 2}, EdgeEnd{u, 0}}, h, b},
                  Edge{p2, {EdgeEnd{u, 2}, f.ends[1]}, la, m}};
    }
    a.edges.erase(f_id);
  } else {
    f_mid = take(curves, f_id + ".");
    if (f_east) {
      f_pieces = {Edge{f_mid, {EdgeEnd{u, 0}, EdgeEnd{v, 2}}, b, h}, Edge{f_id, {EdgeEnd{v, 0}, EdgeEnd{u, 2}}, m, l}};
    } else {
      f_pieces = {Edge{f_mid, {EdgeEnd{v, 2}, EdgeEnd{u, 0}}, h, b}, Edge{f_id, {EdgeEnd{u, 2}, EdgeEnd{v, 0}}, l, m}};
    }
    a.circles.erase(f_id);
  }

  std::vector<Edge> e_pieces;
  const CurveId tip = take(curves, e_id + ".");
  const bool clockwise = e_high == Side::right;  // the finger interior is on e's right
  if (auto it = arr.edges.find(e_id); it != arr.edges.end()) {
    const Edge e = it->second;
    const CurveId rest = take(curves, e_id + ".");
    if (clockwise) {
      e_pieces = {Edge{e_id, {e.ends[0], EdgeEnd{u, 3}}, la, h}, Edge{tip, {EdgeEnd{u, 1}, EdgeEnd{v, 1}}, m, b},
                  Edge{rest, {EdgeEnd{v, 3}, e.ends[1]}, lb, h}};
    } else {
      e_pieces = {Edge{e_id, {e.ends[0], EdgeEnd{v, 3}}, h, lb}, Edge{tip, {EdgeEnd{v, 1}, EdgeEnd{u, 1}}, b, m},
                  Edge{rest, {EdgeEnd{u, 3}, e.ends[1]}, h, la}};
    }
    a.edges.erase(e_id);
  } else {
    if (clockwise) {
      e_pieces = {Edge{e_id, {EdgeEnd{v, 3}, EdgeEnd{u, 3}}, l, h}, Edge{tip, {EdgeEnd{u, 1}, EdgeEnd{v, 1}}, m, b}};
    } else {
      e_pieces = {Edge{e_id, {EdgeEnd{u, 3}, EdgeEnd{v, 3}}, h, l}, Edge{tip, {EdgeEnd{v, 1}, EdgeEnd{u, 1}}, b, m}};
    }
    a.circles.erase(e_id);
  }
  a.vertices[u] = Vertex{u, VertexKind::double_point};
  a.vertices[v] = Vertex{v, VertexKind::double_point};
  for (const auto& piece : f_pieces) a.edges[piece.id] = piece;
  for (const auto& piece : e_pieces) a.edges[piece.id] = piece;

  if (split) {
    // The finger cuts L in two; everything on the circuit east of it is L_b.
    const CurveId east = f_east ? f_pieces.back().id : f_pieces.front().id;
    for (const auto& s : circuit_through(a, {east, f_l_side})) a.face(s.curve, s.side) = lb;
    out.fibers[lb] = fiber_at(d, l);
  }
  out.fibers[b] = fibers->bigon;

  auto set_fold = [&](const Edge& piece, Side high, const SurgeryDescriptor& s) {
    out.folds[piece.id] = Fold{a.face(piece.id, high), a.face(piece.id, opposite(high)), s};
  };
  for (const auto& piece : f_pieces) set_fold(a.edges.at(piece.id), f_high, piece.id == f_mid ? fibers->mid : ff.surgery);
  for (const auto& piece : e_pieces) set_fold(a.edges.at(piece.id), e_high, piece.id == tip ? fibers->tip : fe.surgery);
  check_result(out, "slide");
  return {std::move(out), tip, b};
}

// Lowest-id curve other than `self` with `from` on one side and `to` on the other.
CurveId crossing_curve(const BlfDiagram& d, const CurveId& self, const FaceId& from, const FaceId& to,
                       const std::optional<CurveId>& via) {
  auto separates = [&](const CurveId& c) {
    const FaceId& l = d.arrangement.face(c, Side::left);
    const FaceId& r = d.arrangement.face(c, Side::right);
    return (l == from && r == to) || (l == to && r == from);
  };
  if (via) {
    if (!d.arrangement.has_curve(*via)) throw Error(ErrorCode::unknown_reference, "no curve " + *via);
    if (*via == self || !separates(*via)) {
      throw Error(ErrorCode::not_adjacent, *via + " does not separate " + from + " from " + to);
    }
    return *via;
  }
  std::optional<CurveId> best;
  auto consider = [&](const CurveId& c) {
    if (c != self && separates(c) && (!best || c < *best)) best = c;
  };
  for (const auto& [id, _] : d.arrangement.edges) consider(id);
  for (const auto& [id, _] : d.arrangement.circles) consider(id);
  if (!best) throw Error(ErrorCode::not_adjacent, "no arc separates " + from + " from " + to);
  return *best;
}

FingerOutcome push_across(const BlfDiagram& d, const CurveId& arc, const FaceId& into,
                          const std::optional<CurveId>& via, const SlideData& data) {
  const FaceId low = fold_at(d, arc).low;
  return finger(d, arc, crossing_curve(d, arc, low, into, via), data);
}

}  // namespace

BlfDiagram slide_arc(const BlfDiagram& d, const CurveId& arc, const std::vector<SlideStep>& path,
                     const SlideData& data) {
  require_input(d, "slide");
  const Fold& fold = fold_at(d, arc);
  if (path.empty()) throw Error(ErrorCode::invalid_argument, "slide path is empty");
  if (path.front().face == fold.high) {
    throw Error(ErrorCode::arrow_violation, arc + " points from " + fold.high + " to " + fold.low +
                                                "; it can only slide into " + fold.low);
  }
  if (path.front().face != fold.low) {
    throw Error(ErrorCode::not_adjacent, path.front().face + " is not a side of " + arc);
  }
  BlfDiagram cur = d;
  CurveId tip = arc;
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto r = push_across(cur, tip, path[i].face, path[i].via, data);
    cur = std::move(r.diagram);
    tip = r.tip;
  }
  return cur;
}

SlipResult slip(const BlfDiagram& d, const CurveId& arc, const std::vector<SlipStep>& path) {
  require_input(d, "slip");
  auto euler = [](const BlfDiagram& x) { return x.basepoints > 0 ? pencil_euler(x) : euler_characteristic(x); };
  SlipResult result{d, {{"start", true, euler(d)}}};
  CurveId tip = arc;
  for (const auto& step : path) {
    std::string label;
    if (step.kind == SlipStep::Kind::across) {
      if (!result.diagram.arrangement.has_curve(tip)) {
        throw Error(ErrorCode::unknown_reference, "the sliding arc " + tip + " no longer exists");
      }
      auto r = push_across(result.diagram, tip, step.face, step.via, {});
      label = "across " + step.face + " (" + tip + ")";
      result.diagram = std::move(r.diagram);
      tip = r.tip;
    } else {
      result.diagram = r2_remove(result.diagram, step.face);
      label = "uncross " + step.face;
    }
    result.trace.push_back({label, validate(result.diagram).ok(), euler(result.diagram)});
  }
  return result;
}

namespace {

void rename_face(BlfDiagram& d, const FaceId& from, const FaceId& to) {
  if (from == to) return;
  for (auto& [_, e] : d.arrangement.edges) {
    if (e.left == from) e.left = to;
    if (e.right == from) e.right = to;
  }
  for (auto& [_, c] : d.arrangement.circles) {
    if (c.left == from) c.left = to;
    if (c.right == from) c.right = to;
  }
  for (auto& [_, f] : d.folds) {
    if (f.high == from) f.high = to;
    if (f.low == from) f.low = to;
  }
  for (auto& [_, p] : d.lefschetz) {
    if (p.face == from) p.face = to;
  }
  auto node = d.fibers.extract(from);
  node.key() = to;
  d.fibers.insert(std::move(node));
}

void rename_circle(BlfDiagram& d, const CurveId& from, const CurveId& to) {
  if (from == to) return;
  auto c = d.arrangement.circles.extract(from);
  c.key() = to;
  c.mapped().id = to;
  d.arrangement.circles.insert(std::move(c));
  auto f = d.folds.extract(from);
  f.key() = to;
  d.folds.insert(std::move(f));
}

}  // namespace

BlfDiagram connect_fibers(const BlfDiagram& d) {
  auto fail = [](const std::string& why) { return Error(ErrorCode::precondition_violated, why); };
  if (!validate(d).ok()) throw fail("diagram does not validate");
  const auto& a = d.arrangement;
  if (!a.vertices.empty() || !a.edges.empty() || a.circles.size() != 1) {
    throw fail("round image must be a single embedded circle");
  }
  const CurveId circle = a.circles.begin()->first;
  const Fold fold = fold_at(d, circle);
  const FiberDescription& outer = fiber_at(d, fold.high);
  const FiberDescription& inner = fiber_at(d, fold.low);
  if (outer.size() != 1) throw fail("fiber over the higher side " + fold.high + " must be connected");
  if (inner.size() != 2 || fold.surgery.kind != SurgeryDescriptor::Kind::separating) {
    throw fail("fiber over the lower side " + fold.low + " must have two components");
  }
  for (const auto& [id, p] : d.lefschetz) {
    if (p.face != fold.high) throw fail("Lefschetz point " + id + " must lie on the higher side");
  }
  if (d.basepoints > 0) throw fail("diagram is a pencil");

  const std::int64_t genus = outer.total_genus();
  const std::int64_t before = euler_characteristic(d);
  const auto d1 = flip(d, circle);
  const auto d2 = flip(d1, circle);
  auto slipped = slip(d2, circle, {SlipStep{SlipStep::Kind::uncross, fold.low, std::nullopt}});
  BlfDiagram out = std::move(slipped.diagram);

  auto post = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::invalid_result, "connect-fibers postcondition failed: " + what);
  };
  post(out.arrangement.vertices.empty() && out.arrangement.edges.empty() && out.arrangement.circles.size() == 1,
       "embedded connected round image");
  const CurveId final_circle = out.arrangement.circles.begin()->first;
  const FaceId merged = out.folds.at(final_circle).high;
  rename_face(out, merged, fold.low);
  rename_circle(out, final_circle, circle);
  post(validate(out).ok(), "validates");
  post(connectivity_report(out).all_connected, "all fibers connected");
  post(out.fibers.at(fold.low).total_genus() == genus + 1, "inner fiber genus");
  std::size_t inner_points = 0;
  for (const auto& [_, p] : out.lefschetz) inner_points += p.face == fold.low;
  post(inner_points == 4 && out.lefschetz.size() == d.lefschetz.size() + 4, "four new Lefschetz points");
  post(euler_characteristic(out) == before, "euler characteristic");
  return out;
}

}  // namespace blf
