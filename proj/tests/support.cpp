#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "blf/error.hpp"
#include "blf/format.hpp"
#include "blf/moves.hpp"

namespace blf::testing {

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

void add_points(Generator& g, BlfDiagram& d, int n, const std::vector<FaceId>& faces,
                const std::function<std::vector<std::int64_t>(std::int64_t)>& cycle) {
  std::map<FaceId, std::int64_t> next;
  for (int i = 0; i < n; ++i) {
    const FaceId& f = pick(g.rng(), faces);
    const auto& comps = d.fibers.at(f).components();
    const auto& c = pick(g.rng(), comps);
    const std::string id = "p" + std::to_string(i);
    d.lefschetz[id] = {id, f, c.id, next[f]++, cycle(c.genus)};
  }
}

}  // namespace

std::vector<std::int64_t> Generator::random_cycle(std::int64_t genus) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(2 * genus));
  if (v.empty()) return v;
  do {
    for (auto& x : v) x = uniform(-3, 3);
  } while (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }));
  return v;
}

Generator::Nested Generator::nested(const GenOptions& o) {
  BlfDiagram d;
  std::vector<FiberComponent> root;
  const int nc = uniform(1, 2);
  for (int i = 0; i < nc; ++i) root.push_back({"c" + std::to_string(i), uniform(0, o.max_genus)});
  d.fibers["f0"] = FiberDescription(root);
  std::vector<FaceId> faces{"f0"};

  int n = uniform(0, o.max_circles);
  if (o.forced_cusped_circles > n) n = o.forced_cusped_circles;
  int vertex_no = 0, edge_no = 0, circle_no = 0;
  for (int i = 0; i < n; ++i) {
    const FaceId parent = pick(rng_, faces);
    const FaceId child = "f" + std::to_string(faces.size());
    const FiberDescription fp = d.fibers.at(parent);
    const bool cusped = o.forced_cusped_circles >= 0 ? i < o.forced_cusped_circles : chance(o.cusp_probability);
    auto nonsep = [](const SurgeryDescriptor& s) { return s.kind == SurgeryDescriptor::Kind::nonseparating; };

    std::vector<SurgeryDescriptor> down = applicable_surgeries(fp);
    if (cusped) std::erase_if(down, [&](const auto& s) { return !nonsep(s); });
    std::vector<HandleAddition> up = handle_additions(fp);
    if (cusped) std::erase_if(up, [&](const auto& a) { return !nonsep(a.undo); });

    Fold fold;
    const bool parent_high = !down.empty() && (up.empty() || fp.total_genus() > 6 || chance(0.5));
    if (parent_high) {
      const auto& s = pick(rng_, down);
      d.fibers[child] = apply_surgery(fp, s);
      fold = {parent, child, s};
    } else {
      const auto& a = pick(rng_, up);
      d.fibers[child] = a.fiber;
      fold = {child, parent, a.undo};
    }
    faces.push_back(child);

    if (!cusped) {
      const CurveId id = "r" + std::to_string(circle_no++);
      d.arrangement.circles[id] = {id, child, parent};
      d.folds[id] = fold;
      continue;
    }
    // A ring of k cusps: every edge leaves its tail at slot 1 and enters the
    // next cusp at slot 0, with the child face on its left.
    const int k = o.forced_cusped_circles >= 0 ? 1 : uniform(1, 3);
    std::vector<VertexId> vs;
    for (int j = 0; j < k; ++j) {
      vs.push_back("v" + std::to_string(vertex_no++));
      d.arrangement.vertices[vs.back()] = {vs.back(), VertexKind::cusp};
    }
    for (int j = 0; j < k; ++j) {
      const CurveId id = "e" + std::to_string(edge_no++);
      d.arrangement.edges[id] = {id, {EdgeEnd{vs[j], 1}, EdgeEnd{vs[(j + 1) % k], 0}}, child, parent};
      d.folds[id] = fold;
    }
  }

  add_points(*this, d, uniform(0, o.max_points), faces, [this](std::int64_t g) { return random_cycle(g); });
  return {d, tree_euler(d)};
}

Generator::Nested Generator::immersed(int moves, const GenOptions& opts) {
  Nested n = nested(opts);
  BlfDiagram& d = n.diagram;
  for (int m = 0; m < moves; ++m) {
    std::vector<CurveId> curves;
    for (const auto& [id, _] : d.arrangement.edges) curves.push_back(id);
    for (const auto& [id, _] : d.arrangement.circles) curves.push_back(id);
    std::vector<VertexId> cusps;
    for (const auto& [id, v] : d.arrangement.vertices) {
      if (v.kind == VertexKind::cusp) cusps.push_back(id);
    }
    try {
      switch (uniform(0, 2)) {
        case 0: {
          if (curves.empty()) break;
          const CurveId c = pick(rng_, curves);
          const auto& comps = d.fibers.at(d.folds.at(c).high).components();
          FlipParams p;
          p.component = pick(rng_, comps).id;
          d = flip(d, c, p);
          break;
        }
        case 1: {
          if (curves.empty()) break;
          const CurveId arc = pick(rng_, curves);
          const FaceId low = d.folds.at(arc).low;
          std::vector<std::pair<CurveId, FaceId>> exits;
          for (const auto& c : curves) {
            if (c == arc) continue;
            for (Side s : {Side::left, Side::right}) {
              if (d.arrangement.face(c, s) == low && d.arrangement.face(c, opposite(s)) != low) {
                exits.emplace_back(c, d.arrangement.face(c, opposite(s)));
              }
            }
          }
          if (exits.empty()) break;
          const auto& [via, next] = pick(rng_, exits);
          d = slide_arc(d, arc, {{low, std::nullopt}, {next, via}});
          break;
        }
        default:
          if (!cusps.empty()) d = cusp_modify(d, pick(rng_, cusps));
      }
    } catch (const Error&) {
      // not applicable here; try another move
    }
  }
  return n;
}

BlfDiagram Generator::split_circle(int g1, int g2, int points) {
  BlfDiagram d;
  const auto s = SurgeryDescriptor::separating("c0", g1, g2);
  d.fibers["outer"] = FiberDescription({{"c0", g1 + g2}});
  d.fibers["inner"] = apply_surgery(d.fibers["outer"], s);
  d.arrangement.circles["r0"] = {"r0", "inner", "outer"};
  d.folds["r0"] = {"outer", "inner", s};
  add_points(*this, d, points, {"outer"}, [this](std::int64_t g) { return random_cycle(g); });
  return d;
}

std::int64_t tree_euler(const BlfDiagram& d) {
  // Curve components: circles alone, edges joined through shared vertices.
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> root = [&](const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    return it->second = root(it->second);
  };
  std::map<std::string, std::pair<FaceId, FaceId>> sides;
  for (const auto& [id, c] : d.arrangement.circles) sides[id] = {c.left, c.right};
  for (const auto& [id, e] : d.arrangement.edges) {
    for (const auto& end : e.ends) parent[root("v:" + end.vertex)] = root(id);
  }
  for (const auto& [id, e] : d.arrangement.edges) {
    const auto r = root(id);
    if (!sides.count(r)) sides[r] = {e.left, e.right};
  }
  std::map<FaceId, int> degree;
  for (const auto& [id, lr] : sides) {
    if (root(id) != id) continue;
    ++degree[lr.first];
    ++degree[lr.second];
  }
  std::int64_t e = 0;
  for (const auto& [face, fiber] : d.fibers) e += euler_of_fiber(fiber) * (2 - degree[face]);
  e += static_cast<std::int64_t>(d.lefschetz.size());
  for (const auto& [_, v] : d.arrangement.vertices) e += v.kind == VertexKind::cusp ? 1 : 0;
  return e;
}

const std::vector<MoveKind>& all_moves() {
  static const std::vector<MoveKind> v = {MoveKind::slide,        MoveKind::r2_remove,      MoveKind::push,
                                          MoveKind::cusp_modify,  MoveKind::flip,           MoveKind::generic_flip,
                                          MoveKind::slip,         MoveKind::connect_fibers, MoveKind::blow_up,
                                          MoveKind::blow_down};
  return v;
}

std::string move_name(MoveKind m) {
  switch (m) {
    case MoveKind::slide: return "slide";
    case MoveKind::r2_remove: return "r2-remove";
    case MoveKind::push: return "push";
    case MoveKind::cusp_modify: return "cusp-modify";
    case MoveKind::flip: return "flip";
    case MoveKind::generic_flip: return "generic-flip";
    case MoveKind::slip: return "slip";
    case MoveKind::connect_fibers: return "connect-fibers";
    case MoveKind::blow_up: return "blow-up";
    case MoveKind::blow_down: return "blow-down";
  }
  return "?";
}

std::int64_t total_euler(const BlfDiagram& d) {
  return d.basepoints > 0 ? pencil_euler(d) : euler_characteristic(d);
}

namespace {

std::vector<CurveId> all_curves(const BlfDiagram& d) {
  std::vector<CurveId> out;
  for (const auto& [id, _] : d.arrangement.edges) out.push_back(id);
  for (const auto& [id, _] : d.arrangement.circles) out.push_back(id);
  return out;
}

// Curves bounding `face` on one side only, with the face across them.
std::vector<std::pair<CurveId, FaceId>> exits(const BlfDiagram& d, const FaceId& face, const CurveId& skip) {
  std::vector<std::pair<CurveId, FaceId>> out;
  for (const auto& c : all_curves(d)) {
    if (c == skip) continue;
    for (Side s : {Side::left, Side::right}) {
      const auto& other = d.arrangement.face(c, opposite(s));
      if (d.arrangement.face(c, s) == face && other != face) out.emplace_back(c, other);
    }
  }
  return out;
}

std::vector<FaceId> new_faces(const BlfDiagram& before, const BlfDiagram& after) {
  std::vector<FaceId> out;
  for (const auto& [f, _] : after.fibers) {
    if (!before.fibers.count(f)) out.push_back(f);
  }
  return out;
}

}  // namespace

std::optional<MoveOutcome> try_move(Generator& gen, MoveKind m) {
  auto& rng = gen.rng();
  MoveOutcome out;
  out.what = move_name(m);
  auto base = [&](int moves) {
    auto n = gen.immersed(moves);
    out.before = n.diagram;
    out.oracle_euler = n.oracle_euler;
  };
  try {
    switch (m) {
      case MoveKind::slide: {
        base(gen.uniform(0, 2));
        const auto curves = all_curves(out.before);
        if (curves.empty()) return std::nullopt;
        const CurveId arc = pick(rng, curves);
        const Fold& fold = out.before.folds.at(arc);
        const auto ex = exits(out.before, fold.low, arc);
        if (ex.empty()) return std::nullopt;
        const auto [via, next] = pick(rng, ex);
        out.after = slide_arc(out.before, arc, {{fold.low, std::nullopt}, {next, via}});
        out.what += " " + arc + " across " + via;
        // Crossing a curve whose high side is the arc's low face leaves a
        // removable bigon; undoing it must give the diagram back.
        if (out.before.folds.at(via).high == fold.low) {
          out.round_trip_checked = true;
          out.round_trip_ok = false;
          for (const auto& f : new_faces(out.before, out.after)) {
            try {
              if (same_up_to_ids(r2_remove(out.after, f), out.before)) out.round_trip_ok = true;
            } catch (const Error&) {
            }
          }
        }
        break;
      }
      case MoveKind::r2_remove: {
        base(gen.uniform(0, 1));
        // Make a bigon first, then remove a random removable one.
        const auto curves = all_curves(out.before);
        if (curves.empty()) return std::nullopt;
        const CurveId arc = pick(rng, curves);
        const Fold& fold = out.before.folds.at(arc);
        const auto ex = exits(out.before, fold.low, arc);
        if (ex.empty()) return std::nullopt;
        const auto [via, next] = pick(rng, ex);
        const BlfDiagram original = out.before;
        const BlfDiagram slid = slide_arc(original, arc, {{fold.low, std::nullopt}, {next, via}});
        const auto made = new_faces(original, slid);
        const bool undoable = original.folds.at(via).high == fold.low;
        std::vector<FaceId> faces;
        for (const auto& [f, _] : slid.fibers) faces.push_back(f);
        std::shuffle(faces.begin(), faces.end(), rng);
        for (const auto& f : faces) {
          try {
            out.after = r2_remove(slid, f);
          } catch (const Error& err) {
            if (err.code() == ErrorCode::not_adjacent || err.code() == ErrorCode::index_violation) continue;
            throw;
          }
          out.before = slid;
          out.what += " " + f;
          // Removing the bigon the slide just made must undo the slide.
          if (undoable && std::find(made.begin(), made.end(), f) != made.end()) {
            out.round_trip_checked = true;
            out.round_trip_ok = same_up_to_ids(out.after, original);
            if (!out.round_trip_ok) out.what += "\nexpected:\n" + serialize(original) + "got:\n" + serialize(out.after);
          }
          return out;
        }
        return std::nullopt;
      }
      case MoveKind::push: {
        base(gen.uniform(0, 2));
        if (out.before.lefschetz.empty()) return std::nullopt;
        std::vector<PointId> points;
        for (const auto& [id, _] : out.before.lefschetz) points.push_back(id);
        const auto& p = out.before.lefschetz.at(pick(rng, points));
        std::vector<CurveId> edges;
        for (const auto& c : all_curves(out.before)) {
          if (out.before.folds.at(c).low == p.face) edges.push_back(c);
        }
        if (edges.empty()) return std::nullopt;
        const CurveId e = pick(rng, edges);
        auto comps = out.before.fibers.at(out.before.folds.at(e).high).components();
        std::shuffle(comps.begin(), comps.end(), rng);
        for (const auto& c : comps) {
          try {
            out.after = push_lefschetz(out.before, p.id, e, c.id, gen.random_cycle(c.genus));
            out.what += " " + p.id + " over " + e;
            return out;
          } catch (const Error& err) {
            if (err.code() != ErrorCode::lift_mismatch) throw;
          }
        }
        return std::nullopt;
      }
      case MoveKind::cusp_modify: {
        GenOptions o;
        o.cusp_probability = 0.6;
        auto n = gen.immersed(gen.uniform(0, 1), o);
        out.before = n.diagram;
        out.oracle_euler = n.oracle_euler;
        std::vector<VertexId> cusps;
        for (const auto& [id, v] : out.before.arrangement.vertices) {
          if (v.kind == VertexKind::cusp) cusps.push_back(id);
        }
        if (cusps.empty()) return std::nullopt;
        const auto v = pick(rng, cusps);
        out.after = cusp_modify(out.before, v);
        out.what += " " + v;
        break;
      }
      case MoveKind::flip:
      case MoveKind::generic_flip: {
        base(gen.uniform(0, 2));
        const auto curves = all_curves(out.before);
        if (curves.empty()) return std::nullopt;
        const CurveId c = pick(rng, curves);
        FlipParams params;
        params.component = pick(rng, out.before.fibers.at(out.before.folds.at(c).high).components()).id;
        out.after = m == MoveKind::flip ? flip(out.before, c, params) : generic_flip(out.before, c, params);
        out.what += " " + c;
        break;
      }
      case MoveKind::slip: {
        base(gen.uniform(0, 2));
        const auto curves = all_curves(out.before);
        if (curves.empty()) return std::nullopt;
        const CurveId arc = pick(rng, curves);
        const Fold& fold = out.before.folds.at(arc);
        const auto ex = exits(out.before, fold.low, arc);
        if (ex.empty()) return std::nullopt;
        const auto [via, next] = pick(rng, ex);
        const auto r = slip(out.before, arc, {{SlipStep::Kind::across, next, via}});
        for (const auto& t : r.trace) {
          if (!t.valid || t.euler != r.trace.front().euler) return std::nullopt;
        }
        out.after = r.diagram;
        out.what += " " + arc + " across " + via;
        break;
      }
      case MoveKind::connect_fibers: {
        const int g1 = gen.uniform(0, 3), g2 = gen.uniform(0, 3);
        out.before = gen.split_circle(g1, g2, gen.uniform(0, 3));
        out.oracle_euler = tree_euler(out.before);
        out.after = connect_fibers(out.before);
        out.what += " g1=" + std::to_string(g1) + " g2=" + std::to_string(g2);
        break;
      }
      case MoveKind::blow_up: {
        base(gen.uniform(0, 1));
        const int k = gen.uniform(1, 5);
        out.before.basepoints = k;
        out.oracle_euler -= k;
        out.offset = k;
        out.after = blow_up(out.before);
        out.round_trip_checked = true;
        out.round_trip_ok = blow_down(out.after) == out.before;
        break;
      }
      case MoveKind::blow_down: {
        base(gen.uniform(0, 1));
        const int k = gen.uniform(1, 5);
        out.before.sections = k;
        out.offset = -k;
        out.after = blow_down(out.before);
        out.round_trip_checked = true;
        out.round_trip_ok = blow_up(out.after) == out.before;
        break;
      }
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

namespace {

// Relabelling search: vertices map with a cyclic slot offset, edges may be
// reversed, circles and faces map one to one.
struct IsoState {
  std::map<VertexId, std::pair<VertexId, int>> vmap;
  std::set<VertexId> vused;
  std::map<CurveId, std::pair<CurveId, bool>> cmap;  // image, reversed
  std::set<CurveId> cused;
  std::map<FaceId, FaceId> fmap;
  std::set<FaceId> fused;

  bool bind_face(const FaceId& x, const FaceId& y) {
    if (auto it = fmap.find(x); it != fmap.end()) return it->second == y;
    if (fused.count(y)) return false;
    fmap[x] = y;
    fused.insert(y);
    return true;
  }
  bool bind_curve(const CurveId& x, const CurveId& y, bool rev) {
    if (auto it = cmap.find(x); it != cmap.end()) return it->second == std::make_pair(y, rev);
    if (cused.count(y)) return false;
    cmap[x] = {y, rev};
    cused.insert(y);
    return true;
  }
};

using DartTable = std::map<std::pair<VertexId, int>, Dart>;

DartTable dart_table(const BlfDiagram& d) {
  DartTable t;
  for (const auto& [id, e] : d.arrangement.edges) {
    for (int end = 0; end < 2; ++end) t[{e.ends[end].vertex, e.ends[end].slot}] = {id, end};
  }
  return t;
}

class Iso {
 public:
  Iso(const BlfDiagram& a, const BlfDiagram& b) : a_(a), b_(b), ta_(dart_table(a)), tb_(dart_table(b)) {}

  bool run() {
    const auto& x = a_.arrangement;
    const auto& y = b_.arrangement;
    if (x.vertices.size() != y.vertices.size() || x.edges.size() != y.edges.size() ||
        x.circles.size() != y.circles.size() || a_.fibers.size() != b_.fibers.size() ||
        a_.lefschetz.size() != b_.lefschetz.size() || a_.basepoints != b_.basepoints || a_.sections != b_.sections) {
      return false;
    }
    return vertices(IsoState{});
  }

 private:
  bool propagate(IsoState& s, const VertexId& root) const {
    std::vector<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId v = queue.back();
      queue.pop_back();
      const auto [w, off] = s.vmap.at(v);
      const int val = valence(a_.arrangement.vertices.at(v).kind);
      for (int k = 0; k < val; ++k) {
        const Dart da = ta_.at({v, k});
        const Dart db = tb_.at({w, (k + off) % val});
        const bool rev = da.end != db.end;
        if (!s.bind_curve(da.edge, db.edge, rev)) return false;
        const Edge& ea = a_.arrangement.edges.at(da.edge);
        const Edge& eb = b_.arrangement.edges.at(db.edge);
        if (!s.bind_face(ea.left, rev ? eb.right : eb.left) || !s.bind_face(ea.right, rev ? eb.left : eb.right)) {
          return false;
        }
        const EdgeEnd& na = ea.ends[1 - da.end];
        const EdgeEnd& nb = eb.ends[1 - db.end];
        const int nval = valence(a_.arrangement.vertices.at(na.vertex).kind);
        const int noff = ((nb.slot - na.slot) % nval + nval) % nval;
        if (auto it = s.vmap.find(na.vertex); it != s.vmap.end()) {
          if (it->second != std::make_pair(nb.vertex, noff)) return false;
          continue;
        }
        if (s.vused.count(nb.vertex) ||
            a_.arrangement.vertices.at(na.vertex).kind != b_.arrangement.vertices.at(nb.vertex).kind) {
          return false;
        }
        s.vmap[na.vertex] = {nb.vertex, noff};
        s.vused.insert(nb.vertex);
        queue.push_back(na.vertex);
      }
    }
    return true;
  }

  bool vertices(const IsoState& s) const {
    for (const auto& [v, vx] : a_.arrangement.vertices) {
      if (s.vmap.count(v)) continue;
      for (const auto& [w, wx] : b_.arrangement.vertices) {
        if (s.vused.count(w) || vx.kind != wx.kind) continue;
        for (int off = 0; off < valence(vx.kind); ++off) {
          IsoState t = s;
          t.vmap[v] = {w, off};
          t.vused.insert(w);
          if (propagate(t, v) && vertices(t)) return true;
        }
      }
      return false;
    }
    return circles(s, a_.arrangement.circles.begin());
  }

  bool circles(const IsoState& s, std::map<CurveId, Circle>::const_iterator it) const {
    if (it == a_.arrangement.circles.end()) return finish(s);
    for (const auto& [id, c] : b_.arrangement.circles) {
      IsoState t = s;
      if (t.bind_curve(it->first, id, false) && t.bind_face(it->second.left, c.left) &&
          t.bind_face(it->second.right, c.right) && circles(t, std::next(it))) {
        return true;
      }
    }
    return false;
  }

  bool finish(IsoState s) const {
    if (s.fmap.empty() && a_.fibers.size() == 1) s.bind_face(a_.fibers.begin()->first, b_.fibers.begin()->first);
    if (s.fmap.size() != a_.fibers.size()) return false;
    for (const auto& [f, g] : s.fmap) {
      if (!a_.fibers.count(f) || !b_.fibers.count(g) || !equivalent(a_.fibers.at(f), b_.fibers.at(g))) return false;
    }
    for (const auto& [c, img] : s.cmap) {
      const Fold& x = a_.folds.at(c);
      const Fold& y = b_.folds.at(img.first);
      if (s.fmap.at(x.high) != y.high || s.fmap.at(x.low) != y.low || x.surgery.kind != y.surgery.kind) return false;
      auto genus = [](const BlfDiagram& d, const Fold& f) { return d.fibers.at(f.high).find(f.surgery.component)->genus; };
      if (genus(a_, x) != genus(b_, y)) return false;
      if (std::minmax(x.surgery.g1, x.surgery.g2) != std::minmax(y.surgery.g1, y.surgery.g2)) return false;
    }
    using Key = std::tuple<FaceId, std::int64_t, std::int64_t, std::vector<std::int64_t>>;
    std::vector<Key> pa, pb;
    for (const auto& [_, p] : a_.lefschetz) {
      pa.emplace_back(s.fmap.at(p.face), p.order, a_.fibers.at(p.face).find(p.component)->genus, p.cycle);
    }
    for (const auto& [_, p] : b_.lefschetz) {
      pb.emplace_back(p.face, p.order, b_.fibers.at(p.face).find(p.component)->genus, p.cycle);
    }
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
  }

  const BlfDiagram& a_;
  const BlfDiagram& b_;
  DartTable ta_;
  DartTable tb_;
};

}  // namespace

bool same_up_to_ids(const BlfDiagram& a, const BlfDiagram& b) { return a == b || Iso(a, b).run(); }

std::string mutate(std::mt19937_64& rng, std::string t) {
  static const std::string alphabet = "abc019:=,-()_. \n\tblf#@";
  const int edits = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < edits && !t.empty(); ++k) {
    const std::size_t pos = rng() % t.size();
    switch (rng() % 4) {
      case 0: t.erase(pos, 1 + rng() % 8); break;
      case 1: t.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
      case 2: t[pos] = static_cast<char>(rng() % 256); break;
      default: t.insert(pos, t.substr(rng() % t.size(), rng() % 20));
    }
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string diagrams_dir() { return BLF_DIAGRAMS_DIR; }

}  // namespace blf::testing
