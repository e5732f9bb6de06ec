#include "blf/diagram.hpp"

#include <algorithm>
#include <set>

#include "blf/error.hpp"

namespace blf {

bool ValidationReport::ok() const {
  return std::none_of(issues.begin(), issues.end(),
                      [](const Issue& i) { return i.severity == Severity::error; });
}

std::vector<Issue> ValidationReport::violations() const {
  std::vector<Issue> out;
  for (const auto& i : issues) {
    if (i.severity == Severity::error) out.push_back(i);
  }
  return out;
}

std::vector<Issue> ValidationReport::warnings() const {
  std::vector<Issue> out;
  for (const auto& i : issues) {
    if (i.severity == Severity::warning) out.push_back(i);
  }
  return out;
}

std::vector<TracedFace> faces_of(const BlfDiagram& d) {
  auto faces = trace_faces(d.arrangement);
  if (d.arrangement.empty() && d.fibers.size() == 1) faces.front().label = d.fibers.begin()->first;
  return faces;
}

Side high_side(const BlfDiagram& d, const CurveId& curve) {
  const Fold& f = d.folds.at(curve);
  return d.arrangement.face(curve, Side::left) == f.high ? Side::left : Side::right;
}

namespace {

class Validator {
 public:
  explicit Validator(const BlfDiagram& d) : d_(d) {}

  ValidationReport run() {
    check_fibers();
    if (!check_arrangement()) return std::move(report_);
    check_folds();
    for (const auto& [id, v] : d_.arrangement.vertices) {
      if (v.kind == VertexKind::double_point) {
        check_double(id);
      } else {
        check_cusp(id);
      }
    }
    check_lefschetz();
    if (d_.basepoints < 0 || d_.sections < 0) {
      add("V7", "basepoints", "base point and section counts must be non-negative");
    }
    return std::move(report_);
  }

 private:
  void add(std::string code, std::string subject, std::string message,
           Severity severity = Severity::error) {
    report_.issues.push_back({std::move(code), severity, std::move(subject), std::move(message)});
  }

  const FiberDescription* fiber(const FaceId& f) const {
    auto it = d_.fibers.find(f);
    return it == d_.fibers.end() || it->second.empty() ? nullptr : &it->second;
  }

  void check_fibers() {
    for (const auto& [id, f] : d_.fibers) {
      if (f.empty()) add("V7", id, "face has an empty fiber");
    }
  }

  bool check_arrangement() {
    for (const auto& p : structural_problems(d_.arrangement)) add("V1", "arrangement", p);
    if (!report_.ok()) return false;
    try {
      faces_ = faces_of(d_);
    } catch (const Error& e) {
      add("V1", "arrangement", e.what());
      return false;
    }
    std::set<FaceId> traced;
    for (const auto& f : faces_) traced.insert(f.label);
    if (d_.arrangement.empty() && d_.fibers.size() != 1) {
      add("V7", "faces", "an empty arrangement has exactly one face, found " +
                             std::to_string(d_.fibers.size()) + " face records");
      return false;
    }
    for (const auto& label : traced) {
      if (!d_.fibers.count(label)) add("V7", label, "traced face has no fiber record");
    }
    for (const auto& [label, _] : d_.fibers) {
      if (!traced.count(label)) add("V7", label, "fiber record does not match any traced face");
    }
    return true;
  }

  void check_folds() {
    auto check_one = [&](const CurveId& id, const FaceId& left, const FaceId& right) {
      auto it = d_.folds.find(id);
      if (it == d_.folds.end()) {
        add("V2", id, "curve has no fold record");
        return;
      }
      const Fold& f = it->second;
      if (f.high == f.low) {
        add("V2", id, "high and low face coincide (" + f.high + ")");
        return;
      }
      if (!((f.high == left && f.low == right) || (f.high == right && f.low == left))) {
        add("V2", id, "fold declares " + f.high + "/" + f.low + " but the curve separates " + left +
                          " and " + right);
        return;
      }
      const FiberDescription* hi = fiber(f.high);
      const FiberDescription* lo = fiber(f.low);
      if (hi == nullptr || lo == nullptr) return;  // reported as V7
      if (!is_applicable(*hi, f.surgery)) {
        add("V3", id, to_string(f.surgery) + " does not apply to fiber " + to_string(*hi));
        return;
      }
      auto result = apply_surgery(*hi, f.surgery);
      if (!equivalent(result, *lo)) {
        add("V3", id, to_string(f.surgery) + " maps " + f.high + " (" + to_string(*hi) + ") to " +
                          to_string(result) + ", but " + f.low + " has " + to_string(*lo));
        return;
      }
      if (f.surgery.kind == SurgeryDescriptor::Kind::separating && (f.surgery.g1 == 0 || f.surgery.g2 == 0)) {
        add("W3", id, "vanishing circle bounds a disk in the fiber (splits off a sphere)",
            Severity::warning);
      }
    };
    for (const auto& [id, e] : d_.arrangement.edges) check_one(id, e.left, e.right);
    for (const auto& [id, c] : d_.arrangement.circles) check_one(id, c.left, c.right);
    for (const auto& [id, _] : d_.folds) {
      if (!d_.arrangement.has_curve(id)) add("V2", id, "fold record for unknown curve");
    }
  }

  bool fold_ok(const CurveId& c) const {
    for (const auto& i : report_.issues) {
      if (i.severity == Severity::error && i.subject == c && (i.code == "V2" || i.code == "V3")) return false;
    }
    return d_.folds.count(c) > 0;
  }

  void check_double(const VertexId& v) {
    const auto darts = rotation(d_.arrangement, v);
    for (const auto& dt : darts) {
      if (!fold_ok(dt.edge)) {
        add("V4", v, "incident edge " + dt.edge + " has invalid fold data");
        return;
      }
    }
    auto out_left = [&](int s) { return high_side(d_, darts[s].edge) == left_of_outgoing(darts[s]); };
    auto out_right = [&](int s) { return high_side(d_, darts[s].edge) == right_of_outgoing(darts[s]); };
    for (int s = 0; s < 2; ++s) {
      if (out_left(s) != out_right(s + 2)) {
        add("V4", v, "arrow flips across the double point on the branch " + darts[s].edge + "/" +
                         darts[s + 2].edge);
        return;
      }
    }
    std::vector<int> both_out;
    for (int s = 0; s < 4; ++s) {
      if (out_left(s) && out_right((s + 1) % 4)) both_out.push_back(s);
    }
    if (both_out.size() != 1) {
      add("V4", v, "expected exactly one quadrant with both arrows outgoing, found " +
                       std::to_string(both_out.size()));
      return;
    }
    const int s = both_out.front();
    auto quadrant = [&](int q) {
      q %= 4;
      return d_.arrangement.face(darts[q].edge, left_of_outgoing(darts[q]));
    };
    auto surgery = [&](int q) { return d_.folds.at(darts[q % 4].edge).surgery; };
    const FiberDescription* f_oo = fiber(quadrant(s));
    const FiberDescription* f_a = fiber(quadrant(s + 3));
    const FiberDescription* f_b = fiber(quadrant(s + 1));
    const FiberDescription* f_opp = fiber(quadrant(s + 2));
    if (!f_oo || !f_a || !f_b || !f_opp) return;
    // Two routes from the both-out quadrant to the opposite one.
    auto route = [&](const FiberDescription* mid, int first, int second) -> std::optional<FiberDescription> {
      if (!is_applicable(*f_oo, surgery(first)) || !is_applicable(*mid, surgery(second))) return std::nullopt;
      if (!equivalent(apply_surgery(*f_oo, surgery(first)), *mid)) return std::nullopt;
      return apply_surgery(*mid, surgery(second));
    };
    auto r1 = route(f_a, s, s + 3);
    auto r2 = route(f_b, s + 1, s + 2);
    if (!r1 || !r2 || !equivalent(*r1, *r2) || !equivalent(*r1, *f_opp)) {
      add("V4", v, "the two surgery routes from " + quadrant(s) + " to " + quadrant(s + 2) + " disagree");
    }
  }

  void check_cusp(const VertexId& v) {
    const auto darts = rotation(d_.arrangement, v);
    for (const auto& dt : darts) {
      if (!fold_ok(dt.edge)) {
        add("V5", v, "incident edge " + dt.edge + " has invalid fold data");
        return;
      }
    }
    const Fold& f0 = d_.folds.at(darts[0].edge);
    const Fold& f1 = d_.folds.at(darts[1].edge);
    if (f0.high != f1.high || f0.low != f1.low) {
      add("V5", v, "the two arcs at a cusp must share high and low faces");
      return;
    }
    const bool wedge0 = high_side(d_, darts[0].edge) == left_of_outgoing(darts[0]) &&
                        high_side(d_, darts[1].edge) == right_of_outgoing(darts[1]);
    const bool wedge1 = high_side(d_, darts[1].edge) == left_of_outgoing(darts[1]) &&
                        high_side(d_, darts[0].edge) == right_of_outgoing(darts[0]);
    if (wedge0 == wedge1) {
      add("V5", v, "arrows at a cusp must both point out of the cusp wedge");
      return;
    }
    if (f0.surgery.kind != SurgeryDescriptor::Kind::nonseparating ||
        f1.surgery.kind != SurgeryDescriptor::Kind::nonseparating ||
        f0.surgery.component != f1.surgery.component) {
      add("V5", v, "both arcs at a cusp must surger nonseparating circles on one component");
    }
  }

  void check_lefschetz() {
    std::map<FaceId, std::set<std::int64_t>> orders;
    for (const auto& [id, p] : d_.lefschetz) {
      const FiberDescription* f = fiber(p.face);
      if (f == nullptr) {
        add("V6", id, "Lefschetz point in unknown face " + p.face);
        continue;
      }
      const FiberComponent* c = f->find(p.component);
      if (c == nullptr) {
        add("V6", id, "no component " + p.component + " in face " + p.face);
        continue;
      }
      if (p.cycle.size() != static_cast<std::size_t>(2 * c->genus)) {
        add("V6", id, "vanishing cycle has " + std::to_string(p.cycle.size()) + " coordinates, component " +
                          p.component + " needs " + std::to_string(2 * c->genus));
        continue;
      }
      if (!orders[p.face].insert(p.order).second) {
        add("V6", id, "duplicate factorization order " + std::to_string(p.order) + " in face " + p.face);
      }
      if (std::all_of(p.cycle.begin(), p.cycle.end(), [](auto x) { return x == 0; })) {
        add("W6", id, "vanishing cycle is null-homologous", Severity::warning);
      }
    }
  }

  const BlfDiagram& d_;
  ValidationReport report_;
  std::vector<TracedFace> faces_;
};

const FiberDescription& fiber_of(const BlfDiagram& d, const FaceId& f) {
  auto it = d.fibers.find(f);
  if (it == d.fibers.end()) throw Error(ErrorCode::unknown_reference, "no face " + f);
  return it->second;
}

}  // namespace

ValidationReport validate(const BlfDiagram& d) { return Validator(d).run(); }

void require_valid(const BlfDiagram& d) {
  auto report = validate(d);
  if (!report.ok()) {
    const auto v = report.violations().front();
    throw Error(ErrorCode::precondition_violated,
                "invalid diagram: " + v.code + " " + v.subject + ": " + v.message);
  }
}

FaceId both_out_face(const BlfDiagram& d, const VertexId& v) {
  const auto darts = rotation(d.arrangement, v);
  for (int s = 0; s < 4; ++s) {
    const Dart& a = darts[s];
    const Dart& b = darts[(s + 1) % 4];
    if (high_side(d, a.edge) == left_of_outgoing(a) && high_side(d, b.edge) == right_of_outgoing(b)) {
      return d.arrangement.face(a.edge, left_of_outgoing(a));
    }
  }
  throw Error(ErrorCode::precondition_violated, "double point " + v + " has no both-out quadrant");
}

std::int64_t stratum_fiber_euler(const BlfDiagram& d, const Stratum& stratum) {
  switch (stratum.kind) {
    case Stratum::Kind::face:
      if (!d.fibers.count(stratum.id)) break;
      return euler_of_fiber(fiber_of(d, stratum.id));
    case Stratum::Kind::lefschetz: {
      auto it = d.lefschetz.find(stratum.id);
      if (it == d.lefschetz.end()) break;
      return euler_of_fiber(fiber_of(d, it->second.face)) + 1;
    }
    case Stratum::Kind::fold: {
      auto it = d.folds.find(stratum.id);
      if (it == d.folds.end()) break;
      return euler_of_fiber(fiber_of(d, it->second.high)) + 1;
    }
    case Stratum::Kind::vertex: {
      auto it = d.arrangement.vertices.find(stratum.id);
      if (it == d.arrangement.vertices.end()) break;
      if (it->second.kind == VertexKind::double_point) {
        return euler_of_fiber(fiber_of(d, both_out_face(d, stratum.id))) + 2;
      }
      const auto darts = rotation(d.arrangement, stratum.id);
      return euler_of_fiber(fiber_of(d, d.folds.at(darts[0].edge).low));
    }
  }
  throw Error(ErrorCode::unknown_stratum, "no stratum " + stratum.id);
}

std::int64_t euler_characteristic(const BlfDiagram& d) {
  if (d.basepoints > 0) {
    throw Error(ErrorCode::is_pencil, "diagram is a pencil with " + std::to_string(d.basepoints) +
                                          " base points; blow up first");
  }
  require_valid(d);
  std::int64_t e = 0;
  for (const auto& f : faces_of(d)) e += f.euler_c() * euler_of_fiber(fiber_of(d, f.label));
  e += static_cast<std::int64_t>(d.lefschetz.size());
  for (const auto& [id, _] : d.arrangement.edges) {
    e -= stratum_fiber_euler(d, {Stratum::Kind::fold, id});  // open arcs have chi_c = -1
  }
  for (const auto& [id, _] : d.arrangement.vertices) {
    e += stratum_fiber_euler(d, {Stratum::Kind::vertex, id});
  }
  return e;
}

DiagramCounts counts(const BlfDiagram& d) {
  DiagramCounts c;
  c.faces = d.fibers.size();
  c.edges = d.arrangement.edges.size();
  c.circles = d.arrangement.circles.size();
  for (const auto& [_, v] : d.arrangement.vertices) {
    (v.kind == VertexKind::double_point ? c.double_points : c.cusps) += 1;
  }
  c.lefschetz = d.lefschetz.size();
  return c;
}

bool parity_check(const BlfDiagram& d) {
  const auto e = euler_characteristic(d);
  const auto n = counts(d);
  return ((e - static_cast<std::int64_t>(n.lefschetz + n.cusps)) % 2) == 0;
}

ConnectivityReport connectivity_report(const BlfDiagram& d) {
  ConnectivityReport r;
  for (const auto& [id, f] : d.fibers) {
    const bool connected = f.size() == 1;
    r.face_connected[id] = connected;
    r.all_connected = r.all_connected && connected;
  }
  return r;
}

mcg::TwistWord face_monodromy(const BlfDiagram& d, const FaceId& face, const ComponentId& component,
                              mcg::Handedness lefschetz_handedness) {
  const FiberComponent* comp = fiber_of(d, face).find(component);
  if (comp == nullptr) throw Error(ErrorCode::unknown_reference, "no component " + component + " in " + face);
  std::vector<const LefschetzPoint*> points;
  for (const auto& [_, p] : d.lefschetz) {
    if (p.face == face && p.component == component) points.push_back(&p);
  }
  std::sort(points.begin(), points.end(),
            [](const auto* a, const auto* b) { return a->order > b->order; });
  std::vector<mcg::TwistLetter> letters;
  const int g = static_cast<int>(comp->genus);
  for (const auto* p : points) {
    letters.push_back({mcg::HomologyClass(g, p->cycle), lefschetz_handedness});
  }
  return mcg::TwistWord(g, std::move(letters));
}

}  // namespace blf
