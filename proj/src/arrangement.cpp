#include "blf/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "blf/error.hpp"

namespace blf {

int valence(VertexKind kind) { return kind == VertexKind::double_point ? 4 : 2; }

const FaceId& ArrangementMap::face(const CurveId& curve, Side side) const {
  if (auto it = edges.find(curve); it != edges.end()) return it->second.face(side);
  if (auto it = circles.find(curve); it != circles.end()) return it->second.face(side);
  throw Error(ErrorCode::unknown_reference, "no curve " + curve);
}

FaceId& ArrangementMap::face(const CurveId& curve, Side side) {
  if (auto it = edges.find(curve); it != edges.end()) return it->second.face(side);
  if (auto it = circles.find(curve); it != circles.end()) return it->second.face(side);
  throw Error(ErrorCode::unknown_reference, "no curve " + curve);
}

std::vector<std::string> structural_problems(const ArrangementMap& a) {
  std::vector<std::string> problems;
  std::map<VertexId, std::vector<int>> used;
  for (const auto& [id, v] : a.vertices) used[id].assign(valence(v.kind), 0);
  for (const auto& [id, c] : a.circles) {
    if (a.edges.count(id)) problems.push_back("curve id " + id + " used by both an edge and a circle");
    if (c.left.empty() || c.right.empty()) problems.push_back("circle " + id + " lacks a face name");
  }
  for (const auto& [id, e] : a.edges) {
    if (e.left.empty() || e.right.empty()) problems.push_back("edge " + id + " lacks a face name");
    for (const auto& end : e.ends) {
      auto it = used.find(end.vertex);
      if (it == used.end()) {
        problems.push_back("edge " + id + " references missing vertex " + end.vertex);
        continue;
      }
      if (end.slot < 0 || end.slot >= static_cast<int>(it->second.size())) {
        problems.push_back("edge " + id + " uses slot " + std::to_string(end.slot) + " of vertex " +
                           end.vertex + " with valence " + std::to_string(it->second.size()));
        continue;
      }
      ++it->second[end.slot];
    }
  }
  for (const auto& [id, slots] : used) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (slots[s] != 1) {
        problems.push_back("vertex " + id + " slot " + std::to_string(s) + " used " +
                           std::to_string(slots[s]) + " times");
      }
    }
  }
  return problems;
}

std::vector<Dart> rotation(const ArrangementMap& a, const VertexId& v) {
  auto vit = a.vertices.find(v);
  if (vit == a.vertices.end()) throw Error(ErrorCode::unknown_reference, "no vertex " + v);
  const int k = valence(vit->second.kind);
  std::vector<Dart> darts(k);
  std::vector<int> seen(k, 0);
  for (const auto& [id, e] : a.edges) {
    for (int end = 0; end < 2; ++end) {
      if (e.ends[end].vertex != v) continue;
      const int s = e.ends[end].slot;
      if (s < 0 || s >= k) throw Error(ErrorCode::invalid_argument, "bad slot at vertex " + v);
      darts[s] = Dart{id, end};
      ++seen[s];
    }
  }
  for (int s = 0; s < k; ++s) {
    if (seen[s] != 1) throw Error(ErrorCode::invalid_argument, "vertex " + v + " has malformed rotation");
  }
  return darts;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

struct RawCircuit {
  Circuit sides;
  std::size_t component = 0;
};

void rotate_to_min(Circuit& c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
}

}  // namespace

std::vector<std::vector<CurveId>> curve_components(const ArrangementMap& a) {
  std::map<VertexId, std::size_t> vindex;
  for (const auto& [id, v] : a.vertices) vindex.emplace(id, vindex.size());
  DisjointSets ds(vindex.size());
  for (const auto& [id, e] : a.edges) {
    auto i = vindex.find(e.ends[0].vertex);
    auto j = vindex.find(e.ends[1].vertex);
    if (i != vindex.end() && j != vindex.end()) ds.unite(i->second, j->second);
  }
  std::map<std::size_t, std::vector<CurveId>> groups;
  for (const auto& [id, e] : a.edges) {
    auto i = vindex.find(e.ends[0].vertex);
    if (i != vindex.end()) groups[ds.find(i->second)].push_back(id);
  }
  std::vector<std::vector<CurveId>> out;
  for (auto& [_, g] : groups) out.push_back(std::move(g));
  for (const auto& [id, c] : a.circles) out.push_back({id});
  for (auto& g : out) std::sort(g.begin(), g.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TracedFace> trace_faces(const ArrangementMap& a) {
  if (auto problems = structural_problems(a); !problems.empty()) {
    throw Error(ErrorCode::invalid_argument, problems.front());
  }
  if (a.empty()) return {TracedFace{}};

  // Components: vertices joined by edges; isolated vertices count too.
  std::map<VertexId, std::size_t> vindex;
  for (const auto& [id, v] : a.vertices) vindex.emplace(id, vindex.size());
  DisjointSets ds(vindex.size());
  for (const auto& [id, e] : a.edges) ds.unite(vindex.at(e.ends[0].vertex), vindex.at(e.ends[1].vertex));
  std::map<std::size_t, std::size_t> comp_of_root;
  for (const auto& [id, i] : vindex) comp_of_root.emplace(ds.find(i), comp_of_root.size());
  const std::size_t graph_components = comp_of_root.size();
  std::vector<int> comp_vertices(graph_components, 0);
  std::vector<int> comp_edges(graph_components, 0);
  std::vector<int> comp_circuits(graph_components, 0);
  for (const auto& [id, i] : vindex) ++comp_vertices[comp_of_root.at(ds.find(i))];
  for (const auto& [id, e] : a.edges) ++comp_edges[comp_of_root.at(ds.find(vindex.at(e.ends[0].vertex)))];

  std::map<VertexId, std::vector<Dart>> rot;
  for (const auto& [id, v] : a.vertices) rot.emplace(id, rotation(a, id));

  std::vector<RawCircuit> circuits;
  std::set<std::pair<CurveId, int>> visited;  // (edge, direction) with 0 = forward
  for (const auto& [start_id, start_edge] : a.edges) {
    for (int dir = 0; dir < 2; ++dir) {
      if (visited.count({start_id, dir})) continue;
      RawCircuit rc;
      rc.component = comp_of_root.at(ds.find(vindex.at(start_edge.ends[0].vertex)));
      CurveId cur = start_id;
      int d = dir;
      while (visited.insert({cur, d}).second) {
        const Edge& e = a.edges.at(cur);
        rc.sides.push_back({cur, d == 0 ? Side::left : Side::right});
        const EdgeEnd& arrive = e.ends[d == 0 ? 1 : 0];
        const auto& darts = rot.at(arrive.vertex);
        const int k = static_cast<int>(darts.size());
        const Dart& next = darts[(arrive.slot + k - 1) % k];
        cur = next.edge;
        d = next.end == 0 ? 0 : 1;
      }
      ++comp_circuits[rc.component];
      circuits.push_back(std::move(rc));
    }
  }
  std::size_t component_count = graph_components;
  for (const auto& [id, c] : a.circles) {
    circuits.push_back({{SideRef{id, Side::left}}, component_count});
    circuits.push_back({{SideRef{id, Side::right}}, component_count});
    ++component_count;
  }

  for (std::size_t c = 0; c < graph_components; ++c) {
    if (comp_vertices[c] - comp_edges[c] + comp_circuits[c] != 2) {
      throw Error(ErrorCode::not_sphere,
                  "component with V=" + std::to_string(comp_vertices[c]) + " E=" +
                      std::to_string(comp_edges[c]) + " F=" + std::to_string(comp_circuits[c]) +
                      " is not planar (V-E+F != 2)");
    }
  }

  // Every circuit bounds exactly one face; the component/face incidence graph
  // of a planar arrangement on the sphere is a tree.
  std::map<FaceId, std::size_t> label_index;
  for (auto& rc : circuits) {
    rotate_to_min(rc.sides);
    const FaceId& label = a.face(rc.sides.front().curve, rc.sides.front().side);
    for (const auto& s : rc.sides) {
      if (a.face(s.curve, s.side) != label) {
        throw Error(ErrorCode::not_sphere, "boundary circuit through " + s.curve + " carries faces " +
                                               label + " and " + a.face(s.curve, s.side));
      }
    }
    label_index.emplace(label, 0);
  }
  std::size_t next = component_count;
  for (auto& [label, idx] : label_index) idx = next++;
  DisjointSets incidence(next);
  for (const auto& rc : circuits) {
    const FaceId& label = a.face(rc.sides.front().curve, rc.sides.front().side);
    if (!incidence.unite(rc.component, label_index.at(label))) {
      throw Error(ErrorCode::not_sphere,
                  "face " + label + " closes a cycle of components; the arrangement is not on a sphere");
    }
  }
  for (std::size_t i = 1; i < next; ++i) {
    if (incidence.find(i) != incidence.find(0)) {
      throw Error(ErrorCode::not_sphere, "face names split the arrangement into separate spheres");
    }
  }

  std::map<FaceId, TracedFace> by_label;
  for (auto& rc : circuits) {
    const FaceId& label = a.face(rc.sides.front().curve, rc.sides.front().side);
    auto& f = by_label[label];
    f.label = label;
    f.circuits.push_back(std::move(rc.sides));
  }
  std::vector<TracedFace> faces;
  for (auto& [_, f] : by_label) {
    std::sort(f.circuits.begin(), f.circuits.end(),
              [](const Circuit& x, const Circuit& y) { return x.front() < y.front(); });
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const TracedFace& x, const TracedFace& y) {
    return x.circuits.front().front() < y.circuits.front().front();
  });
  return faces;
}

std::string to_string(VertexKind kind) { return kind == VertexKind::double_point ? "double" : "cusp"; }
std::string to_string(Side side) { return side == Side::left ? "L" : "R"; }

}  // namespace blf
