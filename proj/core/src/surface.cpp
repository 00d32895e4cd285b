#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "darts.hpp"
#include "tristring/error.hpp"
#include "tristring/surface.hpp"

namespace tristring {

SurfaceSpec SurfaceSpec::from_euler(bool orientable, int euler_characteristic) {
  if (orientable) {
    if (euler_characteristic > 2 || euler_characteristic % 2 != 0)
      throw InvalidArgument("no orientable closed surface has Euler characteristic " +
                            std::to_string(euler_characteristic));
    return {true, (2 - euler_characteristic) / 2, euler_characteristic};
  }
  if (euler_characteristic > 1)
    throw InvalidArgument("no non-orientable closed surface has Euler characteristic " +
                          std::to_string(euler_characteristic));
  return {false, 2 - euler_characteristic, euler_characteristic};
}

SurfaceSpec SurfaceSpec::from_name(const std::string& name) {
  if (name == "sphere") return sphere();
  if (name == "torus") return torus();
  if (name == "projective-plane") return projective_plane();
  if (name == "klein-bottle") return from_euler(false, 0);
  auto parse_genus = [&](const std::string& prefix) -> int {
    try {
      std::size_t used = 0;
      const int g = std::stoi(name.substr(prefix.size()), &used);
      if (used + prefix.size() == name.size() && g >= 0) return g;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("unknown surface '" + name + "'");
  };
  if (name.starts_with("orientable-")) return from_euler(true, 2 - 2 * parse_genus("orientable-"));
  if (name.starts_with("nonorientable-")) {
    const int g = parse_genus("nonorientable-");
    if (g == 0) throw InvalidArgument("non-orientable surfaces have at least one crosscap");
    return from_euler(false, 2 - g);
  }
  throw InvalidArgument("unknown surface '" + name + "'");
}

bool SurfaceSpec::consistent() const {
  return orientable ? (genus >= 0 && euler_characteristic == 2 - 2 * genus)
                    : (genus >= 1 && euler_characteristic == 2 - genus);
}

std::string SurfaceSpec::name() const {
  if (orientable) {
    if (genus == 0) return "sphere";
    if (genus == 1) return "torus";
    return "orientable-" + std::to_string(genus);
  }
  if (genus == 1) return "projective-plane";
  if (genus == 2) return "klein-bottle";
  return "nonorientable-" + std::to_string(genus);
}

std::vector<Face> face_trace(const EmbeddedTriangulation& t) {
  const detail::DartIndex index(t);
  // State (dart, orientation) packed as 2 * dart + (orientation < 0).
  auto state = [&](Vertex v, int slot, int o) { return 2 * index.dart(v, slot) + (o < 0 ? 1 : 0); };
  std::vector<char> used(2 * static_cast<std::size_t>(index.n_darts()), 0);
  std::vector<Face> faces;
  for (Vertex v0 = 0; v0 < t.n_vertices(); ++v0) {
    for (int i0 = 0; i0 < t.degree(v0); ++i0) {
      for (int o0 : {1, -1}) {
        if (used[state(v0, i0, o0)]) continue;
        Face face;
        Vertex v = v0;
        int slot = i0;
        int o = o0;
        do {
          used[state(v, slot, o)] = 1;
          face.push_back(v);
          const Vertex u = t.rotation(v)[slot];
          const int o_next = o * index.sign(v, slot);
          const int back = index.twin(v, slot);
          used[state(u, back, -o_next)] = 1;  // same side, opposite direction
          const int d = t.degree(u);
          slot = ((back + o_next) % d + d) % d;
          v = u;
          o = o_next;
        } while (!(v == v0 && slot == i0 && o == o0));
        faces.push_back(std::move(face));
      }
    }
  }
  return faces;
}

int euler_characteristic(const EmbeddedTriangulation& t) {
  const auto faces = face_trace(t);
  return t.n_vertices() - static_cast<int>(t.n_edges()) + static_cast<int>(faces.size());
}

bool is_orientable(const EmbeddedTriangulation& t) {
  const detail::DartIndex index(t);
  const int n = t.n_vertices();
  std::vector<int> local(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (local[root] != 0) continue;
    local[root] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (int i = 0; i < t.degree(v); ++i) {
        const Vertex u = t.rotation(v)[i];
        const int wanted = local[v] * index.sign(v, i);
        if (local[u] == 0) {
          local[u] = wanted;
          queue.push(u);
        } else if (local[u] != wanted) {
          return false;
        }
      }
    }
  }
  return true;
}

ValidationReport validate_triangulation(const EmbeddedTriangulation& t) {
  ValidationReport report = detail::structural_check(t);
  if (!report.valid()) return report;
  if (t.n_vertices() == 0) {
    report.add(rules::kDisconnected, "empty rotation system");
    return report;
  }

  const SimpleGraph g = t.graph();
  if (!g.is_connected()) report.add(rules::kDisconnected, "underlying graph is not connected");

  const auto faces = face_trace(t);
  const std::size_t e = t.n_edges();
  if (3 * faces.size() != 2 * e)
    report.add(rules::kFaceCount, "3F = " + std::to_string(3 * faces.size()) + " but 2E = " + std::to_string(2 * e));

  std::map<std::array<Vertex, 3>, int> triples;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Face& face = faces[f];
    std::vector<Vertex> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (face.size() != 3 || !distinct) {
      std::string walk;
      for (Vertex v : face) walk += (walk.empty() ? "" : " ") + std::to_string(v);
      report.add(rules::kFaceNotTriangle, "face " + std::to_string(f) + " is (" + walk + ")");
      continue;
    }
    const std::array<Vertex, 3> key{sorted[0], sorted[1], sorted[2]};
    if (++triples[key] == 2)
      report.add(rules::kFaceAdjacency, "two faces share all of {" + std::to_string(key[0]) + "," +
                                            std::to_string(key[1]) + "," + std::to_string(key[2]) + "}");
  }
  return report;
}

SurfaceSpec surface_of(const EmbeddedTriangulation& t) {
  const auto report = validate_triangulation(t);
  if (!report.valid()) throw InvalidTriangulation("not a valid triangulation: " + report.to_string());
  return SurfaceSpec::from_euler(is_orientable(t), euler_characteristic(t));
}

EmbeddedTriangulation relabel(const EmbeddedTriangulation& t, std::span<const Vertex> perm) {
  const int n = t.n_vertices();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("relabel: permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || hit[p]) throw InvalidArgument("relabel: not a permutation");
    hit[p] = 1;
  }
  std::vector<std::vector<Vertex>> rotation(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : t.rotation(v)) rotation[perm[v]].push_back(perm[u]);
  std::set<Edge> negative;
  for (const Edge& e : t.negative_edges()) negative.emplace(perm[e.u], perm[e.v]);
  return EmbeddedTriangulation(std::move(rotation), std::move(negative));
}

EmbeddedTriangulation mirror(const EmbeddedTriangulation& t) {
  auto rotation = t.rotations();
  for (auto& r : rotation) std::reverse(r.begin(), r.end());
  return EmbeddedTriangulation(std::move(rotation), t.negative_edges());
}

EmbeddedTriangulation switch_vertex(const EmbeddedTriangulation& t, Vertex v) {
  if (v < 0 || v >= t.n_vertices()) throw InvalidArgument("switch_vertex: vertex out of range");
  auto rotation = t.rotations();
  std::reverse(rotation[v].begin(), rotation[v].end());
  std::set<Edge> negative = t.negative_edges();
  for (Vertex u : t.rotation(v)) {
    const Edge e(v, u);
    if (!negative.erase(e)) negative.insert(e);
  }
  return EmbeddedTriangulation(std::move(rotation), std::move(negative));
}

}  // namespace tristring
