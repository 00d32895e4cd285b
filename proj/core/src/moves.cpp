#include "tristring/moves.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "tristring/error.hpp"

namespace tristring {

namespace {

int slot_of(const EmbeddedTriangulation& t, Vertex v, Vertex u) {
  auto rot = t.rotation(v);
  auto it = std::find(rot.begin(), rot.end(), u);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

void require_edge(const EmbeddedTriangulation& t, const Edge& e) {
  if (e.u < 0 || e.v >= t.n_vertices() || e.is_loop() || slot_of(t, e.u, e.v) < 0)
    throw InvalidArgument("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
}

int common_neighbours(const EmbeddedTriangulation& t, const Edge& e) {
  std::vector<Vertex> a(t.rotation(e.u).begin(), t.rotation(e.u).end());
  std::vector<Vertex> b(t.rotation(e.v).begin(), t.rotation(e.v).end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Vertex> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return static_cast<int>(both.size());
}

// Minimum vertex count of any simplicial triangulation; only K4 hits it.
constexpr int kSmallestTriangulation = 4;

}  // namespace

bool is_contractible(const EmbeddedTriangulation& t, const Edge& e) {
  require_edge(t, e);
  return t.n_vertices() > kSmallestTriangulation && common_neighbours(t, e) == 2;
}

EmbeddedTriangulation contract_edge(const EmbeddedTriangulation& input, const Edge& e) {
  require_edge(input, e);
  if (input.n_vertices() <= kSmallestTriangulation)
    throw ContractionError("contraction would degenerate: a triangulation needs more than " +
                           std::to_string(kSmallestTriangulation) + " vertices to shrink");
  if (const int shared = common_neighbours(input, e); shared != 2)
    throw ContractionError("contraction would degenerate: link condition violated, endpoints share " +
                           std::to_string(shared) + " neighbours instead of 2");

  const Vertex x = e.u;
  const Vertex y = e.v;
  // Make the contracted edge orientation-preserving.
  const EmbeddedTriangulation t = input.sign(e) < 0 ? switch_vertex(input, y) : input;

  auto rotation = t.rotations();
  std::set<Edge> negative = t.negative_edges();
  const int dx = t.degree(x);
  const int dy = t.degree(y);
  const int ix = slot_of(t, x, y);
  const int iy = slot_of(t, y, x);

  std::vector<Vertex> merged;
  for (int k = 1; k < dx; ++k) merged.push_back(t.rotation(x)[(ix + k) % dx]);
  const Vertex apex_first = merged.front();
  const Vertex apex_last = merged.back();
  for (int k = 2; k < dy - 1; ++k) {
    const Vertex q = t.rotation(y)[(iy + k) % dy];
    merged.push_back(q);
    std::replace(rotation[q].begin(), rotation[q].end(), y, x);
    if (negative.erase(Edge(y, q))) negative.emplace(x, q);
  }
  rotation[x] = std::move(merged);
  for (Vertex apex : {apex_first, apex_last}) {
    std::erase(rotation[apex], y);
    negative.erase(Edge(y, apex));
  }
  negative.erase(Edge(x, y));

  // Drop y and close the label gap.
  rotation.erase(rotation.begin() + y);
  auto shift = [y](Vertex w) { return w > y ? w - 1 : w; };
  for (auto& r : rotation)
    for (Vertex& w : r) w = shift(w);
  std::set<Edge> shifted;
  for (const Edge& f : negative) shifted.emplace(shift(f.u), shift(f.v));
  return EmbeddedTriangulation(std::move(rotation), std::move(shifted));
}

EmbeddedTriangulation apply_split(const EmbeddedTriangulation& t, const SplitDescriptor& d) {
  const Vertex v = d.vertex;
  if (v < 0 || v >= t.n_vertices()) throw InvalidArgument("split: vertex out of range");
  const int deg = t.degree(v);
  if (d.corner_a < 0 || d.corner_a >= deg || d.corner_b < 0 || d.corner_b >= deg)
    throw InvalidArgument("split: corner position out of range");
  if (d.corner_a == d.corner_b) throw InvalidArgument("split: corners must differ");

  const Vertex fresh = t.n_vertices();
  const auto old = t.rotation(v);
  const Vertex apex_a = old[d.corner_a];
  const Vertex apex_b = old[d.corner_b];

  auto rotation = t.rotations();
  std::set<Edge> negative = t.negative_edges();
  rotation.emplace_back();

  std::vector<Vertex> kept;
  for (int k = d.corner_a;; k = (k + 1) % deg) {
    kept.push_back(old[k]);
    if (k == d.corner_b) break;
  }
  kept.push_back(fresh);

  std::vector<Vertex> moved;
  for (int k = d.corner_b;; k = (k + 1) % deg) {
    const Vertex w = old[k];
    moved.push_back(w);
    if (w != apex_a && w != apex_b) {
      std::replace(rotation[w].begin(), rotation[w].end(), v, fresh);
      if (negative.erase(Edge(v, w))) negative.emplace(fresh, w);
    }
    if (k == d.corner_a) break;
  }
  moved.push_back(v);

  // Each apex sees both offspring; their order follows the apex's local orientation.
  auto insert_pair = [&](Vertex apex, bool kept_first) {
    const bool positive = t.sign(Edge(v, apex)) > 0;
    auto& r = rotation[apex];
    auto it = std::find(r.begin(), r.end(), v);
    const Vertex second = (kept_first == positive) ? fresh : v;
    *it = (second == fresh) ? v : fresh;
    r.insert(it + 1, second);
    if (!positive) negative.emplace(fresh, apex);
  };
  insert_pair(apex_a, true);
  insert_pair(apex_b, false);

  rotation[v] = std::move(kept);
  rotation[fresh] = std::move(moved);
  return EmbeddedTriangulation(std::move(rotation), std::move(negative));
}

std::vector<SplitDescriptor> enumerate_splits(const EmbeddedTriangulation& t, Vertex v) {
  if (v < 0 || v >= t.n_vertices()) throw InvalidArgument("enumerate_splits: vertex out of range");
  std::vector<SplitDescriptor> out;
  const int deg = t.degree(v);
  for (int a = 0; a < deg; ++a) {
    for (int b = a + 1; b < deg; ++b) {
      const SplitDescriptor d{v, a, b};
      if (validate_triangulation(apply_split(t, d)).valid()) out.push_back(d);
    }
  }
  return out;
}

std::vector<Edge> contractible_edges(const EmbeddedTriangulation& t) {
  std::vector<Edge> out;
  for (const Edge& e : t.edges())
    if (is_contractible(t, e)) out.push_back(e);
  return out;
}

bool is_irreducible(const EmbeddedTriangulation& t) {
  if (t.n_vertices() <= kSmallestTriangulation) return true;
  const auto edges = t.edges();
  return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return is_contractible(t, e); });
}

}  // namespace tristring
