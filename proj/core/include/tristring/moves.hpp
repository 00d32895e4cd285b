#pragma once

#include <compare>
#include <vector>

#include "tristring/surface.hpp"

namespace tristring {

/// Splits `vertex` at two corner positions of its rotation. The neighbours at
/// the corners become the apexes of the two new triangles; the arc from
/// corner_a to corner_b (cyclically, inclusive) stays with `vertex`, the arc
/// from corner_b to corner_a goes to the new vertex.
struct SplitDescriptor {
  Vertex vertex = 0;
  int corner_a = 0;
  int corner_b = 0;

  auto operator<=>(const SplitDescriptor&) const = default;
};

/// Link condition: the endpoints have exactly two common neighbours (the apexes
/// of the faces on e) and the triangulation is larger than K4.
/// Throws InvalidArgument if e is not an edge of t.
bool is_contractible(const EmbeddedTriangulation& t, const Edge& e);

/// Contracts e, merging e.v into e.u. The vertex e.v disappears and higher labels
/// shift down by one. Throws ContractionError when e is not contractible.
EmbeddedTriangulation contract_edge(const EmbeddedTriangulation& t, const Edge& e);

/// Every split of v, one per unordered corner pair, whose result validates.
std::vector<SplitDescriptor> enumerate_splits(const EmbeddedTriangulation& t, Vertex v);

/// New vertex gets label t.n_vertices(). Throws InvalidArgument for a bad descriptor.
EmbeddedTriangulation apply_split(const EmbeddedTriangulation& t, const SplitDescriptor& d);

/// The edge created by apply_split(t, d).
inline Edge split_edge(const EmbeddedTriangulation& t, const SplitDescriptor& d) {
  return Edge(d.vertex, t.n_vertices());
}

std::vector<Edge> contractible_edges(const EmbeddedTriangulation& t);

/// True iff no edge is contractible.
bool is_irreducible(const EmbeddedTriangulation& t);

}  // namespace tristring
