#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tristring/graph.hpp"

namespace tristring {

/// A graph cellularly embedded in a closed surface, encoded as a signed rotation
/// system: rotation(v) is the cyclic order of v's neighbours in v's local
/// orientation, and an edge of sign -1 reverses local orientation when crossed.
///
/// Face convention: consecutive neighbours (p, q) in rotation(v) bound the face
/// (v, p, q). The value may be malformed; validate_triangulation() is the gatekeeper.
class EmbeddedTriangulation {
 public:
  EmbeddedTriangulation() = default;
  /// Edges absent from negative_edges have sign +1.
  explicit EmbeddedTriangulation(std::vector<std::vector<Vertex>> rotation,
                                 std::set<Edge> negative_edges = {});

  int n_vertices() const { return static_cast<int>(rotation_.size()); }
  /// Half the sum of rotation lengths.
  std::size_t n_edges() const;
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
  std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

  int sign(const Edge& e) const { return negative_.contains(e) ? -1 : 1; }
  /// Sign of the edge from v to rotation(v)[slot].
  int slot_sign(Vertex v, int slot) const { return sign(Edge(v, rotation_[v][slot])); }
  const std::set<Edge>& negative_edges() const { return negative_; }

  /// Distinct undirected edges named by the rotation, sorted.
  std::vector<Edge> edges() const;
  /// Underlying simple graph. Throws InvalidArgument when the rotation names a loop
  /// or a repeated neighbour.
  SimpleGraph graph() const;

  bool operator==(const EmbeddedTriangulation&) const = default;

 private:
  std::vector<std::vector<Vertex>> rotation_;
  std::set<Edge> negative_;
};

struct SurfaceSpec {
  bool orientable = true;
  /// Handles for orientable surfaces, crosscaps for non-orientable ones.
  int genus = 0;
  int euler_characteristic = 2;

  static SurfaceSpec sphere() { return {true, 0, 2}; }
  static SurfaceSpec torus() { return {true, 1, 0}; }
  static SurfaceSpec projective_plane() { return {false, 1, 1}; }
  /// Throws InvalidArgument when no closed surface has this (orientable, chi) pair.
  static SurfaceSpec from_euler(bool orientable, int euler_characteristic);
  /// Accepts "sphere", "torus", "projective-plane", "klein-bottle",
  /// "orientable-<g>" and "nonorientable-<g>".
  static SurfaceSpec from_name(const std::string& name);

  bool consistent() const;
  std::string name() const;

  bool operator==(const SurfaceSpec&) const = default;
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(const std::string& rule) const;
  void add(std::string rule, std::string detail) { violations.push_back({std::move(rule), std::move(detail)}); }
  void append(const ValidationReport& other, const std::string& prefix = {});
  std::string to_string() const;
};

// Rule identifiers used in ValidationReport.
namespace rules {
inline constexpr const char* kRotationMismatch = "rotation_mismatch";
inline constexpr const char* kLoop = "loop";
inline constexpr const char* kParallelEdge = "parallel_edge";
inline constexpr const char* kSignInvalid = "sign_invalid";
inline constexpr const char* kDisconnected = "disconnected";
inline constexpr const char* kFaceNotTriangle = "face_not_triangle";
inline constexpr const char* kFaceCount = "face_count";
inline constexpr const char* kFaceAdjacency = "face_adjacency";
inline constexpr const char* kSurfaceMismatch = "surface_mismatch";
inline constexpr const char* kSeedNotIrreducible = "seed_not_irreducible";
inline constexpr const char* kDuplicateSeed = "duplicate_seed";
inline constexpr const char* kHeaderMismatch = "header_mismatch";
}  // namespace rules

/// Cyclic vertex sequence of one face.
using Face = std::vector<Vertex>;

/// Traces every face of the signed rotation system; each edge side is used by
/// exactly one face. Throws StructuralError on a malformed rotation.
std::vector<Face> face_trace(const EmbeddedTriangulation& t);

/// V - E + F from the traced faces.
int euler_characteristic(const EmbeddedTriangulation& t);

/// True iff all edge signs can be cleared by local orientation switches.
bool is_orientable(const EmbeddedTriangulation& t);

ValidationReport validate_triangulation(const EmbeddedTriangulation& t);

/// Throws InvalidTriangulation when t does not validate.
SurfaceSpec surface_of(const EmbeddedTriangulation& t);

/// Applies a vertex permutation: vertex v becomes perm[v].
EmbeddedTriangulation relabel(const EmbeddedTriangulation& t, std::span<const Vertex> perm);

/// Reverses every rotation; signs are unchanged. Yields the same face set.
EmbeddedTriangulation mirror(const EmbeddedTriangulation& t);

/// Local orientation switch at v: reverse rotation(v) and negate the signs at v.
EmbeddedTriangulation switch_vertex(const EmbeddedTriangulation& t, Vertex v);

}  // namespace tristring
