#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tristring/surface.hpp"

namespace tristring {

struct Seed {
  EmbeddedTriangulation triangulation;
  std::string provenance;
  // Header claims from the embedding block, checked by verify_catalog when present.
  std::optional<std::size_t> declared_edges;
  std::optional<bool> declared_orientable;
};

/// Irreducible triangulations of one surface, from which every triangulation of
/// that surface is reached by vertex splitting.
struct SeedCatalog {
  SurfaceSpec surface;
  std::vector<Seed> seeds;
};

/// Every seed validates, matches the surface, is irreducible, and no two seeds
/// are isomorphic. Violation details are prefixed with "seed <i>: ".
ValidationReport verify_catalog(const SeedCatalog& catalog);

// Well-known embeddings.
EmbeddedTriangulation tetrahedron();          // K4 in the sphere
EmbeddedTriangulation triangular_bipyramid(); // 5 vertices, sphere; apexes 3 and 4
EmbeddedTriangulation octahedron();           // 6 vertices, sphere
EmbeddedTriangulation k7_torus();             // K7 in the torus
EmbeddedTriangulation k6_projective_plane();  // K6 in the projective plane

/// Built-in catalogs with the constructible seeds only: K4 for the sphere, K7 for
/// the torus, K6 for the projective plane. The complete torus and projective-plane
/// lists ship as catalog files.
SeedCatalog builtin_catalog(const SurfaceSpec& surface);

}  // namespace tristring
