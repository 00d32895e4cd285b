#include "tristring/catalog.hpp"

#include <map>
#include <string>

#include "tristring/canonical.hpp"
#include "tristring/error.hpp"
#include "tristring/moves.hpp"

namespace tristring {

ValidationReport verify_catalog(const SeedCatalog& catalog) {
  ValidationReport report;
  if (!catalog.surface.consistent())
    report.add(rules::kHeaderMismatch, "catalog surface header is inconsistent");
  std::map<CanonicalCode, std::size_t> seen;
  for (std::size_t i = 0; i < catalog.seeds.size(); ++i) {
    const Seed& seed = catalog.seeds[i];
    const std::string prefix = "seed " + std::to_string(i) + ": ";
    const auto& t = seed.triangulation;
    const auto validation = validate_triangulation(t);
    if (!validation.valid()) {
      report.append(validation, prefix);
      continue;
    }
    if (seed.declared_edges && *seed.declared_edges != t.n_edges())
      report.add(rules::kHeaderMismatch, prefix + "declares " + std::to_string(*seed.declared_edges) +
                                             " edges, rotation has " + std::to_string(t.n_edges()));
    const SurfaceSpec actual = surface_of(t);
    if (seed.declared_orientable && *seed.declared_orientable != actual.orientable)
      report.add(rules::kHeaderMismatch, prefix + "orientable flag disagrees with the embedding");
    if (actual != catalog.surface)
      report.add(rules::kSurfaceMismatch, prefix + "embeds in the " + actual.name() + ", catalog is for the " +
                                              catalog.surface.name());
    if (!is_irreducible(t)) report.add(rules::kSeedNotIrreducible, prefix + "seed not irreducible");
    const auto [it, fresh] = seen.emplace(canonical_code_unchecked(t), i);
    if (!fresh)
      report.add(rules::kDuplicateSeed, prefix + "isomorphic to seed " + std::to_string(it->second));
  }
  return report;
}

EmbeddedTriangulation tetrahedron() {
  return EmbeddedTriangulation({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

EmbeddedTriangulation triangular_bipyramid() {
  return EmbeddedTriangulation({{1, 3, 2, 4}, {3, 0, 4, 2}, {3, 1, 4, 0}, {0, 1, 2}, {0, 2, 1}});
}

EmbeddedTriangulation octahedron() {
  // Poles 0 and 5 around the equator 1-2-3-4.
  return EmbeddedTriangulation(
      {{1, 2, 3, 4}, {0, 4, 5, 2}, {0, 1, 5, 3}, {0, 2, 5, 4}, {0, 3, 5, 1}, {1, 4, 3, 2}});
}

EmbeddedTriangulation k7_torus() {
  std::vector<std::vector<Vertex>> rotation(7);
  // Neighbour offsets i+1, i+3, i+2, i+6, i+4, i+5 give the triangles
  // {i, i+1, i+3} and {i, i+2, i+3}.
  for (Vertex i = 0; i < 7; ++i)
    for (int offset : {1, 3, 2, 6, 4, 5}) rotation[i].push_back((i + offset) % 7);
  return EmbeddedTriangulation(std::move(rotation));
}

EmbeddedTriangulation k6_projective_plane() {
  // Hemi-icosahedron: a wheel around 0 with the antipodal rim identifications.
  return EmbeddedTriangulation(
      {{1, 2, 3, 4, 5}, {5, 3, 4, 2, 0}, {0, 1, 4, 5, 3}, {0, 2, 5, 1, 4}, {0, 3, 1, 2, 5}, {0, 4, 2, 3, 1}},
      {Edge(1, 3), Edge(1, 4), Edge(2, 4), Edge(2, 5), Edge(3, 5)});
}

SeedCatalog builtin_catalog(const SurfaceSpec& surface) {
  if (surface == SurfaceSpec::sphere()) return {surface, {{tetrahedron(), "K4, the tetrahedron", 6, true}}};
  if (surface == SurfaceSpec::torus())
    return {surface, {{k7_torus(), "K7 in the torus; the other 20 irreducible seeds ship in torus.cat", 21, true}}};
  if (surface == SurfaceSpec::projective_plane())
    return {surface,
            {{k6_projective_plane(), "K6 in the projective plane; the 7-vertex seed ships in projective_plane.cat",
              15, false}}};
  throw InvalidArgument("no built-in catalog for the " + surface.name());
}

}  // namespace tristring
