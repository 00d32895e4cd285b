#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tristring/canonical.hpp"
#include "tristring/catalog.hpp"

namespace tristring {

struct EnumerationResult {
  SurfaceSpec surface;
  /// Vertex count -> number of embedding-isomorphism classes.
  std::map<int, std::size_t> counts;
  /// Canonically labelled representatives per vertex count, sorted by canonical code.
  std::map<int, std::vector<EmbeddedTriangulation>> classes;
};

/// Level-by-level closure of a seed catalog under vertex splitting, deduplicated
/// by canonical code. Level n holds the seeds with n vertices plus every split of
/// level n-1. Results do not depend on the worker count.
class Enumerator {
 public:
  /// Verifies the catalog first; throws CatalogError with the report on failure.
  explicit Enumerator(const SeedCatalog& catalog, unsigned workers = 1);

  const SurfaceSpec& surface() const { return surface_; }
  int first_level() const { return first_level_; }
  /// Highest vertex count built so far.
  int last_level() const { return first_level_ + static_cast<int>(levels_.size()) - 1; }
  const std::vector<EmbeddedTriangulation>& level(int n_vertices) const;

  /// Builds level last_level() + 1 and returns it.
  const std::vector<EmbeddedTriangulation>& advance();

 private:
  SurfaceSpec surface_;
  std::map<int, std::vector<EmbeddedTriangulation>> seeds_by_size_;
  std::vector<std::vector<EmbeddedTriangulation>> levels_;
  int first_level_ = 0;
  unsigned workers_ = 1;
};

/// Throws CatalogError for a bad catalog and InvalidArgument when max_vertices is
/// below the largest seed.
EnumerationResult enumerate_up_to(const SeedCatalog& catalog, int max_vertices, unsigned workers = 1,
                                  bool keep_classes = true);

/// Number of classes per vertex count when triangulations are identified by
/// abstract graph isomorphism instead of embedding isomorphism.
std::map<int, std::size_t> graph_isomorphism_counts(const EnumerationResult& result);

/// True iff some bijection of vertices maps the edges of a onto the edges of b.
bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// {"surface": ..., "counts": {"4": 1, ...}} with stable key order.
std::string to_json(const EnumerationResult& result);

}  // namespace tristring
