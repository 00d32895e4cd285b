#pragma once

#include <random>
#include <string>
#include <vector>

#include "tristring/catalog.hpp"
#include "tristring/surface.hpp"

namespace fixture {

std::string data_path(const std::string& file);
tristring::SeedCatalog load_data_catalog(const std::string& file);

/// Applies n_splits uniformly chosen valid splits to t.
tristring::EmbeddedTriangulation random_splits(std::mt19937_64& rng, tristring::EmbeddedTriangulation t, int n_splits);

std::vector<tristring::Vertex> random_permutation(std::mt19937_64& rng, int n);

/// Switches a random subset of vertices. Leaves the embedded surface unchanged.
tristring::EmbeddedTriangulation random_switching(std::mt19937_64& rng, const tristring::EmbeddedTriangulation& t);

}  // namespace fixture
