#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "tristring/io.hpp"
#include "tristring/moves.hpp"

namespace fixture {

using namespace tristring;

std::string data_path(const std::string& file) { return std::string(TRISTRING_DATA_DIR) + "/" + file; }

SeedCatalog load_data_catalog(const std::string& file) { return load_catalog(data_path(file)); }

EmbeddedTriangulation random_splits(std::mt19937_64& rng, EmbeddedTriangulation t, int n_splits) {
  for (int i = 0; i < n_splits; ++i) {
    std::uniform_int_distribution<int> pick_vertex(0, t.n_vertices() - 1);
    std::vector<SplitDescriptor> splits;
    while (splits.empty()) splits = enumerate_splits(t, pick_vertex(rng));
    std::uniform_int_distribution<std::size_t> pick(0, splits.size() - 1);
    t = apply_split(t, splits[pick(rng)]);
  }
  return t;
}

std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

EmbeddedTriangulation random_switching(std::mt19937_64& rng, const EmbeddedTriangulation& t) {
  std::bernoulli_distribution coin(0.5);
  EmbeddedTriangulation out = t;
  for (Vertex v = 0; v < t.n_vertices(); ++v)
    if (coin(rng)) out = switch_vertex(out, v);
  return out;
}

}  // namespace fixture
