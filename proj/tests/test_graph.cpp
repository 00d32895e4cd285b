#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tristring/error.hpp"
#include "tristring/graph.hpp"

using namespace tristring;

namespace {

SimpleGraph path3() { return SimpleGraph(3, {{0, 1}, {1, 2}}); }
SimpleGraph cycle3() { return SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("complete_graph sizes") {
  CHECK(complete_graph(4).n_vertices() == 4);
  CHECK(complete_graph(4).n_edges() == 6);
  CHECK(complete_graph(1).n_vertices() == 1);
  CHECK(complete_graph(1).n_edges() == 0);
  CHECK(complete_graph(7).n_edges() == 21);
  CHECK_THROWS_AS(complete_graph(0), InvalidArgument);
}

TEST_CASE("SimpleGraph rejects loops, parallel edges and bad endpoints") {
  CHECK_THROWS_AS(SimpleGraph(2, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(SimpleGraph(2, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(SimpleGraph(2, {{0, 2}}), InvalidArgument);
  const SimpleGraph g = path3();
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.is_connected());
  CHECK_FALSE(SimpleGraph(3, {{0, 1}}).is_connected());
}

TEST_CASE("laplacian") {
  const auto k2 = laplacian(complete_graph(2));
  CHECK(k2(0, 0) == 1);
  CHECK(k2(0, 1) == -1);
  CHECK(k2(1, 0) == -1);
  CHECK(k2(1, 1) == 1);

  const auto k4 = laplacian(complete_graph(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(k4(i, j) == (i == j ? 3 : -1));

  const auto empty = laplacian(SimpleGraph(3, {}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(empty(i, j) == 0);
}

TEST_CASE("determinant") {
  IntegerMatrix m(3);
  // [[0,2,1],[1,0,3],[4,1,0]] needs a row swap at the first pivot; det = 25 by cofactor expansion.
  const int values[3][3] = {{0, 2, 1}, {1, 0, 3}, {4, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = values[i][j];
  CHECK(determinant(m) == 25);
  CHECK(determinant(IntegerMatrix(0)) == 1);
  IntegerMatrix singular(2);
  singular(0, 0) = 2;
  singular(0, 1) = 4;
  singular(1, 0) = 1;
  singular(1, 1) = 2;
  CHECK(determinant(singular) == 0);
}

TEST_CASE("laplacian_minor_det examples") {
  for (Vertex v = 0; v < 4; ++v) CHECK(laplacian_minor_det(complete_graph(4), v) == 16);
  for (Vertex v = 0; v < 3; ++v) CHECK(laplacian_minor_det(cycle3(), v) == 3);
  const SimpleGraph k6 = complete_graph(6);
  CHECK(oracle::brute_force_spanning_trees(k6) == 1296);
  for (Vertex v = 0; v < 6; ++v) CHECK(laplacian_minor_det(k6, v) == 1296);
  CHECK_THROWS_AS(laplacian_minor_det(k6, 6), InvalidArgument);
  CHECK_THROWS_AS(laplacian_minor_det(k6, -1), InvalidArgument);
}

TEST_CASE("spanning_tree_count examples") {
  CHECK(spanning_tree_count(complete_graph(4)) == 16);
  CHECK(spanning_tree_count(path3()) == 1);
  const SimpleGraph k7 = complete_graph(7);
  CHECK(spanning_tree_count(k7) == 16807);
  CHECK(laplacian_minor_det(k7, 0) == laplacian_minor_det(k7, 5));
  CHECK(spanning_tree_count(SimpleGraph(3, {{0, 1}})) == 0);
  CHECK(spanning_tree_count(complete_graph(1)) == 1);
}

TEST_CASE("Cayley's formula n^(n-2)") {
  for (int n = 2; n <= 24; ++n) {
    BigInt expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    CHECK(spanning_tree_count(complete_graph(n)) == expected);
  }
}

TEST_CASE("large counts stay exact") {
  // K40 has 40^38 spanning trees, far beyond 64 bits.
  BigInt expected = 1;
  for (int i = 0; i < 38; ++i) expected *= 40;
  CHECK(spanning_tree_count(complete_graph(40)) == expected);
  CHECK(to_string(expected).size() == 61);
}

TEST_CASE("determinant count matches brute force on every labelled graph with at most 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) edges.push_back(all[i]);
      const SimpleGraph g(n, edges);
      CHECK(spanning_tree_count(g) == oracle::brute_force_spanning_trees(g));
    }
  }
}

TEST_CASE("minor determinant does not depend on the deleted vertex") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const SimpleGraph g = oracle::random_connected_graph(rng, n, 0.3);
    const BigInt reference = laplacian_minor_det(g, 0);
    CHECK(reference > 0);
    for (Vertex v = 1; v < n; ++v) CHECK(laplacian_minor_det(g, v) == reference);
  }
}

TEST_CASE("log_of and to_double on big integers") {
  BigInt x = 1;
  for (int i = 0; i < 1500; ++i) x *= 3;
  CHECK(log_of(x) == doctest::Approx(1500 * std::log(3.0)).epsilon(1e-14));
  CHECK(log_of(BigInt(16)) == doctest::Approx(std::log(16.0)));
  CHECK(std::isinf(to_double(x)));
  CHECK(to_double(-x) < 0);
  CHECK(to_double(BigInt(16807)) == 16807.0);
  CHECK_THROWS_AS(log_of(BigInt(0)), InvalidArgument);
}
