#include "tristring/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "tristring/error.hpp"

namespace tristring {

namespace {

bool connected(int n, std::span<const Edge> edges) {
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const Edge& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

SimpleGraph::SimpleGraph(int n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)), adjacency_(std::max(n_vertices, 0)) {
  if (n_vertices < 0) throw InvalidArgument("negative vertex count");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= n_vertices)
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} out of range");
    if (e.is_loop()) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    if (i > 0 && edges_[i - 1] == e)
      throw InvalidArgument("parallel edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_vertices_ || b >= n_vertices_) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

bool SimpleGraph::is_connected() const { return connected(n_vertices_, edges_); }

MultiGraph::MultiGraph(int n, std::vector<Edge> e) : n_vertices(n), edges(std::move(e)) {
  for (const Edge& edge : edges)
    if (edge.u < 0 || edge.v >= n) throw InvalidArgument("multigraph edge out of range");
}

MultiGraph::MultiGraph(const SimpleGraph& g)
    : n_vertices(g.n_vertices()), edges(g.edges().begin(), g.edges().end()) {}

bool MultiGraph::is_connected() const { return connected(n_vertices, edges); }

IntegerMatrix IntegerMatrix::minor(int index) const {
  if (index < 0 || index >= dim_) throw InvalidArgument("minor index out of range");
  IntegerMatrix out(dim_ - 1);
  for (int r = 0, rr = 0; r < dim_; ++r) {
    if (r == index) continue;
    for (int c = 0, cc = 0; c < dim_; ++c) {
      if (c == index) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

SimpleGraph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(std::size_t(n) * (n - 1) / 2);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return SimpleGraph(n, std::move(edges));
}

IntegerMatrix laplacian(const SimpleGraph& g) {
  IntegerMatrix m(g.n_vertices());
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) -= 1;
    m(e.v, e.u) -= 1;
    m(e.u, e.u) += 1;
    m(e.v, e.v) += 1;
  }
  return m;
}

BigInt determinant(IntegerMatrix m) {
  const int n = m.dimension();
  if (n == 0) return 1;
  BigInt previous = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt laplacian_minor_det(const SimpleGraph& g, Vertex v) {
  if (v < 0 || v >= g.n_vertices())
    throw InvalidArgument("laplacian_minor_det: vertex " + std::to_string(v) + " out of range");
  if (!g.is_connected()) return 0;
  return determinant(laplacian(g).minor(v));
}

BigInt spanning_tree_count(const SimpleGraph& g) {
  if (!g.is_connected()) return 0;
  return laplacian_minor_det(g, 0);
}

}  // namespace tristring
