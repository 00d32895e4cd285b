#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "tristring/big_integer.hpp"

namespace tristring {

using Vertex = int;

/// Unordered vertex pair, stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws InvalidArgument on loops, parallel edges or out-of-range endpoints.
  SimpleGraph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_vertices_; }
  std::size_t n_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool is_connected() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_vertices_ = 0;
  std::vector<Edge> edges_;                   // sorted
  std::vector<std::vector<Vertex>> adjacency_;  // sorted per vertex
};

/// Multigraph with loops; only used by the Tutte recursion.
struct MultiGraph {
  int n_vertices = 0;
  std::vector<Edge> edges;

  MultiGraph() = default;
  MultiGraph(int n, std::vector<Edge> e);
  explicit MultiGraph(const SimpleGraph& g);

  bool is_connected() const;
};

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(int dimension) : dim_(dimension), entries_(std::size_t(dimension) * dimension) {}

  int dimension() const { return dim_; }
  BigInt& operator()(int row, int col) { return entries_[std::size_t(row) * dim_ + col]; }
  const BigInt& operator()(int row, int col) const { return entries_[std::size_t(row) * dim_ + col]; }

  /// Copy with row and column `index` removed.
  IntegerMatrix minor(int index) const;

  bool operator==(const IntegerMatrix&) const = default;

 private:
  int dim_ = 0;
  std::vector<BigInt> entries_;
};

SimpleGraph complete_graph(int n);

IntegerMatrix laplacian(const SimpleGraph& g);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The empty matrix has determinant 1.
BigInt determinant(IntegerMatrix m);

/// det of the Laplacian with row and column v removed. 0 for disconnected graphs.
BigInt laplacian_minor_det(const SimpleGraph& g, Vertex v);

/// Number of spanning trees (Matrix-Tree theorem); 0 if g is disconnected.
BigInt spanning_tree_count(const SimpleGraph& g);

}  // namespace tristring
