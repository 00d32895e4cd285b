#pragma once

#include <cstddef>

#include "tristring/graph.hpp"
#include "tristring/polynomial.hpp"

namespace tristring {

inline constexpr std::size_t kDefaultTutteEdgeLimit = 18;

/// Tutte polynomial by deletion-contraction, memoized on the sorted edge multiset.
/// Throws LimitExceeded when g has more than edge_limit edges.
BivariatePolynomial tutte(const MultiGraph& g, std::size_t edge_limit = kDefaultTutteEdgeLimit);

inline BivariatePolynomial tutte(const SimpleGraph& g, std::size_t edge_limit = kDefaultTutteEdgeLimit) {
  return tutte(MultiGraph(g), edge_limit);
}

inline BigInt tutte_eval(const BivariatePolynomial& p, const BigInt& x, const BigInt& y) {
  return p.evaluate(x, y);
}

}  // namespace tristring
