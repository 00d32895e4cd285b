#include "tristring/tutte.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tristring/error.hpp"

namespace tristring {

namespace {

using Key = std::vector<int>;

class TutteSolver {
 public:
  BivariatePolynomial solve(MultiGraph g) {
    normalize(g);
    Key key = make_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BivariatePolynomial result;
    const auto loops = std::count_if(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.is_loop(); });
    if (loops > 0) {
      // Each loop contributes a factor y; strip them all at once.
      std::erase_if(g.edges, [](const Edge& e) { return e.is_loop(); });
      result = solve(g).shifted(0, static_cast<int>(loops));
    } else if (g.edges.empty()) {
      result = BivariatePolynomial::constant(1);
    } else {
      const Edge e = g.edges.back();
      MultiGraph deleted = g;
      deleted.edges.pop_back();
      if (is_bridge(deleted, e)) {
        result = solve(contract(deleted, e)).shifted(1, 0);
      } else {
        result = solve(deleted) + solve(contract(deleted, e));
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Relabel vertices by first appearance in the sorted edge list so that
  // equivalent intermediate graphs share memo entries more often.
  static void normalize(MultiGraph& g) {
    std::sort(g.edges.begin(), g.edges.end());
    std::vector<int> label(g.n_vertices, -1);
    int next = 0;
    for (const Edge& e : g.edges) {
      if (label[e.u] < 0) label[e.u] = next++;
      if (label[e.v] < 0) label[e.v] = next++;
    }
    for (int& l : label)
      if (l < 0) l = next++;
    for (Edge& e : g.edges) e = Edge(label[e.u], label[e.v]);
    std::sort(g.edges.begin(), g.edges.end());
  }

  static Key make_key(const MultiGraph& g) {
    Key key;
    key.reserve(1 + 2 * g.edges.size());
    key.push_back(g.n_vertices);
    for (const Edge& e : g.edges) {
      key.push_back(e.u);
      key.push_back(e.v);
    }
    return key;
  }

  // True when e's endpoints are disconnected in `without` (the graph minus e).
  static bool is_bridge(const MultiGraph& without, const Edge& e) {
    std::vector<std::vector<int>> adj(without.n_vertices);
    for (const Edge& f : without.edges) {
      adj[f.u].push_back(f.v);
      adj[f.v].push_back(f.u);
    }
    std::vector<char> seen(without.n_vertices, 0);
    std::vector<int> stack{e.u};
    seen[e.u] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == e.v) return false;
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    return true;
  }

  // Merge e.v into e.u and drop vertex e.v; parallel copies of e become loops.
  static MultiGraph contract(const MultiGraph& g, const Edge& e) {
    auto relabel = [&](int x) {
      if (x == e.v) x = e.u;
      return x > e.v ? x - 1 : x;
    };
    MultiGraph out;
    out.n_vertices = g.n_vertices - 1;
    out.edges.reserve(g.edges.size());
    for (const Edge& f : g.edges) out.edges.emplace_back(relabel(f.u), relabel(f.v));
    return out;
  }

  std::map<Key, BivariatePolynomial> memo_;
};

}  // namespace

BivariatePolynomial tutte(const MultiGraph& g, std::size_t edge_limit) {
  if (g.edges.size() > edge_limit)
    throw LimitExceeded("tutte: " + std::to_string(g.edges.size()) + " edges exceeds limit of " +
                        std::to_string(edge_limit));
  return TutteSolver{}.solve(g);
}

}  // namespace tristring
