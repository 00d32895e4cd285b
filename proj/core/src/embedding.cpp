#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "darts.hpp"
#include "tristring/error.hpp"
#include "tristring/surface.hpp"

namespace tristring {

EmbeddedTriangulation::EmbeddedTriangulation(std::vector<std::vector<Vertex>> rotation,
                                             std::set<Edge> negative_edges)
    : rotation_(std::move(rotation)), negative_(std::move(negative_edges)) {}

std::size_t EmbeddedTriangulation::n_edges() const {
  std::size_t darts = 0;
  for (const auto& r : rotation_) darts += r.size();
  return darts / 2;
}

std::vector<Edge> EmbeddedTriangulation::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < n_vertices(); ++v)
    for (Vertex u : rotation_[v]) out.emplace_back(v, u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimpleGraph EmbeddedTriangulation::graph() const {
  std::vector<Edge> all;
  for (Vertex v = 0; v < n_vertices(); ++v) {
    for (Vertex u : rotation_[v]) {
      if (u == v) throw InvalidArgument("rotation of vertex " + std::to_string(v) + " names a loop");
      if (v < u) all.emplace_back(v, u);
    }
  }
  return SimpleGraph(n_vertices(), std::move(all));
}

bool ValidationReport::has(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

void ValidationReport::append(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) add(v.rule, prefix + v.detail);
}

std::string ValidationReport::to_string() const {
  if (valid()) return "valid\n";
  std::ostringstream out;
  out << "invalid (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << ")\n";
  for (const auto& v : violations) out << "  [" << v.rule << "] " << v.detail << '\n';
  return out.str();
}

namespace detail {

ValidationReport structural_check(const EmbeddedTriangulation& t) {
  ValidationReport report;
  const int n = t.n_vertices();
  std::set<std::pair<Vertex, Vertex>> darts;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex u : t.rotation(v)) {
      if (u < 0 || u >= n) {
        report.add(rules::kRotationMismatch,
                   "vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(u));
        continue;
      }
      if (u == v) {
        report.add(rules::kLoop, "vertex " + std::to_string(v) + " lists itself");
        continue;
      }
      if (!seen.insert(u).second) {
        report.add(rules::kParallelEdge,
                   "vertex " + std::to_string(v) + " lists neighbour " + std::to_string(u) + " twice");
        continue;
      }
      darts.emplace(v, u);
    }
  }
  for (const auto& [v, u] : darts) {
    if (!darts.contains({u, v}))
      report.add(rules::kRotationMismatch, "vertex " + std::to_string(v) + " lists " + std::to_string(u) +
                                               " but " + std::to_string(u) + " does not list " +
                                               std::to_string(v));
  }
  for (const Edge& e : t.negative_edges()) {
    if (!darts.contains({e.u, e.v}) || !darts.contains({e.v, e.u}))
      report.add(rules::kSignInvalid,
                 "sign given for non-edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  }
  return report;
}

DartIndex::DartIndex(const EmbeddedTriangulation& t) {
  if (auto report = structural_check(t); !report.valid())
    throw StructuralError("malformed rotation system: " + report.violations.front().detail);
  const int n = t.n_vertices();
  offset_.resize(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + t.degree(v);
  twin_.resize(offset_[n]);
  sign_.resize(offset_[n]);
  // slot_of[v] maps neighbour -> slot; degrees are small so a sorted vector suffices.
  std::vector<std::vector<std::pair<Vertex, int>>> slot_of(n);
  for (Vertex v = 0; v < n; ++v) {
    auto rot = t.rotation(v);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) slot_of[v].emplace_back(rot[i], i);
    std::sort(slot_of[v].begin(), slot_of[v].end());
  }
  for (Vertex v = 0; v < n; ++v) {
    auto rot = t.rotation(v);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      const Vertex u = rot[i];
      auto it = std::lower_bound(slot_of[u].begin(), slot_of[u].end(), std::pair<Vertex, int>{v, -1});
      twin_[offset_[v] + i] = it->second;
      sign_[offset_[v] + i] = static_cast<signed char>(t.sign(Edge(v, u)));
    }
  }
}

}  // namespace detail

}  // namespace tristring
