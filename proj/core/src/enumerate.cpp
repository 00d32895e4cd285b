#include "tristring/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include <json.hpp>

#include "tristring/error.hpp"
#include "tristring/moves.hpp"

namespace tristring {

namespace {

using CodeSet = std::set<CanonicalCode>;

void expand(const std::vector<EmbeddedTriangulation>& parents, unsigned workers, CodeSet& out) {
  const unsigned n_workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(parents.size())));
  std::vector<CodeSet> local(n_workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned id) {
    for (std::size_t i = next++; i < parents.size(); i = next++) {
      const auto& parent = parents[i];
      for (Vertex v = 0; v < parent.n_vertices(); ++v)
        for (const auto& d : enumerate_splits(parent, v))
          local[id].insert(canonical_code_unchecked(apply_split(parent, d)));
    }
  };
  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < n_workers; ++id) pool.emplace_back(work, id);
  }
  for (auto& s : local) out.merge(s);
}

std::vector<EmbeddedTriangulation> decode(const CodeSet& codes) {
  std::vector<EmbeddedTriangulation> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(from_canonical_code(c));
  return out;
}

}  // namespace

Enumerator::Enumerator(const SeedCatalog& catalog, unsigned workers)
    : surface_(catalog.surface), workers_(std::max(1u, workers)) {
  if (const auto report = verify_catalog(catalog); !report.valid())
    throw CatalogError("catalog failed verification:\n" + report.to_string());
  if (catalog.seeds.empty()) throw CatalogError("catalog has no seeds");
  for (const auto& seed : catalog.seeds)
    seeds_by_size_[seed.triangulation.n_vertices()].push_back(seed.triangulation);
  first_level_ = seeds_by_size_.begin()->first;
  CodeSet first;
  for (const auto& t : seeds_by_size_.begin()->second) first.insert(canonical_code_unchecked(t));
  levels_.push_back(decode(first));
}

const std::vector<EmbeddedTriangulation>& Enumerator::level(int n_vertices) const {
  if (n_vertices < first_level_ || n_vertices > last_level())
    throw InvalidArgument("level " + std::to_string(n_vertices) + " has not been enumerated");
  return levels_[n_vertices - first_level_];
}

const std::vector<EmbeddedTriangulation>& Enumerator::advance() {
  const int n = last_level() + 1;
  CodeSet codes;
  expand(levels_.back(), workers_, codes);
  if (auto it = seeds_by_size_.find(n); it != seeds_by_size_.end())
    for (const auto& t : it->second) codes.insert(canonical_code_unchecked(t));
  levels_.push_back(decode(codes));
  return levels_.back();
}

EnumerationResult enumerate_up_to(const SeedCatalog& catalog, int max_vertices, unsigned workers,
                                  bool keep_classes) {
  Enumerator enumerator(catalog, workers);
  int largest_seed = 0;
  for (const auto& seed : catalog.seeds) largest_seed = std::max(largest_seed, seed.triangulation.n_vertices());
  if (max_vertices < largest_seed)
    throw InvalidArgument("max_vertices " + std::to_string(max_vertices) + " is below seed size " +
                          std::to_string(largest_seed));
  EnumerationResult result;
  result.surface = catalog.surface;
  for (int n = enumerator.first_level(); n <= max_vertices; ++n) {
    const auto& level = n == enumerator.first_level() ? enumerator.level(n) : enumerator.advance();
    result.counts[n] = level.size();
    if (keep_classes) result.classes[n] = level;
  }
  return result;
}

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const int n = a.n_vertices();
  if (n != b.n_vertices() || a.n_edges() != b.n_edges()) return false;
  auto signature = [](const SimpleGraph& g, Vertex v) {
    std::vector<int> s{g.degree(v)};
    for (Vertex u : g.neighbors(v)) s.push_back(g.degree(u));
    std::sort(s.begin() + 1, s.end());
    return s;
  };
  std::vector<std::vector<int>> sig_a(n), sig_b(n);
  for (Vertex v = 0; v < n; ++v) {
    sig_a[v] = signature(a, v);
    sig_b[v] = signature(b, v);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || sig_a[v] != sig_b[w]) continue;
      bool ok = true;
      for (Vertex u : a.neighbors(v))
        if (u < v && !b.has_edge(map[u], w)) {
          ok = false;
          break;
        }
      if (ok) {
        // Mapped non-neighbours must stay non-adjacent.
        for (Vertex u = 0; u < v && ok; ++u)
          if (!a.has_edge(u, v) && b.has_edge(map[u], w)) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

namespace {

// Sorted list of (degree, sorted neighbour degrees) over all vertices.
std::vector<std::vector<int>> degree_invariant(const SimpleGraph& g) {
  std::vector<std::vector<int>> rows;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    std::vector<int> row;
    for (Vertex u : g.neighbors(v)) row.push_back(g.degree(u));
    std::sort(row.begin(), row.end());
    row.insert(row.begin(), g.degree(v));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

std::map<int, std::size_t> graph_isomorphism_counts(const EnumerationResult& result) {
  std::map<int, std::size_t> counts;
  for (const auto& [n, level] : result.classes) {
    // Only graphs with equal degree invariants need the backtracking test.
    std::map<std::vector<std::vector<int>>, std::vector<SimpleGraph>> buckets;
    std::size_t count = 0;
    for (const auto& t : level) {
      SimpleGraph g = t.graph();
      auto& reps = buckets[degree_invariant(g)];
      if (std::none_of(reps.begin(), reps.end(), [&](const SimpleGraph& r) { return graphs_isomorphic(r, g); })) {
        reps.push_back(std::move(g));
        ++count;
      }
    }
    counts[n] = count;
  }
  return counts;
}

std::string to_json(const EnumerationResult& result) {
  nlohmann::ordered_json j;
  j["surface"] = result.surface.name();
  j["orientable"] = result.surface.orientable;
  j["euler_characteristic"] = result.surface.euler_characteristic;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [n, c] : result.counts) counts[std::to_string(n)] = c;
  j["counts"] = counts;
  return j.dump(2) + "\n";
}

}  // namespace tristring
