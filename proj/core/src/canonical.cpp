#include "tristring/canonical.hpp"

#include <algorithm>
#include <cstdio>

#include "darts.hpp"
#include "tristring/error.hpp"

namespace tristring {

namespace {

// Code layout: n_vertices, then for each vertex in BFS order its degree followed
// by one word per incident edge: 2 * neighbour_label + (effective sign < 0).
class CodeBuilder {
 public:
  CodeBuilder(const EmbeddedTriangulation& t, const detail::DartIndex& index)
      : t_(t), index_(index), label_(t.n_vertices()), local_(t.n_vertices()), start_(t.n_vertices()),
        order_(t.n_vertices()) {}

  // Builds the code rooted at (root, slot, orientation). Returns false as soon
  // as the partial code exceeds `best`; `out` then holds a truncated prefix.
  bool build(Vertex root, int slot, int orientation, const std::vector<std::uint32_t>* best,
             std::vector<std::uint32_t>& out) {
    const int n = t_.n_vertices();
    std::fill(label_.begin(), label_.end(), -1);
    out.clear();
    bool tied = best != nullptr;  // still equal to the best prefix
    auto emit = [&](std::uint32_t w) {
      if (tied) {
        const std::uint32_t b = (*best)[out.size()];
        if (w > b) return false;
        if (w < b) tied = false;
      }
      out.push_back(w);
      return true;
    };

    int next = 0;
    label_[root] = next;
    order_[next++] = root;
    local_[root] = orientation;
    start_[root] = slot;
    if (!emit(static_cast<std::uint32_t>(n))) return false;
    for (int head = 0; head < n; ++head) {
      if (head >= next) return false;  // disconnected; never for valid input
      const Vertex x = order_[head];
      const int d = t_.degree(x);
      if (!emit(static_cast<std::uint32_t>(d))) return false;
      for (int k = 0; k < d; ++k) {
        const int s = ((start_[x] + local_[x] * k) % d + d) % d;
        const Vertex y = t_.rotation(x)[s];
        const int sign = index_.sign(x, s);
        if (label_[y] < 0) {
          label_[y] = next;
          order_[next++] = y;
          local_[y] = local_[x] * sign;
          start_[y] = index_.twin(x, s);
        }
        const bool reversed = sign * local_[x] * local_[y] < 0;
        if (!emit(2u * static_cast<std::uint32_t>(label_[y]) + (reversed ? 1u : 0u))) return false;
      }
    }
    return true;
  }

 private:
  const EmbeddedTriangulation& t_;
  const detail::DartIndex& index_;
  std::vector<int> label_;
  std::vector<int> local_;
  std::vector<int> start_;
  std::vector<Vertex> order_;
};

}  // namespace

std::size_t CanonicalCode::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

std::string CanonicalCode::to_hex() const {
  std::string out;
  char buf[16];
  for (std::uint32_t w : words_) {
    std::snprintf(buf, sizeof buf, "%x.", w);
    out += buf;
  }
  if (!out.empty()) out.pop_back();
  return out;
}

CanonicalCode canonical_code_unchecked(const EmbeddedTriangulation& t) {
  const detail::DartIndex index(t);
  CodeBuilder builder(t, index);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> candidate;
  bool have_best = false;
  for (Vertex v = 0; v < t.n_vertices(); ++v) {
    for (int slot = 0; slot < t.degree(v); ++slot) {
      for (int orientation : {1, -1}) {
        if (builder.build(v, slot, orientation, have_best ? &best : nullptr, candidate) &&
            (!have_best || candidate < best)) {
          best.swap(candidate);
          have_best = true;
        }
      }
    }
  }
  return CanonicalCode(std::move(best));
}

CanonicalCode canonical_code(const EmbeddedTriangulation& t) {
  if (const auto report = validate_triangulation(t); !report.valid())
    throw InvalidTriangulation("canonical_code: " + report.to_string());
  return canonical_code_unchecked(t);
}

EmbeddedTriangulation from_canonical_code(const CanonicalCode& code) {
  const auto& w = code.words();
  if (w.empty()) throw InvalidArgument("empty canonical code");
  const int n = static_cast<int>(w[0]);
  std::vector<std::vector<Vertex>> rotation(n);
  std::set<Edge> negative;
  std::size_t pos = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (pos >= w.size()) throw InvalidArgument("truncated canonical code");
    const std::uint32_t d = w[pos++];
    if (pos + d > w.size()) throw InvalidArgument("truncated canonical code");
    for (std::uint32_t k = 0; k < d; ++k) {
      const std::uint32_t word = w[pos++];
      const Vertex u = static_cast<Vertex>(word / 2);
      rotation[v].push_back(u);
      if (word & 1u) negative.emplace(v, u);
    }
  }
  return EmbeddedTriangulation(std::move(rotation), std::move(negative));
}

}  // namespace tristring
