#pragma once

#include <vector>

#include "tristring/surface.hpp"

namespace tristring::detail {

/// Slot lookup for a structurally sound rotation system: twin(v, i) is the slot
/// of v in the rotation of rotation(v)[i]; sign(v, i) is that edge's sign.
class DartIndex {
 public:
  /// Throws StructuralError if the rotation is not symmetric and duplicate-free.
  explicit DartIndex(const EmbeddedTriangulation& t);

  int twin(Vertex v, int slot) const { return twin_[offset_[v] + slot]; }
  int sign(Vertex v, int slot) const { return sign_[offset_[v] + slot]; }
  int dart(Vertex v, int slot) const { return offset_[v] + slot; }
  int n_darts() const { return static_cast<int>(twin_.size()); }

 private:
  std::vector<int> offset_;
  std::vector<int> twin_;
  std::vector<signed char> sign_;
};

/// Structural problems (rotation_mismatch, loop, parallel_edge, sign_invalid).
ValidationReport structural_check(const EmbeddedTriangulation& t);

}  // namespace tristring::detail
