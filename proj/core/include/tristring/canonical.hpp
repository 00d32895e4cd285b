#pragma once

#include <compare>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "tristring/surface.hpp"

namespace tristring {

/// Isomorphism-class key of an embedded triangulation. Two valid triangulations
/// have equal codes iff some vertex bijection maps one signed rotation system
/// onto the other, up to a global reflection and local orientation switches.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint32_t> words) : words_(std::move(words)) {}

  const std::vector<std::uint32_t>& words() const { return words_; }
  std::size_t hash() const;
  std::string to_hex() const;

  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::vector<std::uint32_t> words_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const { return c.hash(); }
};

/// Lexicographic minimum, over every rooted dart and both traversal directions,
/// of a breadth-first relabelling of the rotation system. Signs are normalised
/// along the BFS tree, so switch-equivalent embeddings agree.
/// Throws InvalidTriangulation when t does not validate.
CanonicalCode canonical_code(const EmbeddedTriangulation& t);

/// Same as canonical_code but skips validation; t must be a valid triangulation.
CanonicalCode canonical_code_unchecked(const EmbeddedTriangulation& t);

/// Rebuilds the canonically labelled representative described by a code.
EmbeddedTriangulation from_canonical_code(const CanonicalCode& code);

}  // namespace tristring
