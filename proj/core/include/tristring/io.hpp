#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "tristring/catalog.hpp"
#include "tristring/graph.hpp"
#include "tristring/surface.hpp"

namespace tristring {

// Graph text: "n m", then m lines "u v" (0-based).
SimpleGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const SimpleGraph& g);

// Embedding text: "V E orientable_flag", then V lines "v: n1 n2 ... nd" giving the
// cyclic rotation at v, then optional "sign u v s" lines with s in {+1, -1}.
struct EmbeddingFile {
  EmbeddedTriangulation triangulation;
  std::size_t declared_edges = 0;
  bool declared_orientable = true;
};
EmbeddingFile read_embedding(std::istream& in);
void write_embedding(std::ostream& out, const EmbeddedTriangulation& t);

// Catalog: "surface orientable_flag euler_characteristic n_seeds", then n_seeds
// embedding blocks, each preceded by "# provenance: <text>".
SeedCatalog read_catalog(std::istream& in);
void write_catalog(std::ostream& out, const SeedCatalog& catalog);

SimpleGraph load_graph(const std::string& path);
EmbeddingFile load_embedding(const std::string& path);
SeedCatalog load_catalog(const std::string& path);

/// Kinds of text file, judged from the first non-comment line.
enum class FileKind { kGraph, kEmbedding, kCatalog, kUnknown };
FileKind detect_file_kind(std::istream& in);

}  // namespace tristring
