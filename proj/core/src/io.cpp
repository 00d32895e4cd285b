#include "tristring/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "tristring/error.hpp"

namespace tristring {

namespace {

// Line reader that tracks line numbers and skips blank lines. Comment lines
// ("#...") are returned so the catalog reader can pick up provenance.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next(bool skip_comments = true) {
    if (pending_) {
      auto line = std::move(*pending_);
      pending_.reset();
      if (!(skip_comments && is_comment(line))) return line;
    }
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (is_blank(line)) continue;
      if (skip_comments && is_comment(line)) continue;
      return line;
    }
    return std::nullopt;
  }
  void push_back(std::string line) { pending_ = std::move(line); }
  int line() const { return line_no_; }

  static bool is_comment(const std::string& line) {
    const auto p = line.find_first_not_of(" \t");
    return p != std::string::npos && line[p] == '#';
  }
  static bool is_blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

 private:
  std::istream& in_;
  std::optional<std::string> pending_;
  int line_no_ = 0;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream s(line);
  std::vector<std::string> out;
  for (std::string tok; s >> tok;) out.push_back(tok);
  return out;
}

long parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("expected an integer, got '" + tok + "'", line);
}

EmbeddingFile read_embedding_block(LineReader& reader) {
  const auto header = reader.next();
  if (!header) throw ParseError("missing embedding header", reader.line());
  const auto h = split(*header);
  if (h.size() != 3) throw ParseError("embedding header must be 'V E orientable_flag'", reader.line());
  const long n = parse_int(h[0], reader.line());
  const long e = parse_int(h[1], reader.line());
  const long flag = parse_int(h[2], reader.line());
  if (n < 1 || e < 0 || (flag != 0 && flag != 1)) throw ParseError("bad embedding header values", reader.line());

  std::vector<std::vector<Vertex>> rotation(n);
  for (long v = 0; v < n; ++v) {
    const auto line = reader.next();
    if (!line) throw ParseError("expected rotation line for vertex " + std::to_string(v), reader.line());
    const auto colon = line->find(':');
    if (colon == std::string::npos) throw ParseError("rotation line must be 'v: n1 n2 ...'", reader.line());
    const auto label = split(line->substr(0, colon));
    if (label.size() != 1 || parse_int(label[0], reader.line()) != v)
      throw ParseError("expected rotation for vertex " + std::to_string(v), reader.line());
    for (const auto& tok : split(line->substr(colon + 1)))
      rotation[v].push_back(static_cast<Vertex>(parse_int(tok, reader.line())));
  }

  std::set<Edge> negative;
  while (auto line = reader.next(false)) {
    const auto tok = split(*line);
    if (tok.empty() || tok[0] != "sign") {
      reader.push_back(*line);
      break;
    }
    if (tok.size() != 4) throw ParseError("sign line must be 'sign u v s'", reader.line());
    const long u = parse_int(tok[1], reader.line());
    const long v = parse_int(tok[2], reader.line());
    const long s = parse_int(tok[3], reader.line());
    if (s != 1 && s != -1) throw ParseError("edge sign must be +1 or -1", reader.line());
    if (s < 0) negative.emplace(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return {EmbeddedTriangulation(std::move(rotation), std::move(negative)), static_cast<std::size_t>(e), flag == 1};
}

template <typename Fn>
auto with_file(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  return fn(in);
}

}  // namespace

SimpleGraph read_graph(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.next();
  if (!header) throw ParseError("empty graph file");
  const auto h = split(*header);
  if (h.size() != 2) throw ParseError("graph header must be 'n m'", reader.line());
  const long n = parse_int(h[0], reader.line());
  const long m = parse_int(h[1], reader.line());
  if (n < 0 || m < 0) throw ParseError("negative graph header values", reader.line());
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    const auto line = reader.next();
    if (!line) throw ParseError("expected " + std::to_string(m) + " edge lines", reader.line());
    const auto tok = split(*line);
    if (tok.size() != 2) throw ParseError("edge line must be 'u v'", reader.line());
    edges.emplace_back(static_cast<Vertex>(parse_int(tok[0], reader.line())),
                       static_cast<Vertex>(parse_int(tok[1], reader.line())));
  }
  try {
    return SimpleGraph(static_cast<int>(n), std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << g.n_vertices() << ' ' << g.n_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EmbeddingFile read_embedding(std::istream& in) {
  LineReader reader(in);
  auto file = read_embedding_block(reader);
  if (auto extra = reader.next()) throw ParseError("unexpected trailing content", reader.line());
  return file;
}

void write_embedding(std::ostream& out, const EmbeddedTriangulation& t) {
  out << t.n_vertices() << ' ' << t.n_edges() << ' ' << (is_orientable(t) ? 1 : 0) << '\n';
  for (Vertex v = 0; v < t.n_vertices(); ++v) {
    out << v << ':';
    for (Vertex u : t.rotation(v)) out << ' ' << u;
    out << '\n';
  }
  for (const Edge& e : t.negative_edges()) out << "sign " << e.u << ' ' << e.v << " -1\n";
}

SeedCatalog read_catalog(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.next();
  if (!header) throw ParseError("empty catalog");
  const auto h = split(*header);
  if (h.size() != 4)
    throw ParseError("catalog header must be 'surface orientable_flag euler_characteristic n_seeds'", reader.line());
  const long flag = parse_int(h[1], reader.line());
  const long chi = parse_int(h[2], reader.line());
  const long n_seeds = parse_int(h[3], reader.line());
  if ((flag != 0 && flag != 1) || n_seeds < 0) throw ParseError("bad catalog header values", reader.line());

  SeedCatalog catalog;
  try {
    catalog.surface = SurfaceSpec::from_euler(flag == 1, static_cast<int>(chi));
    if (SurfaceSpec::from_name(h[0]) != catalog.surface)
      throw ParseError("surface name '" + h[0] + "' disagrees with its orientability and Euler characteristic", 1);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 1);
  }

  for (long i = 0; i < n_seeds; ++i) {
    std::string provenance;
    while (auto line = reader.next(false)) {
      if (!LineReader::is_comment(*line)) {
        reader.push_back(*line);
        break;
      }
      const auto p = line->find("provenance:");
      if (p != std::string::npos) {
        provenance = line->substr(p + 11);
        const auto first = provenance.find_first_not_of(" \t");
        provenance = first == std::string::npos ? "" : provenance.substr(first);
      }
    }
    auto block = read_embedding_block(reader);
    catalog.seeds.push_back({std::move(block.triangulation), std::move(provenance), block.declared_edges,
                             block.declared_orientable});
  }
  if (auto extra = reader.next()) throw ParseError("more seed blocks than the header declares", reader.line());
  return catalog;
}

void write_catalog(std::ostream& out, const SeedCatalog& catalog) {
  const SurfaceSpec& s = catalog.surface;
  out << s.name() << ' ' << (s.orientable ? 1 : 0) << ' ' << s.euler_characteristic << ' ' << catalog.seeds.size()
      << '\n';
  for (const Seed& seed : catalog.seeds) {
    out << "# provenance: " << seed.provenance << '\n';
    write_embedding(out, seed.triangulation);
  }
}

SimpleGraph load_graph(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_graph(in); });
}

EmbeddingFile load_embedding(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_embedding(in); });
}

SeedCatalog load_catalog(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_catalog(in); });
}

FileKind detect_file_kind(std::istream& in) {
  LineReader reader(in);
  const auto first = reader.next();
  if (!first) return FileKind::kUnknown;
  const auto tok = split(*first);
  if (tok.empty()) return FileKind::kUnknown;
  const bool numeric = std::isdigit(static_cast<unsigned char>(tok[0][0])) != 0;
  if (!numeric && tok.size() == 4) return FileKind::kCatalog;
  if (numeric && tok.size() == 2) return FileKind::kGraph;
  if (numeric && tok.size() == 3) return FileKind::kEmbedding;
  return FileKind::kUnknown;
}

}  // namespace tristring
