#include "tristring_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ios>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tristring/enumerate.hpp"
#include "tristring/error.hpp"
#include "tristring/io.hpp"
#include "tristring/partition.hpp"
#include "tristring/tutte.hpp"

namespace tristring::cli {

namespace {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

void emit(const std::string& text, const std::string& path, Streams io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw std::ios_base::failure("cannot write '" + path + "'");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FileKind kind_of(const std::string& text) {
  std::istringstream in(text);
  return detect_file_kind(in);
}

SurfaceSpec surface_arg(const std::string& name) {
  try {
    return SurfaceSpec::from_name(name);
  } catch (const InvalidArgument& e) {
    throw CLI::ValidationError("--surface", e.what());
  }
}

// ---- enumerate

struct EnumerateArgs {
  std::string catalog;
  std::string surface = "sphere";
  int max_vertices = 0;
  std::string out;
  bool graph_classes = false;
};

int cmd_enumerate(const EnumerateArgs& a, Streams io) {
  const SeedCatalog catalog = a.catalog.empty() ? builtin_catalog(surface_arg(a.surface)) : load_catalog(a.catalog);
  const auto result = enumerate_up_to(catalog, a.max_vertices, worker_count(), a.graph_classes);
  std::string text = to_json(result);
  if (a.graph_classes) {
    auto j = nlohmann::ordered_json::parse(text);
    auto classes = nlohmann::ordered_json::object();
    for (const auto& [n, count] : graph_isomorphism_counts(result)) classes[std::to_string(n)] = count;
    j["graph_classes"] = std::move(classes);
    text = j.dump(2) + "\n";
  }
  emit(text, a.out, io);
  return kOk;
}

// ---- kappa

struct KappaArgs {
  std::string input;
  bool tutte = false;
  std::size_t edge_limit = kDefaultTutteEdgeLimit;
};

int cmd_kappa(const KappaArgs& a, Streams io) {
  const std::string text = slurp(a.input);
  std::istringstream in(text);
  SimpleGraph g = [&] {
    switch (kind_of(text)) {
      case FileKind::kGraph: return read_graph(in);
      case FileKind::kEmbedding: return read_embedding(in).triangulation.graph();
      default: throw ParseError("expected a graph or embedding file");
    }
  }();
  if (!g.is_connected()) {
    io.err << "error: graph is disconnected, so it has no spanning tree\n";
    return kDisconnected;
  }
  const BigInt kappa = spanning_tree_count(g);
  if (a.tutte) {
    const auto poly = tutte(g, a.edge_limit);
    const BigInt at_one = tutte_eval(poly, 1, 1);
    io.out << poly.to_string() << '\n';
    if (at_one != kappa) {
      io.err << "error: T(1,1) = " << to_string(at_one) << " disagrees with the determinant count "
             << to_string(kappa) << '\n';
      return kInvalidInput;
    }
  }
  io.out << to_string(kappa) << '\n';
  return kOk;
}

// ---- z

struct ZArgs {
  std::string surface;
  std::string mode = "lower-bound";
  std::string catalog;
  double mu = 2.0;
  int dimension = 1;
  std::optional<double> eps;
  std::optional<int> k_max;
  int max_vertices = SeriesConfig{}.max_vertices;
  std::string format = "json";
  std::string tutte_constant = "three-halves-pi";
  std::string out;
};

constexpr int kPartialDefaultKMax = 200;

int cmd_z(const ZArgs& a, Streams io) {
  SeriesConfig cfg;
  cfg.mu = a.mu;
  cfg.dimension = a.dimension;
  cfg.eps = a.eps;
  cfg.k_max = a.k_max;
  cfg.mode = parse_series_mode(a.mode);
  cfg.tutte_constant =
      a.tutte_constant == "three-over-two-pi" ? TutteConstant::kThreeOverTwoPi : TutteConstant::kThreeHalvesPi;
  cfg.max_vertices = a.max_vertices;
  cfg.workers = worker_count();

  switch (cfg.mode) {
    case SeriesMode::kLowerBoundSphere: {
      if (!a.surface.empty() && surface_arg(a.surface) != SurfaceSpec::sphere())
        throw CLI::ValidationError("--surface", "the lower-bound series exists only for the sphere");
      const auto result = sphere_lower_bound(cfg);
      emit(a.format == "csv" ? to_csv(result) : to_json(result), a.out, io);
      return kOk;
    }
    case SeriesMode::kExactEnumerated: {
      if (a.catalog.empty()) throw CLI::RequiredError("--catalog (needed by --mode exact)");
      const SeedCatalog catalog = load_catalog(a.catalog);
      const SurfaceSpec surface = a.surface.empty() ? catalog.surface : surface_arg(a.surface);
      if (surface != catalog.surface) {
        io.err << "error: catalog is for the " << catalog.surface.name() << ", not the " << surface.name() << '\n';
        return kInvalidInput;
      }
      const auto result = general_surface_sum(surface, catalog, cfg);
      emit(a.format == "csv" ? to_csv(result) : to_json(result), a.out, io);
      return kOk;
    }
    case SeriesMode::kPartialSingleClass: {
      if (cfg.eps) throw CLI::ValidationError("--eps", "the partial comparison is truncated by --k-max");
      if (!cfg.k_max) cfg.k_max = kPartialDefaultKMax;
      const auto result = partial_comparison(cfg);
      if (a.format == "csv") {
        std::ostringstream csv;
        csv.precision(12);
        csv << "sphere_partial,torus_partial\n" << result.sphere << ',' << result.torus << '\n';
        emit(csv.str(), a.out, io);
      } else {
        emit(to_json(result, cfg), a.out, io);
      }
      return kOk;
    }
  }
  return kUsage;
}

// ---- verify

int cmd_verify(const std::string& path, Streams io) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  ValidationReport report;
  switch (kind_of(text)) {
    case FileKind::kCatalog: {
      const auto catalog = read_catalog(in);
      report = verify_catalog(catalog);
      io.out << catalog.surface.name() << " catalog, " << catalog.seeds.size() << " seed"
             << (catalog.seeds.size() == 1 ? "" : "s") << '\n';
      break;
    }
    case FileKind::kEmbedding: {
      const auto file = read_embedding(in);
      report = validate_triangulation(file.triangulation);
      if (report.valid()) {
        const auto& t = file.triangulation;
        if (file.declared_edges != t.n_edges())
          report.add(rules::kHeaderMismatch, "header declares " + std::to_string(file.declared_edges) +
                                                 " edges, rotations give " + std::to_string(t.n_edges()));
        if (file.declared_orientable != is_orientable(t))
          report.add(rules::kHeaderMismatch, "header orientability flag disagrees with the embedding");
        if (report.valid()) io.out << surface_of(t).name() << ", " << t.n_vertices() << " vertices\n";
      }
      break;
    }
    default:
      io.err << "error: '" << path << "' is neither an embedding nor a catalog\n";
      return kInvalidInput;
  }
  io.out << report.to_string();
  return report.valid() ? kOk : kInvalidInput;
}

int guarded(const std::function<int()>& body, Streams io) {
  try {
    return body();
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::ios_base::failure& e) {
    io.err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ParseError& e) {
    io.err << "error: parse error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CatalogError& e) {
    io.err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace

unsigned worker_count() {
  const unsigned available = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("TRISTRING_THREADS");
  if (!env) return available;
  char* end = nullptr;
  const long requested = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || requested < 1) return available;
  return static_cast<unsigned>(std::min<long>(requested, available));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Streams io{out, err};
  CLI::App app{"Triangulated-surface enumeration, spanning-tree counts and partition sums"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tristring 0.1.0");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "count triangulations by vertex splitting from a seed catalog");
  enumerate->add_option("--catalog", en.catalog, "seed catalog file (default: built-in catalog of --surface)");
  enumerate->add_option("--surface", en.surface, "surface for the built-in catalog")->capture_default_str();
  enumerate->add_option("--max-vertices", en.max_vertices, "largest vertex count to enumerate")->required();
  enumerate->add_option("--out", en.out, "output file (default: stdout)");
  enumerate->add_flag("--graph-classes", en.graph_classes, "also count classes up to graph isomorphism");

  KappaArgs ka;
  auto* kappa = app.add_subcommand("kappa", "spanning-tree count of a graph or embedding file");
  kappa->add_option("input", ka.input, "graph or embedding file")->required();
  kappa->add_flag("--tutte", ka.tutte, "also print the Tutte polynomial and check T(1,1)");
  kappa->add_option("--edge-limit", ka.edge_limit, "largest edge count accepted by --tutte")->capture_default_str();

  ZArgs za;
  auto* z = app.add_subcommand("z", "evaluate a partition sum");
  z->add_option("--surface", za.surface, "sphere, torus, projective-plane, ...");
  z->add_option("--mode", za.mode, "series mode")
      ->check(CLI::IsMember({"lower-bound", "exact", "partial"}))
      ->capture_default_str();
  z->add_option("--catalog", za.catalog, "seed catalog (exact mode)");
  z->add_option("--mu", za.mu, "cosmological constant mu >= 0")->capture_default_str();
  z->add_option("--dim", za.dimension, "embedding dimension D >= 1")->capture_default_str();
  auto* eps = z->add_option("--eps", za.eps, "stop after three consecutive relative terms below eps");
  auto* k_max = z->add_option("--k-max", za.k_max, "last level k of the series");
  eps->excludes(k_max);
  k_max->excludes(eps);
  z->add_option("--max-vertices", za.max_vertices, "vertex cap of exact mode without --k-max")->capture_default_str();
  z->add_option("--format", za.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  z->add_option("--tutte-constant", za.tutte_constant, "square-root constant of the asymptotic sphere count")
      ->check(CLI::IsMember({"three-halves-pi", "three-over-two-pi"}))
      ->capture_default_str();
  z->add_option("--out", za.out, "output file (default: stdout)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "validate an embedding or seed catalog");
  verify->add_option("file", verify_path, "embedding or catalog file")->required();

  // CLI11 consumes a reversed argument vector without the program name.
  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
    if (*enumerate) return guarded([&] { return cmd_enumerate(en, io); }, io);
    if (*kappa) return guarded([&] { return cmd_kappa(ka, io); }, io);
    if (*z) {
      return guarded(
          [&] {
            try {
              return cmd_z(za, io);
            } catch (const InvalidArgument& e) {
              io.err << "error: " << e.what() << '\n';
              return kUsage;
            }
          },
          io);
    }
    if (*verify) return guarded([&] { return cmd_verify(verify_path, io); }, io);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  return kUsage;
}

}  // namespace tristring::cli
