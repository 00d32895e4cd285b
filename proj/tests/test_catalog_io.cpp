#include <doctest.h>

#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "tristring/catalog.hpp"
#include "tristring/error.hpp"
#include "tristring/io.hpp"

using namespace tristring;

namespace {

FileKind kind(const std::string& text) {
  std::istringstream in(text);
  return detect_file_kind(in);
}

}  // namespace

TEST_CASE("graph text round trip") {
  const SimpleGraph g = complete_graph(5);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  const SimpleGraph back = read_graph(in);
  CHECK(back.n_vertices() == 5);
  CHECK(back.n_edges() == 10);
  CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(), g.edges().end()));
}

TEST_CASE("graph parse errors carry line numbers") {
  std::istringstream missing("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(missing), ParseError);
  std::istringstream junk("3 1\n0 x\n");
  try {
    read_graph(junk);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_graph(loop), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_graph(empty), ParseError);
}

TEST_CASE("embedding text round trip keeps signs") {
  const auto k6 = k6_projective_plane();
  std::ostringstream out;
  write_embedding(out, k6);
  CHECK(out.str().rfind("6 15 0\n", 0) == 0);
  std::istringstream in(out.str());
  const auto file = read_embedding(in);
  CHECK(file.triangulation == k6);
  CHECK(file.declared_edges == 15);
  CHECK_FALSE(file.declared_orientable);
}

TEST_CASE("embedding parse errors") {
  std::istringstream bad_sign("4 6 1\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\nsign 0 1 2\n");
  CHECK_THROWS_AS(read_embedding(bad_sign), ParseError);
  std::istringstream short_file("4 6 1\n0: 1 2 3\n");
  CHECK_THROWS_AS(read_embedding(short_file), ParseError);
  std::istringstream bad_header("4 6\n");
  CHECK_THROWS_AS(read_embedding(bad_header), ParseError);
}

TEST_CASE("catalog files") {
  const auto sphere = fixture::load_data_catalog("sphere.cat");
  CHECK(sphere.surface == SurfaceSpec::sphere());
  CHECK(sphere.seeds.size() == 1);
  CHECK(verify_catalog(sphere).valid());

  const auto torus = fixture::load_data_catalog("torus.cat");
  CHECK(torus.surface == SurfaceSpec::torus());
  CHECK(torus.seeds.size() == 21);
  CHECK(verify_catalog(torus).valid());
  std::map<int, int> by_size;
  for (const auto& s : torus.seeds) ++by_size[s.triangulation.n_vertices()];
  CHECK(by_size == std::map<int, int>{{7, 1}, {8, 4}, {9, 15}, {10, 1}});
  CHECK_FALSE(torus.seeds[0].provenance.empty());

  const auto rp2 = fixture::load_data_catalog("projective_plane.cat");
  CHECK(rp2.surface == SurfaceSpec::projective_plane());
  CHECK(rp2.seeds.size() == 2);
  CHECK(verify_catalog(rp2).valid());
}

TEST_CASE("catalog text round trip") {
  const auto torus = fixture::load_data_catalog("torus.cat");
  std::ostringstream out;
  write_catalog(out, torus);
  std::istringstream in(out.str());
  const auto back = read_catalog(in);
  REQUIRE(back.seeds.size() == torus.seeds.size());
  for (std::size_t i = 0; i < back.seeds.size(); ++i) {
    CHECK(back.seeds[i].triangulation == torus.seeds[i].triangulation);
    CHECK(back.seeds[i].provenance == torus.seeds[i].provenance);
  }
}

TEST_CASE("catalog header must name a matching surface") {
  std::istringstream wrong("torus 0 0 0\n");
  CHECK_THROWS_AS(read_catalog(wrong), ParseError);
  std::istringstream impossible("sphere 1 1 0\n");
  CHECK_THROWS_AS(read_catalog(impossible), ParseError);
  std::istringstream extra("sphere 1 2 0\n4 6 1\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
  CHECK_THROWS_AS(read_catalog(extra), ParseError);
}

TEST_CASE("detect_file_kind") {
  CHECK(kind("4 6\n0 1\n") == FileKind::kGraph);
  CHECK(kind("# comment\n4 6 1\n0: 1 2 3\n") == FileKind::kEmbedding);
  CHECK(kind("sphere 1 2 1\n") == FileKind::kCatalog);
  CHECK(kind("hello\n") == FileKind::kUnknown);
  CHECK(kind("") == FileKind::kUnknown);
}

TEST_CASE("missing files raise I/O errors") {
  CHECK_THROWS_AS(load_graph("/nonexistent/file.graph"), std::ios_base::failure);
  CHECK_THROWS_AS(load_embedding("/nonexistent/file.emb"), std::ios_base::failure);
  CHECK_THROWS_AS(load_catalog("/nonexistent/file.cat"), std::ios_base::failure);
}

TEST_CASE("verify_catalog names the failing rule") {
  CHECK(verify_catalog({SurfaceSpec::sphere(), {{tetrahedron(), "K4", {}, {}}}}).valid());

  SUBCASE("reducible seed") {
    const SeedCatalog c{SurfaceSpec::sphere(), {{tetrahedron(), "K4", {}, {}}, {triangular_bipyramid(), "bp", {}, {}}}};
    const auto report = verify_catalog(c);
    CHECK(report.has(rules::kSeedNotIrreducible));
    CHECK(report.to_string().find("seed 1: seed not irreducible") != std::string::npos);
  }
  SUBCASE("duplicate seed") {
    const auto moved = relabel(k7_torus(), std::vector<Vertex>{6, 5, 4, 3, 2, 1, 0});
    const SeedCatalog c{SurfaceSpec::torus(), {{k7_torus(), "a", {}, {}}, {moved, "b", {}, {}}}};
    CHECK(verify_catalog(c).has(rules::kDuplicateSeed));
  }
  SUBCASE("wrong surface") {
    const SeedCatalog c{SurfaceSpec::sphere(), {{k7_torus(), "K7", {}, {}}}};
    CHECK(verify_catalog(c).has(rules::kSurfaceMismatch));
  }
  SUBCASE("header disagreement") {
    const SeedCatalog c{SurfaceSpec::sphere(), {{tetrahedron(), "K4", 7, true}}};
    CHECK(verify_catalog(c).has(rules::kHeaderMismatch));
    const SeedCatalog d{SurfaceSpec::sphere(), {{tetrahedron(), "K4", 6, false}}};
    CHECK(verify_catalog(d).has(rules::kHeaderMismatch));
  }
  SUBCASE("malformed seed") {
    auto rot = tetrahedron().rotations();
    rot[2].pop_back();
    const SeedCatalog c{SurfaceSpec::sphere(), {{EmbeddedTriangulation(rot), "broken", {}, {}}}};
    const auto report = verify_catalog(c);
    CHECK(report.has(rules::kRotationMismatch));
    CHECK(report.violations.front().detail.rfind("seed 0: ", 0) == 0);
  }
}

TEST_CASE("built-in catalogs") {
  CHECK(builtin_catalog(SurfaceSpec::sphere()).seeds.size() == 1);
  CHECK(builtin_catalog(SurfaceSpec::torus()).seeds.front().triangulation == k7_torus());
  CHECK(builtin_catalog(SurfaceSpec::projective_plane()).seeds.front().triangulation == k6_projective_plane());
  for (const auto& s : {SurfaceSpec::sphere(), SurfaceSpec::torus(), SurfaceSpec::projective_plane()})
    CHECK(verify_catalog(builtin_catalog(s)).valid());
  CHECK_THROWS_AS(builtin_catalog(SurfaceSpec::from_name("klein-bottle")), InvalidArgument);
}
