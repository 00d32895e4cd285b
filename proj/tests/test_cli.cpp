#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fixtures.hpp"
#include "tristring_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "tristring");
  std::ostringstream out, err;
  const int code = tristring::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string test_data(const std::string& name) { return std::string(TRISTRING_TEST_DATA_DIR) + "/" + name; }

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "tristring_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("enumerate") {
  const auto out_file = scratch_dir() / "counts.json";
  const auto r = run({"enumerate", "--catalog", fixture::data_path("sphere.cat"), "--max-vertices", "8", "--out",
                      out_file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto j = nlohmann::json::parse(read_file(out_file));
  CHECK(j["counts"] == nlohmann::json{{"4", 1}, {"5", 1}, {"6", 2}, {"7", 5}, {"8", 14}});
  CHECK(j["surface"] == "sphere");

  const auto below = run({"enumerate", "--max-vertices", "3"});
  CHECK(below.code == 2);
  CHECK(below.err.find("below seed size") != std::string::npos);

  CHECK(run({"enumerate", "--catalog", "/nonexistent/x.cat", "--max-vertices", "5"}).code == 3);
  CHECK(run({"enumerate", "--catalog", test_data("reducible.cat"), "--max-vertices", "6"}).code == 2);
  CHECK(run({"enumerate"}).code == 1);
  CHECK(run({"enumerate", "--max-vertices", "5", "--out", "/nonexistent/dir/out.json"}).code == 3);

  const auto graphs = run({"enumerate", "--surface", "projective-plane", "--max-vertices", "7", "--graph-classes"});
  CHECK(graphs.code == 0);
  const auto g = nlohmann::json::parse(graphs.out);
  CHECK(g["counts"]["7"] == 2);
  CHECK(g.contains("graph_classes"));
}

TEST_CASE("kappa") {
  const auto k4 = run({"kappa", test_data("k4.graph")});
  CHECK(k4.code == 0);
  CHECK(k4.out == "16\n");

  const auto c3 = run({"kappa", "--tutte", test_data("c3.graph")});
  CHECK(c3.code == 0);
  CHECK(c3.out == "x^2+x+y\n3\n");

  const auto dis = run({"kappa", test_data("disconnected.graph")});
  CHECK(dis.code == 4);
  CHECK(dis.err.find("disconnected") != std::string::npos);

  // Embedding files are accepted too: K6 in the projective plane.
  const auto file = scratch_dir() / "k6.emb";
  std::ofstream(file) << "6 15 0\n0: 1 2 3 4 5\n1: 5 3 4 2 0\n2: 0 1 4 5 3\n3: 0 2 5 1 4\n4: 0 3 1 2 5\n"
                         "5: 0 4 2 3 1\nsign 1 3 -1\nsign 1 4 -1\nsign 2 4 -1\nsign 2 5 -1\nsign 3 5 -1\n";
  CHECK(run({"kappa", file.string()}).out == "1296\n");

  CHECK(run({"kappa", "/nonexistent"}).code == 3);
  CHECK(run({"kappa", "--tutte", "--edge-limit", "2", test_data("k4.graph")}).code == 2);
}

TEST_CASE("z lower bound") {
  const auto r = run({"z", "--surface", "sphere", "--mode", "lower-bound", "--mu", "2", "--dim", "1", "--eps", "1e-9"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value"].get<double>() - 0.5115676) < 0.5115676e-4);
  CHECK(j["converged"] == true);

  const auto divergent = run({"z", "--surface", "sphere", "--mode", "lower-bound", "--mu", "0", "--dim", "1"});
  CHECK(divergent.code == 0);
  CHECK(nlohmann::json::parse(divergent.out)["converged"] == false);

  const auto csv = run({"z", "--format", "csv", "--k-max", "4"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("k,n_vertices,C,kappa,log_term,term\n", 0) == 0);
}

TEST_CASE("z exact") {
  const auto r = run({"z", "--surface", "torus", "--mode", "exact", "--catalog", fixture::data_path("torus.cat"),
                      "--k-max", "7", "--mu", "2", "--dim", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["k"] == 7);
  CHECK(j["terms"][0]["C"] == 1);
  CHECK(j["terms"][0]["kappa"] == 16807);
  const double two_pi = 2 * std::acos(-1.0);
  const double expected = std::exp(-28.0) * std::sqrt(std::pow(two_pi, 7) / 16807) / std::sqrt(two_pi);
  CHECK(std::abs(j["value"].get<double>() - expected) < 1e-11 * expected);

  CHECK(run({"z", "--mode", "exact", "--k-max", "7"}).code == 1);
  CHECK(run({"z", "--surface", "sphere", "--mode", "exact", "--catalog", fixture::data_path("torus.cat"), "--k-max",
             "7"})
            .code == 2);
  CHECK(run({"z", "--mode", "exact", "--catalog", "/nonexistent.cat"}).code == 3);
}

TEST_CASE("z partial") {
  const auto r = run({"z", "--mode", "partial", "--mu", "2", "--dim", "1", "--k-max", "200"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sphere_partial"].get<double>() > 10 * j["torus_partial"].get<double>());
}

TEST_CASE("z flag errors") {
  CHECK(run({"z", "--eps", "1e-9", "--k-max", "10"}).code == 1);
  CHECK(run({"z", "--mode", "fast"}).code == 1);
  CHECK(run({"z", "--mu", "-1"}).code == 1);
  CHECK(run({"z", "--dim", "0"}).code == 1);
  CHECK(run({"z", "--surface", "torus", "--mode", "lower-bound"}).code == 1);
  CHECK(run({"z", "--surface", "donut"}).code == 1);
  CHECK(run({"z", "--format", "xml"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const auto ok = run({"verify", fixture::data_path("sphere.cat")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid") != std::string::npos);

  const auto reducible = run({"verify", test_data("reducible.cat")});
  CHECK(reducible.code == 2);
  CHECK(reducible.out.find("seed_not_irreducible") != std::string::npos);

  const auto broken = run({"verify", test_data("broken_rotation.emb")});
  CHECK(broken.code == 2);
  CHECK(broken.out.find("rotation_mismatch") != std::string::npos);

  CHECK(run({"verify", fixture::data_path("torus.cat")}).code == 0);
  CHECK(run({"verify", test_data("k4.graph")}).code == 2);
  CHECK(run({"verify", "/nonexistent"}).code == 3);

  const auto header = scratch_dir() / "header.emb";
  std::ofstream(header) << "4 7 1\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n";
  const auto bad = run({"verify", header.string()});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("header_mismatch") != std::string::npos);

  const auto garbled = scratch_dir() / "garbled.emb";
  std::ofstream(garbled) << "4 6 1\n0 1 2 3\n";
  CHECK(run({"verify", garbled.string()}).code == 2);
}

TEST_CASE("outputs are byte-identical across runs and worker counts") {
  const std::vector<std::string> args{"z", "--mode", "exact", "--catalog", fixture::data_path("projective_plane.cat"),
                                      "--k-max", "8", "--mu", "1.7", "--dim", "2"};
  const auto first = run(args);
  ::setenv("TRISTRING_THREADS", "3", 1);
  const auto second = run(args);
  ::unsetenv("TRISTRING_THREADS");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(run({"enumerate", "--max-vertices", "8"}).out == run({"enumerate", "--max-vertices", "8"}).out);
}

TEST_CASE("TRISTRING_THREADS") {
  ::setenv("TRISTRING_THREADS", "1", 1);
  CHECK(tristring::cli::worker_count() == 1);
  ::setenv("TRISTRING_THREADS", "junk", 1);
  CHECK(tristring::cli::worker_count() >= 1);
  ::setenv("TRISTRING_THREADS", "100000", 1);
  CHECK(tristring::cli::worker_count() <= std::max(1u, std::thread::hardware_concurrency()));
  ::unsetenv("TRISTRING_THREADS");
}
