#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "surfbasis/report.hpp"

using namespace surfbasis;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "surfbasis_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::string gen_file(const std::vector<std::string>& kind, const std::string& name) {
  auto path = (scratch_dir() / name).string();
  std::vector<std::string> args{"gen"};
  args.insert(args.end(), kind.begin(), kind.end());
  args.push_back("-o");
  args.push_back(path);
  REQUIRE(run(args).code == 0);
  return path;
}

}  // namespace

TEST_CASE("info on theta") {
  auto r = run({"info", testing::fixture_path("theta.txt"), "--format", "structured"});
  REQUIRE(r.code == 0);
  auto rep = parse_structured(r.out);
  CHECK(rep.stats.n == 2);
  CHECK(rep.stats.m == 3);
  CHECK(rep.stats.faces == 3);
  CHECK(rep.stats.boundary == 1);
  CHECK(rep.stats.genus == 0);
  CHECK(rep.stats.orientable);
  CHECK(rep.stats.beta == 0);
  CHECK(rep.tree_edges == 1);
}

TEST_CASE("info on the projective loop notes the missing boundary") {
  auto r = run({"info", testing::fixture_path("pp1.txt")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("non-orientable") != std::string::npos);
  CHECK(r.out.find("genus=1") != std::string::npos);
  CHECK(r.out.find("beta=1") != std::string::npos);
  CHECK(r.out.find("boundary=0") != std::string::npos);
  CHECK(r.out.find("no boundary") != std::string::npos);
}

TEST_CASE("malformed rot line is reported with its line number") {
  auto path = write_temp("bad.txt", "v 1\ne a 0 0 1 0\nrot 0 a- b+\n");
  auto r = run({"info", path});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"info", (scratch_dir() / "missing.txt").string()}).code == cli::kInputError);
}

TEST_CASE("mcb on theta") {
  auto r = run({"mcb", testing::fixture_path("theta.txt"), "--verify", "--format", "structured"});
  REQUIRE(r.code == 0);
  auto rep = parse_structured(r.out);
  CHECK(rep.total_weight == 7);
  CHECK(rep.cycles.size() == 2);
  CHECK(rep.verified());
}

TEST_CASE("mhb on the 5x5 torus grid") {
  auto path = gen_file({"torus-grid", "5"}, "grid5.txt");
  for (const char* rec : {"balanced", "simple"}) {
    auto r = run({"mhb", path, "--verify", "--format", "structured", "--recursion", rec, "--threads", "3"});
    REQUIRE(r.code == 0);
    auto rep = parse_structured(r.out);
    CHECK(rep.total_weight == 10);
    CHECK(rep.verified());
    bool weight_checked = false;
    for (const auto& v : rep.verdicts) weight_checked = weight_checked || (v.check == "oracle_weight" && v.status == "pass");
    CHECK(weight_checked);
  }
}

TEST_CASE("mcb rejects non-orientable input") {
  auto r = run({"mcb", testing::fixture_path("pp1.txt")});
  CHECK(r.code == cli::kUnsupported);
  CHECK(r.err.find("orientable") != std::string::npos);
}

TEST_CASE("gen torus-grid 3") {
  auto r = run({"gen", "torus-grid", "3"});
  REQUIRE(r.code == 0);
  auto g = EmbeddedGraph::build(parse_instance(r.out));
  CHECK(g.n() == 9);
  CHECK(g.m() == 18);
  CHECK(g.num_faces() == 9);
}

TEST_CASE("generated fixtures are byte-identical to the shipped files") {
  std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"theta"}, "theta.txt"},
      {{"torus1"}, "torus1.txt"},
      {{"k4-sphere"}, "k4s.txt"},
      {{"projective-loop"}, "pp1.txt"},
      {{"torus-grid", "3"}, "grid_t3.txt"}};
  for (const auto& [kind, file] : cases) {
    std::vector<std::string> args{"gen"};
    args.insert(args.end(), kind.begin(), kind.end());
    auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(r.out == read(testing::fixture_path(file)));
  }
}

TEST_CASE("random generation is deterministic") {
  auto a = run({"gen", "random-rotation", "6", "12", "42"});
  auto b = run({"gen", "random-rotation", "6", "12", "42"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"gen", "random-rotation", "6", "12", "43"}).out != a.out);
  auto g = EmbeddedGraph::build(parse_instance(a.out));
  CHECK(g.n() == 6);
  CHECK(g.m() == 12);
}

TEST_CASE("gen errors") {
  CHECK(run({"gen", "torus-grid"}).code == cli::kInputError);
  CHECK(run({"gen", "torus-grid", "x"}).code == cli::kInputError);
  CHECK(run({"gen", "projective-grid", "2"}).code == cli::kInputError);
  CHECK(run({"gen", "random-rotation", "6", "2", "1"}).code == cli::kInputError);
  CHECK(run({"gen", "nonsense"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"mhb", testing::fixture_path("theta.txt"), "--recursion", "fast"}).code == cli::kInputError);
}

TEST_CASE("structured reports round-trip") {
  for (const char* file : {"theta.txt", "torus1.txt", "k4s.txt", "grid_t3.txt"}) {
    for (const char* cmd : {"info", "mcb", "mhb"}) {
      std::vector<std::string> args{cmd, testing::fixture_path(file), "--format", "structured"};
      if (std::string(cmd) != "info") args.push_back("--verify");
      auto r = run(args);
      REQUIRE(r.code == 0);
      auto rep = parse_structured(r.out);
      CHECK(write_structured(rep) == r.out);
      CHECK(parse_structured(write_structured(rep)) == rep);
      Weight sum = 0;
      for (const auto& c : rep.cycles) sum += c.weight;
      CHECK(sum == rep.total_weight);
    }
  }
  CHECK_THROWS(parse_structured("report mcb\ncycle x 0 -\nend\n"));
  CHECK_THROWS(parse_structured("report mcb\n"));
  CHECK_THROWS(parse_structured("nonsense\n"));
}

TEST_CASE("report round-trip keeps fractional weights and timings exactly") {
  RunReport rep;
  rep.command = "mhb";
  rep.stats.n = 3;
  rep.stats.euler_char = -4;
  rep.stats.orientable = false;
  rep.cycles.push_back({{"a", "b_1"}, 0.1, "01", false});
  rep.cycles.push_back({{"c"}, 1e-9, "", true});
  rep.total_weight = 0.1 + 1e-9;
  rep.timings = {{"selection", 1.0 / 3.0}};
  rep.verdicts = {{"rank", "pass", "2 of 2"}};
  CHECK(parse_structured(write_structured(rep)) == rep);
}

TEST_CASE("every emitted basis passes verification") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto path = gen_file({"random-rotation", "7", "13", std::to_string(seed)}, "rand" + std::to_string(seed) + ".txt");
    CHECK(run({"mcb", path, "--verify"}).code == 0);
    CHECK(run({"mhb", path, "--verify", "--check-invariants"}).code == 0);
    auto npath = (scratch_dir() / ("nrand" + std::to_string(seed) + ".txt")).string();
    REQUIRE(run({"gen", "random-rotation", "7", "13", std::to_string(seed), "--non-orientable", "-o", npath}).code == 0);
    CHECK(run({"mhb", npath, "--verify"}).code == 0);
  }
  for (const char* kind : {"klein-grid", "projective-grid", "double-torus"}) {
    auto path = gen_file({kind, "4"}, std::string(kind) + ".txt");
    CHECK(run({"mhb", path, "--verify"}).code == 0);
  }
}
