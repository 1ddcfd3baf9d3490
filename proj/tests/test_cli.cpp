#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "forest/cli.hpp"
#include "support.hpp"

using nlohmann::json;
using testing_support::data_path;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json result() const { return json::parse(out).at("result"); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = forest::run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "inforest-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("gen output feeds exact through standard input") {
  Run g = run({"gen", "cube"});
  REQUIRE(g.code == 0);
  CHECK(g.out.find("p forest 8 12") != std::string::npos);
  Run e = run({"exact", "-"}, g.out);
  REQUIRE(e.code == 0);
  json j = json::parse(e.out);
  CHECK(j["command"] == "exact");
  CHECK(j["tool_version"] == "1.0.0");
  CHECK(j["input_digest"].get<std::string>().size() == 16);
  CHECK(j["result"]["forest_number"] == 5);
  CHECK(j["result"]["decycling_number"] == 3);
  CHECK(j["result"]["optimal"] == true);
  CHECK(j["result"]["witness"].size() == 5);
  CHECK(json::parse(run({"exact", "-"}, g.out).out)["input_digest"] == j["input_digest"]);
}

TEST_CASE("gen writes a file and reports it") {
  fs::path p = scratch("grid.graph");
  Run g = run({"gen", "grid_quadrangulation", "3", "4", "-o", p.string()});
  REQUIRE(g.code == 0);
  CHECK(g.result()["n"] == 12);
  CHECK(g.result()["m"] == 17);
  Run i = run({"info", p.string()});
  REQUIRE(i.code == 0);
  CHECK(i.result()["girth"] == 4);
  CHECK(i.result()["plane"] == true);
  CHECK(i.result()["faces"] == 7);
  CHECK(run({"gen", "cubes_linked", "1"}).code == 2);
  CHECK(run({"gen", "nonsense"}).code == 2);
}

TEST_CASE("best bounds for linked cubes and the dodecahedron") {
  Run b = run({"bound", data_path("cubes_linked2.graph"), "--best", "girth4"});
  REQUIRE(b.code == 0);
  CHECK(b.result()["best"]["value"] == "213/22");
  CHECK(b.result()["best"]["ceil"] == 10);
  CHECK(b.result()["best"]["vertex"]["a"] == "19/22");
  Run d = run({"bound", data_path("dodecahedron.graph")});
  REQUIRE(d.code == 0);
  CHECK(d.result()["best"].size() == 2);
  CHECK(d.result()["best"][1]["value"] == "310/23");
  CHECK(run({"bound", data_path("hosono5.graph")}).code == 2);
  CHECK(run({"bound", data_path("cube.graph"), "--best", "girth5"}).code == 2);
}

TEST_CASE("formula evaluation") {
  Run f = run({"bound", data_path("cube.graph"), "--formula", "main"});
  REQUIRE(f.code == 0);
  CHECK(f.result()["value"] == "5");
  Run c = run({"bound", "--catalog"});
  REQUIRE(c.code == 0);
  CHECK(c.result()["catalog"].size() > 5);
  CHECK(run({"bound", data_path("cube.graph"), "--formula", "bmain"}).code == 2);
  CHECK(run({"bound", data_path("cube.graph"), "--formula", "nope"}).code == 2);
}

TEST_CASE("the refutation command") {
  Run k = run({"refute-kowalik", "--k", "2"});
  REQUIRE(k.code == 0);
  CHECK(k.result()["claimed"] == "163/16");
  CHECK(k.result()["actual"] == 10);
  CHECK(k.result()["violated"] == true);
  CHECK(k.result()["margin"] == "3/16");
  Run one = run({"refute-kowalik", "--k", "1"});
  CHECK(one.result()["violated"] == false);
  CHECK(run({"refute-kowalik", "--k", "0"}).code == 2);
}

TEST_CASE("polygon plots carry exact labels") {
  Run p = run({"plot-polygon", "--class", "girth4"});
  REQUIRE(p.code == 0);
  CHECK(p.out.find("<svg") != std::string::npos);
  CHECK(p.out.find("(7/44, 19/22)") != std::string::npos);
  CHECK(p.out.find("(7/44, 38/44)") != std::string::npos);
  CHECK(p.out.find("(1/8, 3/4)") != std::string::npos);
  CHECK(p.out.find("8a - 12b &lt;= 5") != std::string::npos);
  fs::path out = scratch("g5.svg");
  Run q = run({"plot-polygon", "--class", "girth5", "-o", out.string()});
  REQUIRE(q.code == 0);
  CHECK(q.result()["vertices"].size() == 3);
  CHECK(fs::file_size(out) > 100);
}

TEST_CASE("reduce and verify round trip, and tampering is caught") {
  fs::path cert = scratch("cube.cert.json");
  Run r = run({"reduce", data_path("cube.graph"), "--class", "girth4", "--threshold", "0", "-o",
               cert.string()});
  REQUIRE(r.code == 0);
  CHECK(r.result()["guarantee"] == "certified");
  CHECK(r.result()["forest_size"] == 5);
  Run v = run({"verify", data_path("cube.graph"), cert.string()});
  CHECK(v.code == 0);
  // The whole reduce envelope is accepted too.
  fs::path env = scratch("cube.env.json");
  write(env, r.out);
  CHECK(run({"verify", data_path("cube.graph"), env.string()}).code == 0);

  json c = json::parse(std::ifstream(cert));
  c["forest"].erase(c["forest"].begin());
  c["forest_size"] = 4;
  fs::path bad = scratch("cube.bad.json");
  write(bad, c.dump());
  Run t = run({"verify", data_path("cube.graph"), bad.string()});
  CHECK(t.code == 1);
  CHECK(t.result()["passed"] == false);
  CHECK(run({"verify", data_path("dodecahedron.graph"), cert.string()}).code == 1);
}

TEST_CASE("input errors exit with code 2") {
  fs::path p = scratch("broken.graph");
  write(p, "c broken\np forest 3 2\ne 1 2\ne 2 x\n");
  Run r = run({"info", p.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(run({"info", scratch("missing.graph").string()}).code == 2);
  CHECK(run({"reduce", data_path("cube.graph"), "--class", "girth5"}).code == 2);
  CHECK(run({"reduce", data_path("cube.graph"), "--class", "girth9"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"exact"}).code == 2);
  CHECK(run({"verify", data_path("cube.graph"), p.string()}).code == 2);
  CHECK(run({"audit", data_path("cube.graph"), "--mode", "girth5"}).code == 2);
}

TEST_CASE("audits over the command line") {
  Run a = run({"audit", data_path("cube.graph"), "--mode", "girth4"});
  REQUIRE(a.code == 0);
  CHECK(a.result()["euler_sum"] == -12);
  CHECK(a.result()["identity_holds"] == true);
  CHECK(a.result()["violations"].size() == 6);
  Run d = run({"audit", data_path("dodecahedron.graph"), "--mode", "girth5"});
  REQUIRE(d.code == 0);
  CHECK(d.result()["violations"].size() == 12);
}

TEST_CASE("help and version exit cleanly") {
  CHECK(run({"--help"}).code == 0);
  Run v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("1.0.0") != std::string::npos);
}
