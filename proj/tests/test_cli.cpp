#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zsalg/cli.hpp"
#include "zsalg/errors.hpp"
#include "zsalg/report.hpp"

using namespace zsalg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zsalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::size_t> zs_column(const std::string& json) {
  const auto parsed = nlohmann::json::parse(json);
  std::vector<std::size_t> col;
  for (const auto& row : parsed.at("table")) col.push_back(row.at("dim_zs").get<std::size_t>());
  return col;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("zsalg_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("info command") {
  auto r = run({"info", "xs+:3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("order:        27") != std::string::npos);
  CHECK(r.out.find("powerful:     no") != std::string::npos);
  CHECK(r.out.find("27 > 3 > 1") != std::string::npos);
  CHECK(r.out.find("loewy length: 9") != std::string::npos);

  auto c8 = nlohmann::json::parse(run({"info", "cyclic:8", "--format", "json"}).out);
  CHECK(c8.at("p") == 2);
  CHECK(c8.at("powerful") == true);
  CHECK(c8.at("loewy_length") == 8);
  CHECK(nlohmann::json::parse(run({"info", "elab:2^3", "--format", "json"}).out).at("loewy_length") == 4);
}

TEST_CASE("zs-table values") {
  auto xs = run({"zs-table", "xs+:3", "--format", "json"});
  REQUIRE(xs.code == 0);
  CHECK(zs_column(xs.out) == std::vector<std::size_t>{0, 1, 3, 6, 8, 9, 9, 10, 10, 11});
  CHECK(nlohmann::json::parse(xs.out).at("dim_center") == 11);
  CHECK(zs_column(run({"zs-table", "cyclic:3", "--format", "json"}).out) ==
        std::vector<std::size_t>{0, 1, 2, 3});
  auto xm = zs_column(run({"zs-table", "xs-:3", "--format", "json"}).out);
  REQUIRE(xm.size() == 12);
  CHECK(std::vector<std::size_t>(xm.begin() + 1, xm.begin() + 4) == std::vector<std::size_t>{1, 3, 6});

  auto csv = run({"zs-table", "cyclic:3", "--format", "csv"});
  CHECK(csv.out == "n,dim_rad,dim_soc,dim_zs,dim_center\n0,3,0,0,3\n1,2,1,1,3\n2,1,2,2,3\n3,0,3,3,3\n");
}

TEST_CASE("weight and linear-algebra paths agree") {
  for (const char* spec : {"xs+:3", "xs-:3", "dihedral:16", "quaternion:32", "prod:cyclic:4*cyclic:2",
                           "cyclic:25"}) {
    CAPTURE(spec);
    auto fast = run({"zs-table", spec, "--format", "json"});
    auto slow = run({"--no-weights", "zs-table", spec, "--format", "json"});
    CHECK(fast.out == slow.out);
  }
}

TEST_CASE("json reports round-trip and are deterministic") {
  auto a = run({"verify", "xs-:3", "--checks", "powerful,okuyama", "--format", "json"});
  auto b = run({"verify", "xs-:3", "--checks", "powerful,okuyama", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto arr = nlohmann::ordered_json::parse(a.out);
  REQUIRE(arr.size() == 1);
  Report r = report_from_json(arr[0].dump());
  CHECK(report_to_json(r) == arr[0].dump(2) + "\n");
  CHECK(report_from_json(report_to_json(r)) == r);

  auto timed = run({"--timing", "zs-table", "xs+:3", "--format", "json"});
  auto plain = run({"zs-table", "xs+:3", "--format", "json"});
  auto tj = nlohmann::json::parse(timed.out);
  CHECK(tj.contains("timing_ms"));
  CHECK(report_from_json(timed.out) == report_from_json(plain.out));
  CHECK_THROWS_AS(report_from_json("{\"spec\": 1}"), ParseError);
}

TEST_CASE("verify command") {
  auto pw = run({"verify", "xs-:3", "--checks", "powerful"});
  CHECK(pw.code == 0);
  CHECK(pw.out.find("PASS    powerful.socle_p_central") != std::string::npos);
  CHECK(pw.out.find("(a-1)^2*(b-1)^2*(c-1) in Soc^4 but not central") != std::string::npos);

  auto scan = run({"verify", "dihedral:16", "--checks", "scan"});
  CHECK(scan.code == 0);
  CHECK(scan.out.find("FINDING scan") != std::string::npos);

  CHECK(run({"verify", "cyclic:9", "--checks", "jennings,rigidity,main"}).code == 0);
  CHECK(run({"verify", "xs+:3", "--checks", "morita", "--k", "2"}).code == 0);

  auto multi = run({"verify", "cyclic:4", "xs+:3", "cyclic:2", "-j", "3", "--checks", "zs12",
                    "--format", "json"});
  REQUIRE(multi.code == 0);
  auto arr = nlohmann::json::parse(multi.out);
  REQUIRE(arr.size() == 3);
  CHECK(arr[0].at("spec") == "cyclic:4");
  CHECK(arr[1].at("spec") == "xs+:3");
  CHECK(arr[2].at("spec") == "cyclic:2");
}

TEST_CASE("exit codes") {
  CHECK(run({"info", "cyclic:6"}).code == kExitUsage);
  CHECK(run({"info", "hexagon:6"}).code == kExitUsage);
  CHECK(run({"info", "cyclic:x"}).code == kExitUsage);
  CHECK(run({"info"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"verify", "cyclic:3", "--checks", "bogus"}).code == kExitUsage);
  CHECK(run({"verify", "cyclic:3", "cyclic:6"}).code == kExitUsage);
  CHECK(run({"info", "cyclic:5000"}).code == kExitCap);
  CHECK(run({"info", "perm:n=8;gens=(1 2);(1 2 3 4 5 6 7 8)"}).code == kExitCap);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("trivial group needs an explicit prime") {
  CHECK(run({"info", "cyclic:1"}).code == kExitUsage);
  auto r = run({"--p", "5", "zs-table", "cyclic:1", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(zs_column(r.out) == std::vector<std::size_t>{0, 1});
  CHECK(run({"--p", "3", "info", "cyclic:4"}).code == kExitUsage);
  CHECK(run({"--p", "4", "info", "cyclic:1"}).code == kExitUsage);
  CHECK(run({"--p", "2", "info", "cyclic:4"}).code == kExitOk);
}

TEST_CASE("perm and table specs") {
  auto perm = nlohmann::json::parse(run({"info", "perm:n=4;gens=(1 2 3 4);(1 3)", "--format", "json"}).out);
  CHECK(perm.at("order") == 8);
  CHECK(perm.at("loewy_length") == 5);

  fs::path dir = scratch("table");
  {
    std::ofstream f(dir / "c3.json");
    f << R"({"order": 3, "mul": [[0,1,2],[1,2,0],[2,0,1]], "labels": ["e","t","t2"]})";
    std::ofstream bad(dir / "bad.json");
    bad << R"({"order": 2, "mul": [[1,0],[0,1]]})";
  }
  auto t = run({"zs-table", "table:@" + (dir / "c3.json").string(), "--format", "json"});
  REQUIRE(t.code == 0);
  auto tj = nlohmann::json::parse(t.out);
  CHECK(tj.at("chain")[0].at("gens")[0] == "t");
  CHECK(zs_column(t.out) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(run({"info", "table:@" + (dir / "bad.json").string()}).code == kExitUsage);
  CHECK(run({"info", "table:@" + (dir / "missing.json").string()}).code == kExitUsage);
  fs::remove_all(dir);
}

TEST_CASE("output file") {
  fs::path dir = scratch("output");
  auto r = run({"zs-table", "cyclic:3", "--format", "csv", "--output", (dir / "t.csv").string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "t.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,dim_rad,dim_soc,dim_zs,dim_center");
  fs::remove_all(dir);
}

TEST_CASE("result cache") {
  fs::path flag_dir = scratch("cache_flag");
  fs::path env_dir = scratch("cache_env");
  auto first = run({"--cache-dir", flag_dir.string(), "zs-table", "xs+:3", "--format", "json"});
  REQUIRE(first.code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(flag_dir)) files += e.path().extension() == ".json";
  CHECK(files == 1);
  auto second = run({"--cache-dir", flag_dir.string(), "zs-table", "xs+:3", "--format", "json"});
  CHECK(second.out == first.out);

  // A planted entry is served, which shows the cache is actually read.
  for (const auto& e : fs::directory_iterator(flag_dir)) {
    Report r = report_from_json(first.out);
    r.dim_center = 999;
    std::ofstream(e.path()) << report_to_json(r);
  }
  auto planted = run({"--cache-dir", flag_dir.string(), "zs-table", "xs+:3", "--format", "json"});
  CHECK(nlohmann::json::parse(planted.out).at("dim_center") == 999);

  setenv("ZSALG_CACHE_DIR", env_dir.string().c_str(), 1);
  run({"info", "cyclic:4"});
  CHECK(!fs::is_empty(env_dir));
  // The flag wins over the environment.
  fs::path other = scratch("cache_other");
  run({"--cache-dir", other.string(), "info", "cyclic:8"});
  CHECK(!fs::is_empty(other));
  CHECK(std::distance(fs::directory_iterator(env_dir), fs::directory_iterator()) == 1);
  unsetenv("ZSALG_CACHE_DIR");
  for (const auto& d : {flag_dir, env_dir, other}) fs::remove_all(d);
}

TEST_CASE("fnv1a") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
