#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/group_spec.hpp"
#include "cli/suite.hpp"
#include "powerlambda/error.hpp"
#include "support.hpp"

using namespace powerlambda;
using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;

  json parsed() const { return json::parse(out); }
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "powerlambda_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("group spec grammar") {
  const Limits limits;
  CHECK(cli::build_group(cli::parse_group_spec("cyclic:12"), limits).order() == 12);
  CHECK(cli::build_group(cli::parse_group_spec("semidihedral:32"), limits).order() == 32);
  CHECK(cli::build_group(cli::parse_group_spec("elemab:3,2"), limits).order() == 9);
  CHECK(cli::build_group(cli::parse_group_spec("heisenberg:5"), limits).order() == 125);
  CHECK(cli::build_group(cli::parse_group_spec("product:elemab:2,2,cyclic:4"), limits).order() ==
        16);
  CHECK(cli::build_group(cli::parse_group_spec("product:(cyclic:2),(product:cyclic:2,cyclic:3)"),
                         limits)
            .order() == 12);
  CHECK(cli::build_group(cli::parse_group_spec("file:" + support::data_path("s3.cayley")), limits)
            .order() == 6);
  CHECK(cli::parse_group_spec("product:cyclic:2,cyclic:3").to_string() ==
        "product:(cyclic:2),(cyclic:3)");

  CHECK_ERROR_CODE(cli::parse_group_spec("cyclic"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(cli::parse_group_spec("torus:4"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(cli::parse_group_spec("cyclic:-4"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(cli::parse_group_spec("elemab:3"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(cli::parse_group_spec("product:cyclic:2"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(cli::build_group(cli::parse_group_spec("dihedral:12"), limits),
                   ErrorCode::InvalidParameter);
  CHECK_ERROR_CODE(cli::build_group(cli::parse_group_spec("cyclic:1000"), limits),
                   ErrorCode::TooLarge);
  CHECK_ERROR_CODE(cli::build_group(cli::parse_group_spec("product:cyclic:32,cyclic:32"), limits),
                   ErrorCode::TooLarge);
}

TEST_CASE("analyze") {
  const auto sd = invoke({"analyze", "semidihedral:16", "--stable"});
  REQUIRE(sd.code == 0);
  const auto report = sd.parsed();
  CHECK(report["m"] == json{{"2", 5}, {"4", 3}, {"8", 1}});
  CHECK(report["lambda"] == 16);
  CHECK(report["group"]["family"] == "semidihedral");
  CHECK(report["group"]["maximal_class"] == true);
  CHECK_FALSE(report.contains("timing_ms"));

  CHECK(invoke({"analyze", "cyclic:8"}).parsed()["lambda"] == 14);
  CHECK(invoke({"analyze", "cyclic:8"}).parsed().contains("timing_ms"));
  const auto q8 = invoke({"analyze", "quaternion:8"}).parsed();
  CHECK(q8["lambda"] == 9);
  CHECK(q8["certificate"]["evidence"]["kind"] == "universal-nonidentity-vertex");

  const auto c6 = invoke({"analyze", "cyclic:6", "--stable"}).parsed();
  CHECK(c6["lambda"] == 8);
  CHECK(c6["group"]["prime"].is_null());
  CHECK(c6["certificate"]["method"] == "exact-search");

  const auto pretty = invoke({"analyze", "dihedral:8", "--pretty"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("lambda         8") != std::string::npos);

  CHECK(invoke({"analyze", "dihedral:12"}).code == 1);
  CHECK(invoke({"analyze", "nonsense"}).code == 1);
  CHECK(invoke({"analyze", "cyclic:1000"}).code == 3);
}

TEST_CASE("lambda command") {
  const auto both = invoke({"lambda", "elemab:3,2", "--method", "both", "--stable"});
  REQUIRE(both.code == 0);
  CHECK(both.parsed()["agree"] == true);
  CHECK(both.parsed()["constructive"]["lambda"] == 9);
  CHECK(both.parsed()["exact"]["lambda"] == 9);
  CHECK(invoke({"lambda", "dihedral:16", "--method", "both"}).parsed()["lambda"] == 16);

  const auto heis = invoke({"lambda", "heisenberg:3", "--method", "constructive"});
  CHECK(heis.code == 0);
  CHECK(heis.parsed()["certificate"]["lambda"] == 27);

  CHECK(invoke({"lambda", "cyclic:10"}).parsed()["lambda"] == 16);
  CHECK(invoke({"lambda", "cyclic:10", "--method", "constructive"}).code == 1);
  CHECK(invoke({"lambda", "cyclic:4", "--method", "guess"}).code == 1);
  CHECK(invoke({"lambda", "dihedral:64", "--method", "exact"}).code == 3);

  const auto timeout = invoke({"lambda", "cyclic:30", "--method", "exact", "--budget-ms", "20"});
  CHECK(timeout.code == 3);
  CHECK(timeout.parsed()["timeout"]["status"] == "timeout");
  CHECK(timeout.parsed()["timeout"]["lower_bound"] >= 30);
}

TEST_CASE("lambda --csv output passes check") {
  const auto csv = scratch("q16.csv");
  REQUIRE(invoke({"lambda", "quaternion:16", "--csv", csv.string()}).code == 0);
  const auto checked = invoke({"check", "quaternion:16", csv.string()});
  CHECK(checked.code == 0);
  CHECK(checked.parsed()["valid"] == true);
  CHECK(checked.parsed()["span"] == 17);
}

TEST_CASE("check reports violations") {
  const auto equal = scratch("equal.csv");
  write_file(equal, "element,label\n0,0\n1,0\n2,4\n");
  const auto result = invoke({"check", "cyclic:3", equal.string()});
  CHECK(result.code == 2);
  CHECK(result.parsed()["valid"] == false);
  CHECK(result.parsed()["violations"].size() == 1);

  const auto gap = scratch("gap.csv");
  write_file(gap, "element,label\n0,0\n1,1\n2,3\n");
  const auto gapped = invoke({"check", "cyclic:3", gap.string()});
  CHECK(gapped.code == 2);
  CHECK(gapped.parsed()["violations"][0] == json{{"first", "0"}, {"second", "1"}, {"distance", 1}, {"gap", 1}});

  const auto broken = scratch("broken.csv");
  write_file(broken, "element,label\n0;0\n");
  CHECK(invoke({"check", "cyclic:3", broken.string()}).code == 1);
  CHECK(invoke({"check", "cyclic:3", scratch("absent.csv").string()}).code == 1);
}

TEST_CASE("export") {
  const auto edges = invoke({"export", "cyclic:3", "--format", "edges"});
  CHECK(edges.code == 0);
  CHECK(edges.out == "3\n0 1\n0 2\n1 2\n");

  const auto dot = invoke({"export", "elemab:2,2", "--format", "dot"});
  CHECK(dot.out ==
        "graph power_graph {\n  0 [label=\"(0;0)\"];\n  1 [label=\"(0;1)\"];\n"
        "  2 [label=\"(1;0)\"];\n  3 [label=\"(1;1)\"];\n  0 -- 1;\n  0 -- 2;\n  0 -- 3;\n}\n");

  const auto file = scratch("q8.cayley");
  CHECK(invoke({"export", "quaternion:8", "--format", "cayley", "-o", file.string()}).code == 0);
  const auto reread = invoke({"export", "file:" + file.string(), "--format", "cayley"});
  CHECK(reread.out == read_file(file));
  CHECK(invoke({"lambda", "file:" + file.string()}).parsed()["lambda"] == 9);

  CHECK(invoke({"export", "cyclic:3", "--format", "png"}).code == 1);
}

TEST_CASE("commands are deterministic under --stable") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"analyze", "product:cyclic:2,cyclic:8", "--stable"},
        std::vector<std::string>{"lambda", "semidihedral:32", "--method", "both", "--stable"},
        std::vector<std::string>{"suite", "--max-order", "16", "--stable"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("suite") {
  const auto small = invoke({"suite", "--max-order", "8", "--stable"});
  REQUIRE(small.code == 0);
  const auto summary = small.parsed();
  CHECK(summary["summary"]["failed"] == 0);
  bool c6_seen = false;
  for (const auto& group : summary["groups"]) {
    if (group["spec"] != "cyclic:6") continue;
    c6_seen = true;
    for (const auto& check : group["checks"]) {
      if (check["property"] == "lower-hook") CHECK(check["status"] == "expected-fail");
    }
  }
  CHECK(c6_seen);

  const auto with_file =
      invoke({"suite", "--max-order", "4", "--include", "file:" + support::data_path("s3.cayley")});
  CHECK(with_file.code == 0);
  CHECK(with_file.parsed()["groups"][0]["spec"] ==
        "file:" + support::data_path("s3.cayley"));

  const auto corrupted = invoke(
      {"suite", "--include", "file:" + support::data_path("s3_corrupted.cayley")});
  CHECK(corrupted.code == 1);
  CHECK(corrupted.err.find("NotAssociative") != std::string::npos);

  CHECK(invoke({"suite", "--max-order", "100000"}).code == 3);
}

TEST_CASE("catalogue and predictions") {
  const auto catalogue = cli::builtin_catalogue(32);
  CHECK(std::find(catalogue.begin(), catalogue.end(), "semidihedral:32") != catalogue.end());
  CHECK(std::find(catalogue.begin(), catalogue.end(), "cyclic:6") != catalogue.end());
  CHECK(std::find(catalogue.begin(), catalogue.end(), "dihedral:64") == catalogue.end());
  CHECK(cli::predicted_p_group_lambda(make_cyclic(16)) == 30);
  CHECK(cli::predicted_p_group_lambda(make_quaternion(16)) == 17);
  CHECK(cli::predicted_p_group_lambda(make_semidihedral(16)) == 16);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"analyze"}).code == 1);
}
