#include <sstream>

#include "citex/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace citex;

namespace {

const std::string data_dir{CITEX_TEST_DATA_DIR};

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rank example 1 puts a4 and p5 on top") {
  const auto r = invoke({"rank", data_dir + "/example1.json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1     a4      0.320462") != std::string::npos);
  CHECK(r.out.find("1     p5     0.390463") != std::string::npos);
}

TEST_CASE("rank output formats") {
  const auto json_run = invoke({"rank", data_dir + "/example1.json", "--output-format", "json", "--tol", "1e-12"});
  CHECK(json_run.code == 0);
  const auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc["authors"][0]["id"] == "a4");
  CHECK(doc["config"]["tolerance"] == 1e-12);

  const auto csv_run = invoke({"rank", data_dir + "/example1_csv", "--output-format", "csv"});
  CHECK(csv_run.code == 0);
  CHECK(csv_run.out.find("1,a4,0.320462") != std::string::npos);
}

TEST_CASE("weighted rank with unit weights is byte-identical to base rank") {
  const auto base = invoke({"rank", data_dir + "/example1.json", "--output-format", "json"});
  const auto weighted = invoke({"rank", data_dir + "/example1_unit_weights.json", "--weighted", "--output-format", "json"});
  REQUIRE(base.code == 0);
  REQUIRE(weighted.code == 0);
  const auto a = nlohmann::json::parse(base.out);
  const auto b = nlohmann::json::parse(weighted.out);
  CHECK(a["authors"].dump() == b["authors"].dump());
  CHECK(a["papers"].dump() == b["papers"].dump());
}

TEST_CASE("max_iterations reached exits 0 with a warning") {
  const auto r = invoke({"rank", data_dir + "/example1.json", "--max-iters", "2"});
  CHECK(r.code == 0);
  CHECK(r.err.find("WARNING: max_iterations (2)") != std::string::npos);
}

TEST_CASE("validate") {
  const auto ok = invoke({"validate", data_dir + "/example1.json"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("p1 p2 p3 p4 p5") != std::string::npos);

  const auto cyclic = invoke({"validate", data_dir + "/cyclic.json"});
  CHECK(cyclic.code == 1);
  CHECK(cyclic.err.find("p1 -> p2 -> p1") != std::string::npos);
}

TEST_CASE("metrics requires c and k") {
  CHECK(invoke({"metrics", data_dir + "/example1.json"}).code == 2);
  const auto r = invoke({"metrics", data_dir + "/example1.json", "--c", "1", "--k", "2", "--output-format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["authors"][3]["id"] == "a4");
  CHECK(doc["authors"][3]["h_index"] == 2);
  CHECK(doc["authors"][3]["significant_papers"] == 2);
  CHECK(doc["authors"][3]["top_k_citations"] == 5);
}

TEST_CASE("venues") {
  CHECK(invoke({"venues", data_dir + "/example1.json"}).code == 1);
  const auto r = invoke({"venues", data_dir + "/example1_venues.json", "--output-format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("V2,3,4,0.259062") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"rank"}).code == 2);
  CHECK(invoke({"rank", data_dir + "/example1.json", "--output-format", "xml"}).code == 2);
  CHECK(invoke({"rank", data_dir + "/example1.json", "--max-iters", "0"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("missing file is a dataset error") {
  CHECK(invoke({"rank", data_dir + "/does_not_exist.json"}).code == 1);
}
