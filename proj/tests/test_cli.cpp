// Copyright 2026 The sdpaths Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Drives the installed binary end to end through a shell.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCli = SDP_CLI_PATH;

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("sdp_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const int status = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("gen + info round trip") {
  TempDir tmp;
  const std::string terrain = tmp.file("ramp.json");
  CHECK(run("gen --family ramp --param 1 --out " + terrain) == 0);
  CHECK(run("info --terrain " + terrain + " --epsilon 1") == 0);

  const json doc = json::parse(slurp(terrain));
  CHECK(doc["vertices"].size() == 4);
  CHECK(doc["triangles"].size() == 2);
}

TEST_CASE("solve answers the ramp query within the approximation band") {
  TempDir tmp;
  const std::string terrain = tmp.file("ramp.json");
  REQUIRE(run("gen --family ramp --param 1 --out " + terrain) == 0);

  const std::string out = tmp.file("solve.json");
  CHECK(run("solve --terrain " + terrain +
            " --epsilon 0.1 --source v:0 --target v:3 --out " + out) == 0);
  const json doc = json::parse(slurp(out));
  REQUIRE(doc["answers"].size() == 1);
  const double len = doc["answers"][0]["length"].get<double>();
  CHECK(len >= std::sqrt(3.0) - 1e-9);
  CHECK(len <= 1.1 * std::sqrt(3.0) + 1e-9);
  CHECK(doc["answers"][0]["status"] == "ok");
}

TEST_CASE("solver choice does not change lengths") {
  TempDir tmp;
  const std::string out_d = tmp.file("d.json"), out_b = tmp.file("b.json");
  CHECK(run("solve --family random --rows 3 --cols 3 --seed 5 --epsilon 0.5 --source v:0 "
            "--target v:8 --solver dijkstra --out " +
            out_d) <= 1);
  CHECK(run("solve --family random --rows 3 --cols 3 --seed 5 --epsilon 0.5 --source v:0 "
            "--target v:8 --solver bushwhack --out " +
            out_b) <= 1);
  const json a = json::parse(slurp(out_d)), b = json::parse(slurp(out_b));
  REQUIRE(a["answers"].size() == b["answers"].size());
  if (a["answers"][0]["status"] == "ok") {
    const double la = a["answers"][0]["length"].get<double>();
    const double lb = b["answers"][0]["length"].get<double>();
    CHECK(std::abs(la - lb) <= 1e-9 * std::max(1.0, la));
  }
}

TEST_CASE("outputs are byte-identical across reruns") {
  TempDir tmp;
  const std::string out1 = tmp.file("a.json"), out2 = tmp.file("b.json");
  const std::string cmd = "solve --family random --rows 4 --cols 4 --seed 11 --epsilon 0.5 "
                          "--source v:0 --target v:15 --target p:0.4,0.4 --out ";
  CHECK(run(cmd + out1) <= 1);
  CHECK(run(cmd + out2) <= 1);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(!slurp(out1).empty());
}

TEST_CASE("query emits a verifiable path") {
  TempDir tmp;
  const std::string terrain = tmp.file("ramp.json");
  REQUIRE(run("gen --family ramp --param 1 --out " + terrain) == 0);
  const std::string answer = tmp.file("answer.json");
  CHECK(run("query --terrain " + terrain +
            " --epsilon 0.2 --source v:0 --target p:0.7,0.8 --out " + answer) == 0);

  const json doc = json::parse(slurp(answer));
  CHECK(doc["terminal_kind"] == "interior-point");
  // Re-shape into a path document and verify it.
  json path;
  path["points"] = doc["points"];
  const std::string path_file = tmp.file("path.json");
  std::ofstream(path_file) << path.dump();
  CHECK(run("verify --terrain " + terrain + " --path " + path_file) == 0);
}

TEST_CASE("verify rejects an ascending path") {
  TempDir tmp;
  const std::string terrain = tmp.file("ramp.json");
  REQUIRE(run("gen --family ramp --param 1 --out " + terrain) == 0);
  const std::string path_file = tmp.file("bad.json");
  std::ofstream(path_file) << R"({"points": [[0,1,0],[0,0,1]]})";
  CHECK(run("verify --terrain " + terrain + " --path " + path_file) == 1);
}

TEST_CASE("exit codes distinguish failure kinds") {
  TempDir tmp;
  // Unparseable terrain -> input error.
  const std::string bad = tmp.file("bad.json");
  std::ofstream(bad) << "{not json";
  CHECK(run("info --terrain " + bad) == 2);

  // Missing file -> input error.
  CHECK(run("info --terrain " + tmp.file("missing.json")) == 2);

  // A target strictly above the source is infeasible -> exit 1.
  const std::string terrain = tmp.file("ramp.json");
  REQUIRE(run("gen --family ramp --param 1 --out " + terrain) == 0);
  CHECK(run("solve --terrain " + terrain +
            " --epsilon 0.5 --source v:3 --target v:0 --out " + tmp.file("inf.json")) == 1);

  // Bad epsilon -> input error.
  CHECK(run("solve --terrain " + terrain + " --epsilon 1.5 --source v:0 --target v:3") == 2);
}

TEST_CASE("discretize report matches the expected ramp counts") {
  TempDir tmp;
  const std::string out = tmp.file("disc.json");
  CHECK(run("discretize --family ramp --param 1 --epsilon 1 --out " + out) == 0);
  const json doc = json::parse(slurp(out));
  CHECK(doc["node_count"].get<int>() == 141);
  CHECK(doc["per_edge"].size() == 5);
  CHECK(doc["node_count"].get<double>() <= doc["node_bound_total"].get<double>());
}

TEST_CASE("bench produces the CSV header and rows") {
  TempDir tmp;
  const std::string out = tmp.file("bench.csv");
  CHECK(run("bench --family ramp --param 1 --source v:0 --target v:3 "
            "--epsilon 1 --epsilon 0.5 --out " +
            out) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("terrain,n,geometry_factor,epsilon,node_count,settled", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 epsilon rows

  // Empty target list: header only.
  const std::string out2 = tmp.file("bench2.csv");
  CHECK(run("bench --family ramp --param 1 --source v:0 --epsilon 1 --out " + out2) == 0);
  const std::string csv2 = slurp(out2);
  CHECK(std::count(csv2.begin(), csv2.end(), '\n') == 1);
}

TEST_CASE("point sources are inserted into the terrain") {
  TempDir tmp;
  const std::string terrain = tmp.file("ramp.json");
  REQUIRE(run("gen --family ramp --param 1 --out " + terrain) == 0);
  const std::string out = tmp.file("psrc.json");
  CHECK(run("solve --terrain " + terrain +
            " --epsilon 0.5 --source p:0.2,0.2 --target v:3 --out " + out) == 0);
  const json doc = json::parse(slurp(out));
  CHECK(doc["summary"]["vertices"].get<int>() == 5);  // ramp plus the inserted source
  CHECK(doc["answers"][0]["status"] == "ok");
}
