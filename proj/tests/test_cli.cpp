#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include <json.hpp>

#include "vspace/cli.hpp"
#include "vspace/coviolator.hpp"
#include "vspace/violator.hpp"
#include "vspace/instances.hpp"
#include "vspace/io.hpp"

using namespace vspace;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Workdir {
  fs::path root;
  Workdir() {
    root = fs::temp_directory_path() / ("vspace_cli_" + std::to_string(::getpid()));
    fs::create_directories(root);
  }
  ~Workdir() { fs::remove_all(root); }
  std::string operator/(const std::string& name) const { return (root / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

cli::CommandOutcome run(std::vector<std::string> args) { return cli::run(args); }

}  // namespace

TEST_CASE("example then analyze reproduces Example 1") {
  Workdir dir;
  const auto e1 = dir / "e1.json";
  CHECK(run({"example", "--name", "example1", "--out", e1}).exit_code == 0);
  CHECK(read_operator_file(e1) == example_space("example1"));

  const auto out = run({"analyze", "--input", e1});
  CHECK(out.exit_code == 0);
  CHECK(out.report.find("X3 fails") != std::string::npos);
  CHECK(out.report.find("X1 holds") != std::string::npos);
  CHECK(out.report.find("UG=false") != std::string::npos);

  const auto js = json::parse(run({"--json", "analyze", "--input", e1}).report);
  CHECK(js["verdict"]["uniquely_generated"] == false);
  CHECK(js["verdict"]["witness"] == json{"2", "3"});
  const auto& x3 = js["ex_laws"][2];
  CHECK(x3["axiom"] == "X3");
  CHECK(x3["holds"] == false);
  CHECK(x3["witness"] == json::parse(R"([["1"], ["1", "2"], ["1", "2", "3"]])"));
}

TEST_CASE("input errors exit with 2") {
  Workdir dir;
  const auto bad = dir / "malformed.json";
  std::ofstream(bad) << "{\"ground_set\": [\"1\"], \"kind\": \"phi\", \"map\": [";
  CHECK(run({"verify", "--input", bad}).exit_code == 2);

  std::ofstream(dir / "partial.json") << R"({"ground_set": ["1"], "kind": "phi", "map": [{"x": [], "y": []}]})";
  const auto partial = run({"verify", "--input", dir / "partial.json"});
  CHECK(partial.exit_code == 2);
  CHECK(partial.report.find("MissingEntry") != std::string::npos);

  const auto usage = run({"verify"});
  CHECK(usage.exit_code == 2);
  CHECK(usage.report.find("--input") != std::string::npos);

  CHECK(run({"census", "--n", "4"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"verify", "--input", dir / "missing.json"}).exit_code == 2);
  CHECK(run({"example", "--name", "example9"}).exit_code == 2);
}

TEST_CASE("failing checks exit with 1 and carry a witness") {
  Workdir dir;
  const auto path = dir / "bad.json";
  std::ofstream(path) << R"({"ground_set": ["1", "2"], "kind": "phi", "map": [
      {"x": [], "y": []}, {"x": ["1"], "y": ["1", "2"]},
      {"x": ["2"], "y": ["2"]}, {"x": ["1", "2"], "y": ["1"]}]})";
  const auto out = run({"verify", "--input", path});
  CHECK(out.exit_code == 1);
  CHECK(out.report.find("V1 fails  witness: {1,2}") != std::string::npos);

  const auto js = json::parse(run({"--json", "verify", "--input", path}).report);
  CHECK(js["axioms"][0] == json::parse(R"({"axiom": "V1", "holds": false, "witness": [["1", "2"]]})"));
  CHECK(js["exit_code"] == 1);
}

TEST_CASE("verify dispatches on kind") {
  Workdir dir;
  const auto e1 = example_space("example1");
  write_operator_file(nu_phi_convert(e1), dir / "nu.json");
  write_operator_file(dualize(e1), dir / "c.json");
  const auto nu = run({"verify", "--input", dir / "nu.json"});
  CHECK(nu.exit_code == 0);
  CHECK(nu.report.find("V22 holds") != std::string::npos);
  const auto c = run({"verify", "--input", dir / "c.json"});
  CHECK(c.exit_code == 0);
  CHECK(c.report.find("CV2 holds") != std::string::npos);
  const auto ca = run({"analyze", "--input", dir / "c.json"});
  CHECK(ca.exit_code == 0);
  CHECK(ca.report.find("Co-Convexity holds") != std::string::npos);
  CHECK(ca.report.find("nonempty choice: false") != std::string::npos);
}

TEST_CASE("bases subcommand") {
  Workdir dir;
  write_operator_file(example_space("example1"), dir / "e1.json");
  const auto out = run({"--json", "bases", "--input", dir / "e1.json", "--set", "2,3"});
  CHECK(out.exit_code == 0);
  const auto js = json::parse(out.report);
  CHECK(js["bases"] == json::parse(R"([["2"], ["3"]])"));
  CHECK(js["generators_count"] == 3);
  CHECK(js["extreme_points"] == json::array());
  CHECK(run({"bases", "--input", dir / "e1.json", "--set", "7"}).exit_code == 2);
}

TEST_CASE("seb on the unit square reports two bases") {
  Workdir dir;
  std::ofstream(dir / "square.csv") << "label,x,y\nc00,0,0\nc10,1,0\nc01,0,1\nc11,1,1\n";
  const auto out = run({"seb", "--points", dir / "square.csv", "--set", "c00,c10,c01,c11",
                        "--emit-table", dir / "square_nu.json"});
  CHECK(out.exit_code == 0);
  CHECK(out.report.find("bases: 2 -> {c10,c01} {c00,c11}") != std::string::npos);
  CHECK(out.report.find("V11 holds") != std::string::npos);
  const auto nu = read_operator_file(dir / "square_nu.json");
  CHECK(nu.kind() == OperatorKind::nu);
  CHECK(nu.n() == 4);

  const auto threaded = run({"--threads", "4", "seb", "--points", dir / "square.csv"});
  CHECK(threaded.exit_code == 0);
}

TEST_CASE("partition, synthesize, partition is a fixed point") {
  Workdir dir;
  write_operator_file(example_space("example2"), dir / "e2.json");
  CHECK(run({"partition", "--input", dir / "e2.json", "--out", dir / "p1.json"}).exit_code == 0);
  CHECK(run({"synthesize", "--relation", dir / "p1.json", "--as", "violator", "--out", dir / "s.json"})
            .exit_code == 0);
  CHECK(read_operator_file(dir / "s.json") == example_space("example2"));
  CHECK(run({"partition", "--input", dir / "s.json", "--out", dir / "p2.json"}).exit_code == 0);
  CHECK(slurp(dir / "p1.json") == slurp(dir / "p2.json"));

  const auto part = run({"partition", "--input", dir / "e2.json"});
  CHECK(part.report.find("R3 fails") != std::string::npos);
  CHECK(part.report.find("Hypercube fails") != std::string::npos);

  // Example 2's relation is not intersection-closed, so no co-violator exists.
  const auto co = run({"synthesize", "--relation", dir / "p1.json", "--as", "coviolator"});
  CHECK(co.exit_code == 1);
  CHECK(co.report.find("R3 fails  witness:") != std::string::npos);
  CHECK(run({"synthesize", "--relation", dir / "p1.json", "--as", "closure"}).exit_code == 2);
}

TEST_CASE("dualize twice restores the file") {
  Workdir dir;
  write_operator_file(example_space("example1"), dir / "e1.json");
  CHECK(run({"dualize", "--input", dir / "e1.json", "--out", dir / "c.json"}).exit_code == 0);
  CHECK(run({"dualize", "--input", dir / "c.json", "--out", dir / "back.json"}).exit_code == 0);
  CHECK(slurp(dir / "e1.json") == slurp(dir / "back.json"));
  write_operator_file(nu_phi_convert(example_space("example1")), dir / "nu.json");
  CHECK(run({"dualize", "--input", dir / "nu.json"}).exit_code == 2);
}

TEST_CASE("census subcommand") {
  const auto out = run({"census", "--n", "2"});
  CHECK(out.exit_code == 0);
  CHECK(out.report.find("violator spaces            9") != std::string::npos);
  const auto js = json::parse(run({"--json", "census", "--n", "3"}).report);
  CHECK(js["record"]["uniquely_generated_count"] == 154);
  CHECK(js["record"]["hypercube_partition_count"] == 154);
}

TEST_CASE("randomized examples are seed-deterministic") {
  const auto a = run({"--seed", "5", "example", "--name", "random_ug_4"});
  const auto b = run({"--seed", "5", "example", "--name", "random_ug_4"});
  CHECK(a.exit_code == 0);
  CHECK(a.report == b.report);
  CHECK(load_operator(json::parse(a.report)) == random_ug_space(4, 5));
  CHECK(run({"example", "--name", "random_ug_"}).exit_code == 2);
}
