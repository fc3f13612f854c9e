#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "boolnet/parser.hpp"
#include "boolnet/reprog.hpp"
#include "corpus.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out_path = "cli_stdout_" + std::to_string(counter) + ".tmp";
  std::string err_path = "cli_stderr_" + std::to_string(counter) + ".tmp";
  ++counter;
  std::string command = std::string(BNREPROG_CLI_PATH) + " " + args + " > " +
                        out_path + " 2> " + err_path;
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

std::string model(const std::string& name) {
  return std::string(BNREPROG_MODELS_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
  return slurp(std::string(BNREPROG_GOLDEN_DIR) + "/" + name);
}

// Wall-clock timing is the one nondeterministic report field.
std::string scrub_elapsed(std::string text) {
  static const std::regex elapsed("\"elapsed_ms\": [0-9.eE+-]+");
  return std::regex_replace(text, elapsed, "\"elapsed_ms\": 0");
}

void check_golden_stable(const std::string& args, const std::string& file) {
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(scrub_elapsed(first.out) == scrub_elapsed(second.out));
  CHECK(scrub_elapsed(first.out) == golden(file));
}

}  // namespace

TEST_CASE("golden: interaction graph export") {
  check_golden_stable("ig " + model("cyclic3.bn"), "ig_cyclic3.dot");
}

TEST_CASE("golden: transition graph export") {
  check_golden_stable("stg " + model("cyclic3.bn"), "stg_cyclic3.dot");
}

TEST_CASE("golden: fixed points") {
  check_golden_stable("fixed-points " + model("cascade4.bn") + " --format json",
                      "fixed_points_cascade4.json");
  check_golden_stable("fixed-points " + model("cascade4.bn"),
                      "fixed_points_cascade4.txt");
}

TEST_CASE("golden: attractors") {
  check_golden_stable("attractors " + model("cyclic3.bn"),
                      "attractors_cyclic3.txt");
}

TEST_CASE("golden: inevitable reprogramming over slices") {
  check_golden_stable("reprogram " + model("cascade5.bn") +
                          " --from 00000 --to 11011 --mode ir --method scc"
                          " --format json",
                      "reprogram_ir_scc_cascade5.json");
}

TEST_CASE("golden: existential reprogramming, text") {
  check_golden_stable("reprogram " + model("toggle5.bn") +
                          " --from 01100 --to 10101 --mode er --method scc",
                      "reprogram_er_scc_toggle5.txt");
}

TEST_CASE("golden: vertex recursion") {
  check_golden_stable("reprogram " + model("triad5.bn") +
                          " --from 10000 --to 01100 --mode ir --method vertex"
                          " --format json",
                      "reprogram_vertex_triad5.json");
}

TEST_CASE("golden: oracle family") {
  check_golden_stable("reprogram " + model("cascade4.bn") +
                          " --from 0000 --to 1100 --mode ir --method oracle"
                          " --format json",
                      "reprogram_oracle_ir_cascade4.json");
}

TEST_CASE("reported solutions satisfy the library predicates") {
  RunResult r = run_cli("reprogram " + model("triad5.bn") +
                        " --from 10000 --to 01100 --mode ir --method vertex"
                        " --format json");
  REQUIRE(r.exit_code == 0);
  json report = json::parse(r.out);

  for (const char* key : {"model", "mode", "method", "from", "to", "solutions",
                          "scc_structure", "diagnostics"})
    REQUIRE(report.contains(key));
  CHECK(report["model"]["n"] == 5);
  CHECK(report["diagnostics"]["warnings"].empty());

  boolnet::BooleanNetwork f = corpus::load(corpus::kTriad5);
  boolnet::State x = corpus::st(std::string(report["from"]));
  boolnet::State y = corpus::st(std::string(report["to"]));
  REQUIRE(!report["solutions"].empty());
  for (const auto& entry : report["solutions"]) {
    boolnet::VertexSet I;
    for (int index : entry) I = I.with(index - 1);
    CHECK(boolnet::ir_predicate(f, x, y, I));
  }
}

TEST_CASE("json interaction graph lists all signed edges") {
  RunResult r = run_cli("ig " + model("cyclic3.bn") + " --format json");
  REQUIRE(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["edges"].size() == 8);
  for (const auto& e : report["edges"]) {
    CHECK((e["sign"] == "+" || e["sign"] == "-"));
    CHECK(e["from"] >= 1);
    CHECK(e["to"] <= 3);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli("fixed-points /nonexistent.bn").exit_code == 2);

  std::ofstream bad("bad_model.tmp.bn");
  bad << "a = (b\n";
  bad.close();
  CHECK(run_cli("fixed-points bad_model.tmp.bn").exit_code == 2);
  std::remove("bad_model.tmp.bn");

  // Guard violation: the three-node example has a cyclic attractor.
  CHECK(run_cli("reprogram " + model("cyclic3.bn") +
                " --from 101 --to 111 --mode er --method scc")
            .exit_code == 3);
  CHECK(run_cli("check " + model("cyclic3.bn") + " --check-assumptions")
            .exit_code == 3);

  // Cap exceeded.
  CHECK(run_cli("fixed-points " + model("cyclic3.bn") + " --max-n 2")
            .exit_code == 4);

  // Invalid arguments.
  CHECK(run_cli("reprogram " + model("triad5.bn") +
                " --from 10000 --to 01100 --mode er --method vertex")
            .exit_code == 5);
  CHECK(run_cli("reprogram " + model("triad5.bn") +
                " --from 100 --to 01100 --mode ir --method scc")
            .exit_code == 5);
  CHECK(run_cli("reprogram " + model("triad5.bn") +
                " --from 10000 --to 01100 --mode zz --method scc")
            .exit_code == 5);
  CHECK(run_cli("fixed-points " + model("cyclic3.bn") + " --format dot")
            .exit_code == 5);
  CHECK(run_cli("notacommand").exit_code == 5);

  // Non-fixed-point endpoints are invalid arguments.
  CHECK(run_cli("reprogram " + model("cascade4.bn") +
                " --from 0100 --to 1100 --mode er --method scc")
            .exit_code == 5);
}

TEST_CASE("check reports the model summary") {
  RunResult r = run_cli("check " + model("cascade5.bn") +
                        " --check-assumptions");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nodes (n=5): x1 x2 x3 x4 x5") != std::string::npos);
  CHECK(r.out.find("all attractors are fixed points: yes") !=
        std::string::npos);
}

TEST_CASE("antichain flag reduces the vertex family") {
  RunResult raw = run_cli("reprogram " + model("triad5.bn") +
                          " --from 10000 --to 01100 --mode ir --method vertex"
                          " --format json");
  RunResult reduced = run_cli("reprogram " + model("triad5.bn") +
                              " --from 10000 --to 01100 --mode ir"
                              " --method vertex --format json --antichain");
  REQUIRE(raw.exit_code == 0);
  REQUIRE(reduced.exit_code == 0);
  json raw_report = json::parse(raw.out);
  json reduced_report = json::parse(reduced.out);
  CHECK(reduced_report["solutions"].size() <= raw_report["solutions"].size());
  CHECK(reduced_report["diagnostics"]["antichain"] == true);
}
