#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fairmatch/io.hpp"
#include "fairmatch/model.hpp"

using namespace fairmatch;

namespace {

namespace fs = std::filesystem;

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d{FAIRMATCH_CLI_SCRATCH};
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) {
  return (scratch() / name).string();
}

int run(const std::string& args) {
  std::string cmd = std::string(FAIRMATCH_CLI_PATH) + " " + args +
                    " > " + path_of("last_stdout.txt") + " 2> " +
                    path_of("last_stderr.txt");
  int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  return WEXITSTATUS(raw);
}

std::string last_stdout() {
  std::ifstream in(path_of("last_stdout.txt"));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate, solve, and verify round trip") {
  CHECK(run("generate random --n 8 --k 2 --colors 2 --edge-prob 1.0 --ell 8 "
            "--seed 5 --output " + path_of("round.json")) == 0);
  CHECK(run("solve --input " + path_of("round.json") +
            " --algo auto --output " + path_of("round_m.json")) == 0);
  CHECK(last_stdout().find("YES") != std::string::npos);
  CHECK(run("verify --input " + path_of("round.json") + " --matching " +
            path_of("round_m.json")) == 0);
  CHECK(last_stdout().find("ok") != std::string::npos);
}

TEST_CASE("verify rejects an unfair matching") {
  Instance inst = make_instance(2, {0, 0}, 1, {{0, 0}, {1, 0}}, 0,
                                Measure::kMaxMin);
  write_file(path_of("unfair.json"), instance_to_json(inst));
  write_file(path_of("unfair_m.json"), matching_to_json(Matching{{0, 0}}));
  CHECK(run("verify --input " + path_of("unfair.json") + " --matching " +
            path_of("unfair_m.json")) == 1);
  CHECK(last_stdout().find("violation") != std::string::npos);
}

TEST_CASE("infeasible instances answer no") {
  // Two same-colored left vertices, one right vertex, margin threshold 1.
  Instance inst = make_instance(2, {0, 0, 0}, 1,
                                {{0, 0}, {1, 0}, {2, 0}}, 2, Measure::kMov);
  write_file(path_of("no.json"), instance_to_json(inst));
  CHECK(run("solve --input " + path_of("no.json") + " --algo auto") == 1);
  CHECK(last_stdout().find("NO") != std::string::npos);
}

TEST_CASE("usage errors exit with the usage code") {
  CHECK(run("") == 2);
  CHECK(run("solve") == 2);
  CHECK(run("solve --input " + path_of("missing.json")) == 2);
  Instance three = make_instance(3, {0, 1, 2}, 1, {{0, 0}, {1, 0}, {2, 0}},
                                 0, Measure::kMaxMin);
  write_file(path_of("three.json"), instance_to_json(three));
  CHECK(run("solve --input " + path_of("three.json") +
            " --algo two-colors") == 2);
  CHECK(run("solve --input " + path_of("three.json") + " --algo nope") == 2);
}

TEST_CASE("generation is deterministic") {
  std::string a = path_of("det_a.json"), b = path_of("det_b.json");
  std::string flags = "generate random --n 10 --k 3 --colors 3 "
                      "--edge-prob 0.5 --ell 1 --seed 42 --output ";
  CHECK(run(flags + a) == 0);
  CHECK(run(flags + b) == 0);
  std::string fa = slurp(a), fb = slurp(b);
  REQUIRE(!fa.empty());
  CHECK(fa == fb);
}

TEST_CASE("reduction subcommands emit solvable instances") {
  CHECK(run("generate from-3dm --random-sizes 2 2 2 --seed 9 --variant 24 "
            "--output " + path_of("tdm.json")) == 0);
  int code = run("solve --input " + path_of("tdm.json") + " --algo auto");
  CHECK((code == 0 || code == 1));

  CHECK(run("generate from-sat --random-vars 3 --seed 4 --output " +
            path_of("sat.json")) == 0);
  code = run("solve --input " + path_of("sat.json") + " --algo auto");
  CHECK((code == 0 || code == 1));
}

TEST_CASE("bench emits a csv table") {
  CHECK(run("bench --suite poly --csv-out " + path_of("bench.csv")) == 0);
  std::string csv = slurp(path_of("bench.csv"));
  CHECK(csv.rfind("instance,algo,answer,millis,n,k,colors,ell", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 2);
}

}  // TEST_SUITE
