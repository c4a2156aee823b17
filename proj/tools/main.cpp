#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairmatch/errors.hpp"
#include "fairmatch/fpt.hpp"
#include "fairmatch/gen.hpp"
#include "fairmatch/io.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/oracle.hpp"
#include "fairmatch/poly.hpp"
#include "fairmatch/route.hpp"

namespace {

using namespace fairmatch;
using Json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

Measure parse_measure(const std::string& text) {
  if (text == "mov") return Measure::kMov;
  if (text == "maxmin") return Measure::kMaxMin;
  throw std::invalid_argument("measure must be \"mov\" or \"maxmin\"");
}

TargetSpec targets_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("mu1") || !doc.contains("mu2") ||
      !doc["mu1"].is_array() || !doc["mu2"].is_array()) {
    throw std::invalid_argument("targets need integer arrays mu1 and mu2");
  }
  TargetSpec targets;
  for (const auto& v : doc["mu1"]) targets.mu1.push_back(v.get<int>());
  for (const auto& v : doc["mu2"]) targets.mu2.push_back(v.get<int>());
  return targets;
}

ThreeDMInstance threedm_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("top-level JSON must be an object");
  }
  ThreeDMInstance t;
  t.size_x = doc.value("size_x", 0);
  t.size_y = doc.value("size_y", 0);
  t.size_z = doc.value("size_z", 0);
  if (!doc.contains("triples") || !doc["triples"].is_array()) {
    throw std::invalid_argument("triples must be an array");
  }
  for (const auto& tr : doc["triples"]) {
    if (!tr.is_array() || tr.size() != 3) {
      throw std::invalid_argument("triples entries must be [x, y, z]");
    }
    t.triples.push_back({tr[0].get<int>(), tr[1].get<int>(), tr[2].get<int>()});
  }
  return t;
}

CnfInstance cnf_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("top-level JSON must be an object");
  }
  CnfInstance c;
  c.num_vars = doc.value("num_vars", 0);
  if (!doc.contains("clauses") || !doc["clauses"].is_array()) {
    throw std::invalid_argument("clauses must be an array");
  }
  for (const auto& cl : doc["clauses"]) {
    if (!cl.is_array() || cl.size() != 3) {
      throw std::invalid_argument("clauses entries must hold three literals");
    }
    c.clauses.push_back({cl[0].get<int>(), cl[1].get<int>(), cl[2].get<int>()});
  }
  return c;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    write_file(path, content);
  }
}

int finish_solve(const Instance& inst, const SolveResult& result,
                 const std::string& output) {
  if (result.status == SolveStatus::kUnknown) {
    std::puts("UNKNOWN");
    return kExitUnknown;
  }
  if (result.status == SolveStatus::kNo) {
    std::puts("NO");
    return kExitNo;
  }
  if (result.matching) {
    Verdict verdict = verify(inst, *result.matching);
    if (!verdict.ok) {
      std::fputs("internal error: witness failed verification\n", stderr);
      return kExitUsage;
    }
    if (!output.empty()) {
      write_file(output, matching_to_json(*result.matching));
    }
  } else if (!output.empty()) {
    std::fputs("note: decision-only answer, no matching written\n", stderr);
  }
  std::puts("YES");
  return kExitYes;
}

struct BenchRow {
  std::string name;
  std::string algo;
  Instance inst;
  long long rounds = 0;  // <= 0 keeps the solver default
};

std::vector<BenchRow> bench_rows(const std::string& suite) {
  std::vector<BenchRow> rows;
  auto rand_row = [&rows](const std::string& name, const std::string& algo,
                          RandomInstanceSpec spec, long long rounds = 0) {
    rows.push_back({name, algo, random_instance(spec), rounds});
  };
  if (suite == "poly" || suite == "all") {
    RandomInstanceSpec complete{64, 3, 4, 1.0, {}, {}, 1, Measure::kMaxMin,
                                0,  {}, 11};
    rand_row("complete-maxmin-n64", "complete", complete);
    complete.measure = Measure::kMov;
    complete.seed = 12;
    rand_row("complete-mov-n64", "complete", complete);
    RandomInstanceSpec two{80, 4, 2, 0.4, {}, {}, 1, Measure::kMaxMin, 2, {},
                           13};
    rand_row("two-colors-n80", "two-colors", two);
    RandomInstanceSpec deg4{60, 20, 3, 0.2, {}, 4, 1, Measure::kMov, 0, {},
                            14};
    rand_row("mov-deg4-n60", "mov-deg4", deg4);
    RandomInstanceSpec low{60, 30, 3, 0.1, 2, 3, 1, Measure::kMaxMin, 0, {},
                           15};
    rand_row("maxmin-lowdeg-n60", "maxmin-lowdeg", low);
    RandomInstanceSpec forced{100, 8, 3, 0.3, 1, {}, 2, Measure::kMaxMin, 0,
                              {}, 16};
    rand_row("forced-n100", "forced", forced);
  }
  if (suite == "fpt" || suite == "all") {
    RandomInstanceSpec kc{40, 3, 3, 0.5, {}, {}, 1, Measure::kMov, 0, 20, 21};
    rand_row("kc-n40-k3c3", "kc", kc);
    RandomInstanceSpec mk{300, 3, 8, 0.5, {}, {}, 1, Measure::kMaxMin, 0, {},
                          22};
    rand_row("maxmin-k-n300-c8", "maxmin-k", mk);
    RandomInstanceSpec ne{30, 3, 3, 0.5, {}, {}, 1, Measure::kMaxMin, 1, {},
                          23};
    rand_row("maxmin-k-nonempty-n30", "maxmin-k-nonempty", ne);
    RandomInstanceSpec mov{30, 3, 2, 0.5, {}, {}, 2, Measure::kMov, 0, {}, 24};
    rand_row("mov-k-n30-k3", "mov-k", mov, 200);
    RandomInstanceSpec scale{2000, 3, 50, 0.5, {}, {}, 2, Measure::kMaxMin, 0,
                             {}, 25};
    rand_row("scale-maxmin-k-n2000-c50", "maxmin-k", scale);
  }
  if (suite == "reductions" || suite == "all") {
    rows.push_back({"3dm33-s222", "auto",
                    reduce_3dm_maxmin33(random_3dm(2, 2, 2, 31)), 0});
    rows.push_back({"3dm24-s222", "auto",
                    reduce_3dm_maxmin24(random_3dm(2, 2, 2, 32)), 0});
    rows.push_back({"sat25-3var", "auto",
                    reduce_sat_mov25(random_sat4occ(3, 33)), 0});
  }
  if (rows.empty()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return rows;
}

int run_bench(const std::string& suite, const std::string& csv_out) {
  std::string csv = "instance,algo,answer,millis,n,k,colors,ell\n";
  for (const BenchRow& row : bench_rows(suite)) {
    RunOptions opts;
    opts.rounds = row.rounds;
    auto start = std::chrono::steady_clock::now();
    std::string answer = "unknown";
    try {
      SolveResult result = run_algo(row.inst, row.algo, opts);
      if (result.status == SolveStatus::kYes) answer = "yes";
      if (result.status == SolveStatus::kNo) answer = "no";
    } catch (const ResourceError&) {
    }
    double millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    char line[256];
    std::snprintf(line, sizeof(line), "%s,%s,%s,%.3f,%d,%d,%d,%d\n",
                  row.name.c_str(), row.algo.c_str(), answer.c_str(), millis,
                  row.inst.n(), row.inst.k, row.inst.num_colors, row.inst.ell);
    csv += line;
  }
  emit(csv_out, csv);
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair many-to-one matching solver suite"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Decide an instance file");
  std::string solve_input, solve_output, solve_algo = "auto", solve_targets;
  std::uint64_t solve_seed = 0;
  long long solve_rounds = 0, solve_budget = 0;
  solve->add_option("--input", solve_input, "Instance JSON file")->required();
  solve->add_option("--output", solve_output, "Write the matching here");
  solve->add_option("--algo", solve_algo,
                    "auto|kc|maxmin-k|maxmin-k-nonempty|mov-k|targeted-mov|"
                    "two-colors|mov-deg4|maxmin-lowdeg|complete|forced|"
                    "oracle|dp");
  solve->add_option("--seed", solve_seed, "Randomized solver seed");
  solve->add_option("--rounds", solve_rounds,
                    "Randomized solver rounds (0 = default)");
  solve->add_option("--budget", solve_budget,
                    "Search node budget (0 = default)");
  solve->add_option("--targets", solve_targets,
                    "JSON file with mu1/mu2 arrays for targeted-mov");

  auto* verify_cmd = app.add_subcommand("verify", "Check a matching file");
  std::string verify_input, verify_matching;
  verify_cmd->add_option("--input", verify_input, "Instance JSON file")
      ->required();
  verify_cmd->add_option("--matching", verify_matching, "Matching JSON file")
      ->required();

  auto* generate = app.add_subcommand("generate", "Produce instance files");
  generate->require_subcommand(1);

  auto* gen_random = generate->add_subcommand("random", "Random instance");
  RandomInstanceSpec spec;
  int spec_left_cap = 0, spec_right_cap = 0, spec_size_max = -1;
  std::string spec_measure = "maxmin", gen_random_out;
  gen_random->add_option("--n", spec.n, "Left vertices")->required();
  gen_random->add_option("--k", spec.k, "Right vertices")->required();
  gen_random->add_option("--colors", spec.num_colors, "Color count")
      ->required();
  gen_random->add_option("--edge-prob", spec.edge_prob, "Extra edge rate");
  gen_random->add_option("--max-left-degree", spec_left_cap,
                         "Left degree cap (0 = none)");
  gen_random->add_option("--max-right-degree", spec_right_cap,
                         "Right degree cap (0 = none)");
  gen_random->add_option("--ell", spec.ell, "Fairness threshold");
  gen_random->add_option("--measure", spec_measure, "mov|maxmin");
  gen_random->add_option("--size-min", spec.size_min, "Minimum share size");
  gen_random->add_option("--size-max", spec_size_max,
                         "Maximum share size (-1 = none)");
  gen_random->add_option("--seed", spec.seed, "Generator seed");
  gen_random->add_option("--output", gen_random_out, "Output file");

  auto* gen_3dm = generate->add_subcommand(
      "from-3dm", "Reduce a 3-dimensional matching instance");
  std::string gen_3dm_input, gen_3dm_variant = "33", gen_3dm_out;
  std::vector<int> gen_3dm_sizes;
  std::uint64_t gen_3dm_seed = 0;
  gen_3dm->add_option("--input", gen_3dm_input, "3DM JSON file");
  gen_3dm->add_option("--random-sizes", gen_3dm_sizes,
                      "Generate a random source with sizes X Y Z")
      ->expected(3);
  gen_3dm->add_option("--seed", gen_3dm_seed, "Generator seed");
  gen_3dm->add_option("--variant", gen_3dm_variant,
                      "33 (degrees 3/3) or 24 (degrees 2/4)");
  gen_3dm->add_option("--output", gen_3dm_out, "Output file");

  auto* gen_sat = generate->add_subcommand("from-sat",
                                           "Reduce a 2+2 occurrence CNF");
  std::string gen_sat_input, gen_sat_out;
  int gen_sat_vars = 0;
  std::uint64_t gen_sat_seed = 0;
  gen_sat->add_option("--input", gen_sat_input, "CNF JSON file");
  gen_sat->add_option("--random-vars", gen_sat_vars,
                      "Generate a random source with this many variables");
  gen_sat->add_option("--seed", gen_sat_seed, "Generator seed");
  gen_sat->add_option("--output", gen_sat_out, "Output file");

  auto* bench = app.add_subcommand("bench", "Timing rows as CSV");
  std::string bench_suite = "all", bench_csv;
  bench->add_option("--suite", bench_suite, "all|poly|fpt|reductions");
  bench->add_option("--csv-out", bench_csv, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(solve)) {
      Instance inst = instance_from_json(read_file(solve_input));
      RunOptions opts;
      opts.rounds = solve_rounds;
      opts.seed = solve_seed;
      if (solve_budget > 0) {
        opts.oracle_budget = solve_budget;
        opts.config.ilp.max_nodes = solve_budget;
      }
      if (solve_algo == "auto") {
        RouteDecision decision = route(inst, opts.config);
        std::printf("route: %s (%s)\n", decision.solver.c_str(),
                    decision.reason.c_str());
      }
      SolveResult result;
      if (solve_algo == "targeted-mov") {
        if (solve_targets.empty()) {
          throw std::invalid_argument("targeted-mov needs --targets");
        }
        TargetSpec targets = targets_from_json(read_file(solve_targets));
        result = solve_targeted_mov(inst, targets, inst.size_min == 1,
                                    opts.config);
      } else {
        result = run_algo(inst, solve_algo, opts);
      }
      return finish_solve(inst, result, solve_output);
    }
    if (app.got_subcommand(verify_cmd)) {
      Instance inst = instance_from_json(read_file(verify_input));
      Matching m = matching_from_json(read_file(verify_matching));
      Verdict verdict = verify(inst, m);
      if (verdict.ok) {
        std::puts("ok");
        return kExitYes;
      }
      for (const Violation& violation : verdict.violations) {
        std::printf("violation: %s\n", violation.detail.c_str());
      }
      return kExitNo;
    }
    if (app.got_subcommand(generate)) {
      if (generate->got_subcommand(gen_random)) {
        if (spec_left_cap > 0) spec.max_left_degree = spec_left_cap;
        if (spec_right_cap > 0) spec.max_right_degree = spec_right_cap;
        if (spec_size_max >= 0) spec.size_max = spec_size_max;
        spec.measure = parse_measure(spec_measure);
        emit(gen_random_out, instance_to_json(random_instance(spec)));
        return kExitYes;
      }
      ThreeDMInstance source3dm;
      CnfInstance source_cnf;
      if (generate->got_subcommand(gen_3dm)) {
        if (!gen_3dm_input.empty()) {
          source3dm = threedm_from_json(read_file(gen_3dm_input));
        } else if (gen_3dm_sizes.size() == 3) {
          source3dm = random_3dm(gen_3dm_sizes[0], gen_3dm_sizes[1],
                                 gen_3dm_sizes[2], gen_3dm_seed);
        } else {
          throw std::invalid_argument("need --input or --random-sizes");
        }
        if (gen_3dm_variant == "33") {
          emit(gen_3dm_out, instance_to_json(reduce_3dm_maxmin33(source3dm)));
        } else if (gen_3dm_variant == "24") {
          emit(gen_3dm_out, instance_to_json(reduce_3dm_maxmin24(source3dm)));
        } else {
          throw std::invalid_argument("variant must be 33 or 24");
        }
        return kExitYes;
      }
      if (!gen_sat_input.empty()) {
        source_cnf = cnf_from_json(read_file(gen_sat_input));
      } else if (gen_sat_vars > 0) {
        source_cnf = random_sat4occ(gen_sat_vars, gen_sat_seed);
      } else {
        throw std::invalid_argument("need --input or --random-vars");
      }
      emit(gen_sat_out, instance_to_json(reduce_sat_mov25(source_cnf)));
      return kExitYes;
    }
    return run_bench(bench_suite, bench_csv);
  } catch (const ResourceError& e) {
    std::fprintf(stderr, "resource limit: %s\n", e.what());
    return kExitUnknown;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
