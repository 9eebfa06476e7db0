#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef MCLT_CLI_PATH
#error "MCLT_CLI_PATH must point at the built CLI"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// env assignments may be prepended to args ("MCLT_CAP=10 count ...")
RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  std::string env, rest = args;
  while (!rest.empty() && rest.find('=') != std::string::npos &&
         rest.find('=') < rest.find(' ')) {
    const auto space = rest.find(' ');
    env += rest.substr(0, space) + " ";
    rest = rest.substr(space + 1);
  }
  const std::string cmd = env + std::string(MCLT_CLI_PATH) + " " + rest +
                          " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("count") {
  CHECK(run_cli("count --pairs 2 --colors 3").out == "9\n");
  CHECK(run_cli("count --pairs 1 --colors 1").out == "1\n");
  CHECK(run_cli("count --pairs 3 --colors 3").out == "15\n");
  CHECK(run_cli("count -m 4 -N 6").out == "1575\n");
  CHECK(run_cli("count --pairs 2 --colors 3").exit_code == 0);

  const RunResult checked = run_cli("count --pairs 2 --colors 3 --check");
  CHECK(checked.exit_code == 0);
  CHECK(checked.out == "9\ncheck: enumerated 9 -> match\n");

  CHECK(run_cli("count --pairs 0 --colors 3 --allow-empty").out == "1\n");
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run_cli("count --pairs 3 --colors 2").exit_code == 2);
  CHECK(run_cli("count --pairs 2").exit_code == 2);
  CHECK(run_cli("count --pairs 0 --colors 3").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("enumerate --pairs 2 --colors 2 --method wrong").exit_code ==
        2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("count --help").exit_code == 0);
}

TEST_CASE("enumerate") {
  const RunResult peakless = run_cli("enumerate --pairs 2 --colors 2");
  CHECK(peakless.exit_code == 0);
  CHECK(peakless.out == "1 1 2 2\n1 2 2 1\n2 2 1 1\n");
  // both methods print the identical ordered listing
  CHECK(run_cli("enumerate --pairs 2 --colors 2 --method paint").out ==
        peakless.out);

  const RunResult all = run_cli("enumerate --pairs 2 --colors 2 --all");
  CHECK(all.out ==
        "1 1 2 2\n1 2 1 2\n1 2 2 1\n2 1 1 2\n2 1 2 1\n2 2 1 1\n");

  const RunResult json = run_cli("enumerate -m 1 -N 2 --format json");
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["count"] == 2);
  CHECK(doc["maps"][0] == nlohmann::json::array({1, 1}));
  CHECK(doc["maps"][1] == nlohmann::json::array({2, 2}));
}

TEST_CASE("paint") {
  CHECK(run_cli("paint -m 2 -N 2 --subset-index 0 --digits 1,0").out ==
        "1 2 2 1\n");
  CHECK(run_cli("paint -m 2 -N 2 --digits 0,0").out == "2 2 1 1\n");
  CHECK(run_cli("paint -m 2 -N 2 --digits 3,0").exit_code == 2);
  CHECK(run_cli("paint -m 2 -N 2 --subset-index 1 --digits 0,0").exit_code ==
        2);

  const RunResult all = run_cli("paint -m 2 -N 2");
  CHECK(all.exit_code == 0);
  CHECK(all.out == "0 0,0 2 2 1 1\n0 1,0 1 2 2 1\n0 2,0 1 1 2 2\n");
}

TEST_CASE("moment") {
  CHECK(run_cli("moment --word 1,2,2,1").out == "1\n");
  CHECK(run_cli("moment --word 1,2,1").out == "0\n");
  CHECK(run_cli("moment --word 2,1,1,2").out == "0\n");
}

TEST_CASE("moment with a custom sequence file") {
  {
    std::ofstream out("cli_moments.json");
    out << R"({"max_order": 4, "moments": ["1", "0", "1", "0", "9"]})";
  }
  CHECK(run_cli("moment --word 1,1,1,1 --moments cli_moments.json").out ==
        "9\n");
  // insufficient order is an engine failure: exit 1
  CHECK(run_cli("moment --word 1,1,1,1,1 --moments cli_moments.json")
            .exit_code == 1);
  std::remove("cli_moments.json");

  {
    std::ofstream out("cli_moments_bad.json");
    out << R"({"max_order": 1, "moments": ["2", "0"]})";
  }
  CHECK(run_cli("moment --word 1 --moments cli_moments_bad.json").exit_code ==
        2);
  std::remove("cli_moments_bad.json");
}

TEST_CASE("table rows pin known exact values") {
  const RunResult row = run_cli("table --order 4 --colors 10");
  CHECK(row.exit_code == 0);
  CHECK(row.out == "N,m,normalized,pair_sum,limit,abs_error\n"
                   "10,4,1.45,1.35,1.5,0.05\n");

  CHECK(run_cli("table --order 2 --colors 7").out ==
        "N,m,normalized,pair_sum,limit,abs_error\n7,2,1,1,1,0\n");

  CHECK(run_cli("table --order 3 --colors 10").out ==
        "N,m,normalized,pair_sum,limit,abs_error\n10,3,0,0,0,0\n");

  CHECK(run_cli("table --order 4 --colors 10 --rational").out ==
        "N,m,normalized,pair_sum,limit,abs_error\n"
        "10,4,29/20,27/20,3/2,1/20\n");

  CHECK(run_cli("table --order 4 --colors 1,2").out ==
        "N,m,normalized,pair_sum,limit,abs_error\n"
        "1,4,1,0,1.5,0.5\n"
        "2,4,1.25,0.75,1.5,0.25\n");
}

TEST_CASE("table output is deterministic and JSON round-trips") {
  const std::string args = "table --order 2,4,6,8 --colors 5,10,20,40";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  const RunResult json = run_cli(args + " --format json");
  CHECK(json.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(json.out);
  CHECK(doc.dump(2) + "\n" == json.out);  // reparse-and-render is identity
  CHECK(doc["config"]["moments"] == "bernoulli");
  CHECK(doc["rows"].size() == 16);
  const auto& row = doc["rows"][0];
  auto it = row.begin();
  CHECK(it.key() == "N");
  CHECK((++it).key() == "m");
  CHECK((++it).key() == "normalized");
  CHECK((++it).key() == "pair_sum");
  CHECK((++it).key() == "limit");
  CHECK((++it).key() == "abs_error");
}

TEST_CASE("classes") {
  const RunResult classes = run_cli("classes --order 4");
  CHECK(classes.exit_code == 0);
  CHECK(classes.out == "class,count,limit\n"
                       "monotone,3,1.5\n"
                       "commutative,3,3\n"
                       "free,2,2\n"
                       "boolean,1,1\n");
  const RunResult sixth = run_cli("classes --order 6");
  CHECK(sixth.out == "class,count,limit\n"
                     "monotone,15,2.5\n"
                     "commutative,15,15\n"
                     "free,5,5\n"
                     "boolean,1,1\n");
}

TEST_CASE("arcsine") {
  const RunResult arcs = run_cli("arcsine --order 0,1,4");
  CHECK(arcs.exit_code == 0);
  std::istringstream lines(arcs.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,closed,quadrature,abs_error");
  std::getline(lines, line);
  CHECK(line.substr(0, 4) == "0,1,");
  std::getline(lines, line);
  CHECK(line.substr(0, 4) == "1,0,");
  std::getline(lines, line);
  CHECK(line.substr(0, 6) == "4,1.5,");
  CHECK(run_cli("arcsine --order 4 --tolerance 0").exit_code == 2);
}

TEST_CASE("cap handling: flag wins over environment") {
  CHECK(run_cli("MCLT_CAP=10 enumerate --pairs 2 --colors 3").exit_code == 1);
  CHECK(run_cli("MCLT_CAP=10 enumerate --pairs 2 --colors 3 --cap 100")
            .exit_code == 0);
  CHECK(run_cli("MCLT_CAP=banana count --pairs 1 --colors 1").exit_code == 2);
  CHECK(run_cli("MCLT_CAP=100 count --pairs 1 --colors 1").exit_code == 0);
}

TEST_CASE("table accepts a moments file and surfaces engine errors") {
  {
    std::ofstream out("cli_table_moments.json");
    out << R"({"max_order": 4, "moments": ["1", "0", "1", "0", "1"]})";
  }
  const RunResult ok =
      run_cli("table --order 2,4 --colors 10 --moments cli_table_moments.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "N,m,normalized,pair_sum,limit,abs_error\n"
                  "10,2,1,1,1,0\n"
                  "10,4,1.45,1.35,1.5,0.05\n");
  // order 6 exceeds the file's max_order: engine failure, exit 1
  const RunResult short_file =
      run_cli("table --order 6 --colors 10 --moments cli_table_moments.json");
  CHECK(short_file.exit_code == 1);
  std::remove("cli_table_moments.json");
}

TEST_CASE("default verify run is green") {
  const RunResult verify = run_cli("verify");
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("16 properties: 16 passed, 0 failed, 0 skipped") !=
        std::string::npos);
  CHECK(verify.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify with a tiny cap reports skips and still exits 0") {
  const RunResult verify = run_cli("verify --cap 10");
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("SKIP count-agreement") != std::string::npos);
  CHECK(verify.out.find("PASS singleton-condition") != std::string::npos);
  CHECK(verify.out.find("FAIL") == std::string::npos);
}
