#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "ktpf/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ktpf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("park") {
  CHECK(run({"park", "(4;(0,1,1,2,2))"}).out == "2,1,2,2,1,2,2,1,1\n");
  CHECK(run({"park", "(3)"}).out == "1,1,1\n");
  CHECK(run({"park", "(2;(0))"}).out == "2,1,1\n");
  CHECK(run({"park", "(2;(0))", "--method=iter"}).out == "2,1,1\n");

  const auto both = run({"park", "(4;(0,1,1,2,2))", "--method=both"});
  CHECK(both.code == 0);
  CHECK(both.out == "sim 2,1,2,2,1,2,2,1,1\niter 2,1,2,2,1,2,2,1,1\n");

  const auto j = nlohmann::json::parse(run({"park", "(2;(0))", "--format=json"}).out);
  CHECK(j["config"] == nlohmann::json({2, 1, 1}));
}

TEST_CASE("exit codes") {
  const auto parse = run({"park", "(2;(x))"});
  CHECK(parse.code == ktpf::cli::kParseError);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("offset") != std::string::npos);

  CHECK(run({"park", "(2;(3))"}).code == ktpf::cli::kInvalidInput);
  CHECK(run({"count", "1,0,2"}).code == ktpf::cli::kInvalidInput);
  CHECK(run({"famsize", "(2;(7))"}).code == ktpf::cli::kInvalidInput);
  CHECK(run({"count", "1,a"}).code == ktpf::cli::kParseError);
  CHECK(run({"park", "(2;(0))", "--nope"}).code == ktpf::cli::kParseError);
  CHECK(run({"frobnicate"}).code == ktpf::cli::kParseError);
  CHECK(run({}).code == ktpf::cli::kParseError);

  const auto budget = run({"enumerate", "4,4", "--budget=10"});
  CHECK(budget.code == ktpf::cli::kBudgetExceeded);
  CHECK(budget.out.empty());
  CHECK(run({"atleast", "3", "4"}).code == ktpf::cli::kInvalidInput);
}

TEST_CASE("budget from the environment") {
  ::setenv("KTPF_BUDGET", "5", 1);
  CHECK(run({"enumerate", "2,2"}).code == ktpf::cli::kBudgetExceeded);
  CHECK(run({"enumerate", "2,2", "--budget=100"}).code == 0);
  ::unsetenv("KTPF_BUDGET");
  CHECK(run({"enumerate", "2,2"}).code == 0);
}

TEST_CASE("counts") {
  CHECK(run({"count", "1,1,1"}).out == "6\n");
  CHECK(run({"configs", "2,2"}).out == "6\n");
  CHECK(run({"famsize", "(4;(2,3,4))"}).out == "6\n");
  const auto j = nlohmann::json::parse(run({"count", "20,20", "--format=json"}).out);
  CHECK(j["count"] == "278218429446951548637196401");
  CHECK(run({"count", "2,2", "--format=csv"}).out == "order,count\n\"2,2\",9\n");
}

TEST_CASE("gm") {
  CHECK(run({"gm", "(5;(2,1,3),(4,0,3))"}).out == "{{(1,1),(2,1),(3,1)},{(0,1),(3,1),(4,1)}}\n");
}

TEST_CASE("enumerate streams JSON lines") {
  const auto tpfs = lines(run({"enumerate", "1,1", "--what=tpfs"}).out);
  REQUIRE(tpfs.size() == 3);
  const auto first = nlohmann::json::parse(tpfs[0]);
  CHECK(first["tpf"] == "(1;(0))");
  CHECK(first["canonical"] == "(1;(0))");
  CHECK(first["config"] == nlohmann::json({2, 1}));
  CHECK(nlohmann::json::parse(tpfs[2])["total"] == "2");

  CHECK(lines(run({"enumerate", "3", "--what=configs"}).out).size() == 2);
  CHECK(lines(run({"enumerate", "2,2", "--what=families"}).out).size() == 7);
  CHECK(run({"enumerate", "2,2,1"}).out == run({"enumerate", "2,2,1"}).out);
}

TEST_CASE("family") {
  const auto out = lines(run({"family", "(4;(2,3,4))"}).out);
  REQUIRE(out.size() == 7);
  CHECK(out.back() == "size 6 config 1,1,2,1,2,1,2");
  const auto table = lines(run({"family", "--order=1,1"}).out);
  CHECK(table == std::vector<std::string>{"(1;(0)) 1 2,1", "(1;(1)) 1 1,2"});
  CHECK(run({"family"}).code == ktpf::cli::kParseError);
}

TEST_CASE("verify") {
  const auto small = run({"verify", "--max-m=1", "--max-k=1"});
  CHECK(small.code == 0);
  CHECK(small.out == "(1) lhs=1 rhs=1 L=1 families=1 identity_holds=true\norders 1 failures 0\n");

  const auto mid = run({"verify", "--max-m=6", "--max-k=3"});
  CHECK(mid.code == 0);
  CHECK(mid.out.find("(2,2) lhs=9 rhs=9") != std::string::npos);
  CHECK(mid.out.find("identity_holds=false") == std::string::npos);

  const auto csv = lines(run({"verify", "--max-m=3", "--max-k=2", "--format=csv", "--exhaustive"}).out);
  CHECK(csv[0] ==
        "order,total_tpfs,identity_lhs,num_configurations,families_seen,identity_holds,"
        "tpfs_enumerated,distinct_configs,universe_consistent");
  CHECK(csv.size() == 1 + 6);
}

TEST_CASE("atleast") {
  const auto two = lines(run({"atleast", "2", "0"}).out);
  CHECK(two == std::vector<std::string>{"1,1,2 1", "1,2,1 1", "2,1,1 1", "distinct 3 branches 3"});
  CHECK(lines(run({"atleast", "4", "2,3,4"}).out).back() == "distinct 5 branches 6");
  CHECK(run({"atleast", "4", "2,3,4", "--naive"}).out == run({"atleast", "4", "2,3,4"}).out);
  CHECK(lines(run({"atleast", "3", "3"}).out).size() == 2);
  CHECK(run({"atleast", "3", "0,0", "--count-only"}).out == "10\n");

  const auto sweep = lines(run({"atleast", "2", "--sweep", "--len=1"}).out);
  CHECK(sweep == std::vector<std::string>{
                     "m1,prefs,branches,distinct_count,sorted_distinct_count,permutation_sensitive",
                     "2,0,3,3,3,false", "2,1,2,2,2,false", "2,2,1,1,1,false"});
  const auto sweep_json = lines(run({"atleast", "1", "--sweep", "--len=0", "--format=json"}).out);
  REQUIRE(sweep_json.size() == 1);
  const auto row = nlohmann::json::parse(sweep_json[0]);
  CHECK(row["prefs"] == "");
  CHECK(row["distinct_count"] == "1");
  CHECK(lines(run({"atleast", "2", "--sweep", "--max-len=2"}).out).size() == 1 + 1 + 3 + 9);
}
