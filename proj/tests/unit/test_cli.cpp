#include <doctest.h>

#include <sstream>

#include "gpcode/cli.hpp"

using namespace gpcode;

namespace {
struct Result {
  int code;
  std::string out, err;
};
Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("code weights --method both") {
  const auto r = run({"code", "weights", "-p", "5", "-m", "6", "-k", "434", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("MATCH") != std::string::npos);
  CHECK(r.out.find("    36 |      1728") != std::string::npos);
}

TEST_CASE("json weights keep big frequencies as strings") {
  const auto r = run({"code", "weights", "-p", "2", "-m", "21", "-k", "42799", "--method", "closed", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"823543\"") != std::string::npos);
  CHECK(r.out.find("\"source\"") != std::string::npos);
}

TEST_CASE("periods --check") {
  const auto r = run({"periods", "-p", "5", "-m", "6", "-N", "434", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("graph subcommands") {
  const auto s = run({"graph", "spectrum", "-p", "5", "-m", "2", "-k", "2", "--oracle"});
  CHECK(s.code == 0);
  CHECK(s.out.find("Spec = {[12]^1, [2]^12, [-3]^12}") != std::string::npos);
  const auto d = run({"graph", "decompose", "-p", "5", "-m", "6", "-k", "434", "--format", "csv"});
  CHECK(d.code == 0);
  CHECK(d.out == "a,b,c,u\n2,3,12,2\n");
  const auto c = run({"graph", "classify", "-p", "2", "-m", "21", "-k", "42799"});
  CHECK(c.code == 0);
  CHECK(c.out.find("H(7, 8)") != std::string::npos);
}

TEST_CASE("curve subcommands") {
  const auto c = run({"curve", "count", "-p", "3", "-m", "2", "-k", "2", "--beta-zero", "--beta-dlog", "1", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("beta_dlog,count_brute,count_derived,count_printed_62,agree_brute,agree_printed\nzero,28,28", 0) == 0);
  const auto r = run({"curve", "reduce", "-p", "2", "-a", "3", "-b", "7", "-u", "1", "--alpha-dlog", "0", "1", "2", "3",
                      "4", "5", "zero"});
  CHECK(r.code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"code", "weights", "-p", "5", "-m", "2"}).code == 1);  // missing -k
  CHECK(run({"code", "weights", "-p", "5", "-m", "2", "-k", "2", "--method", "magic"}).code == 1);
  CHECK(run({"verify", "nonsense"}).code == 1);
  const auto notprime = run({"field", "info", "-p", "6", "-m", "2"});
  CHECK(notprime.code == 2);
  CHECK(notprime.err.find("NotPrime") != std::string::npos);
  CHECK(run({"code", "weights", "-p", "5", "-m", "2", "-k", "5"}).code == 2);
  CHECK(run({"graph", "spectrum", "-p", "7", "-m", "1", "-k", "2"}).code == 2);
  CHECK(run({"code", "weights", "-p", "2", "-m", "20", "-k", "1", "--method", "brute", "--budget", "1000"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("field info") {
  const auto r = run({"field", "info", "-p", "2", "-m", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"omega\": 2") != std::string::npos);
}
