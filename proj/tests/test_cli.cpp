#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include <partrec/cli.hpp>

using namespace partrec::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "partrec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

// Environment overrides restored at scope exit.
struct EnvGuard {
  explicit EnvGuard(const char* name) : name_(name) {}
  ~EnvGuard() { unsetenv(name_); }
  const char* name_;
};

}  // namespace

TEST_CASE("compute") {
  CHECK(invoke({"compute", "--function", "p", "--n", "5"}).out == "7\n");
  CHECK(invoke({"compute", "--function", "p2", "--n", "2"}).out == "5\n");
  CHECK(invoke({"compute", "--function", "p", "--n", "0"}).out == "1\n");
  CHECK(invoke({"compute", "--function", "op", "--n", "3"}).out == "8\n");
  CHECK(invoke({"compute", "-f", "p", "-n", "1000", "--method", "gf"}).out ==
        "24061467864032622473692149727991\n");
  CHECK(invoke({"compute", "-f", "v", "-n", "7"}).out == invoke({"compute", "-f", "opr", "-n", "3"}).out);

  CHECK(invoke({"compute", "--function", "zz", "--n", "5"}).code == kUsage);
  CHECK(invoke({"compute", "--function", "p", "--n", "-1"}).code == kUsage);
  CHECK(invoke({"compute", "--function", "q", "--n", "3", "--method", "recurrence"}).code == kUsage);
  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"frobnicate"}).code == kUsage);
  CHECK(invoke({"--help"}).code == kOk);
}

TEST_CASE("table formats") {
  const auto csv = invoke({"table", "--function", "qq", "--max", "8", "--format", "csv"});
  CHECK(csv.code == kOk);
  const auto rows = lines(csv.out);
  CHECK(rows.front() == "n,value");
  CHECK(rows.back() == "8,2");
  CHECK(rows.size() == 10);

  const auto zero = invoke({"table", "--function", "p", "--max", "0", "--format", "csv"});
  CHECK(lines(zero.out) == std::vector<std::string>{"n,value", "0,1"});

  CHECK(invoke({"table", "--function", "p", "--max", "4"}).out == "1\n1\n2\n3\n5\n");

  const auto json = invoke({"table", "--function", "p", "--max", "500", "--format", "json"});
  const auto jrows = lines(json.out);
  REQUIRE(jrows.size() == 501);
  for (std::size_t n = 0; n < jrows.size(); ++n) {
    const auto j = nlohmann::json::parse(jrows[n]);
    CHECK(j["n"] == n);
    CHECK(j["value"].is_string());
  }
  CHECK(nlohmann::json::parse(jrows[500])["value"] == "2300165032574323995027");

  CHECK(invoke({"table", "--function", "p", "--max", "3", "--format", "xml"}).code == kUsage);
  CHECK(invoke({"table", "--function", "p"}).code == kUsage);
}

TEST_CASE("table output is byte-stable") {
  const auto a = invoke({"table", "--function", "opr", "--max", "200", "--format", "csv"});
  const auto b = invoke({"table", "--function", "opr", "--max", "200", "--format", "csv"});
  CHECK(a.out == b.out);
}

TEST_CASE("environment defaults") {
  EnvGuard g1("PARTREC_DEFAULT_MAX");
  EnvGuard g2("PARTREC_DEFAULT_FORMAT");
  setenv("PARTREC_DEFAULT_MAX", "3", 1);
  setenv("PARTREC_DEFAULT_FORMAT", "csv", 1);
  CHECK(invoke({"table", "--function", "p"}).out == "n,value\n0,1\n1,1\n2,2\n3,3\n");
  CHECK(invoke({"table", "--function", "p", "--format", "plain"}).out == "1\n1\n2\n3\n");
  const auto v = invoke({"verify", "--check", "euler"});
  CHECK(lines(v.out).at(1) == "euler,3,pass,,,");
  setenv("PARTREC_DEFAULT_MAX", "abc", 1);
  CHECK(invoke({"table", "--function", "p"}).code == kUsage);
  setenv("PARTREC_DEFAULT_MAX", "3", 1);
  setenv("PARTREC_DEFAULT_FORMAT", "yaml", 1);
  CHECK(invoke({"table", "--function", "p"}).code == kUsage);
}

TEST_CASE("verify") {
  const auto all = invoke({"verify", "--check", "all", "--max", "500"});
  CHECK(all.code == kOk);
  CHECK(all.out.find("FAIL") == std::string::npos);

  const auto euler = invoke({"verify", "--check", "euler", "--max", "0"});
  CHECK(euler.code == kOk);
  CHECK(euler.out == "PASS euler n<=0\n");

  CHECK(invoke({"verify", "--check", "nope"}).code == kUsage);

  const auto json = invoke({"verify", "--check", "lemma2", "--max", "50", "--format", "json"});
  const auto rows = lines(json.out);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    const auto j = nlohmann::json::parse(r);
    CHECK(j["status"] == "pass");
    CHECK(j["bound"] == 50);
  }
}

TEST_CASE("parity") {
  CHECK(invoke({"parity", "--n", "6", "--method", "macmahon"}).out == "1\n");
  CHECK(invoke({"parity", "--n", "0"}).out == "1\n");
  CHECK(invoke({"parity", "--n", "4"}).out == "1\n");
  CHECK(invoke({"parity", "--n", "2", "--method", "thm7"}).out == "0\n");
  CHECK(invoke({"parity", "--n", "2", "--method", "bogus"}).code == kUsage);
}

TEST_CASE("bench") {
  const auto zero = invoke({"bench", "--max", "0"});
  CHECK(zero.code == kOk);
  CHECK(zero.out.find("all methods agree") != std::string::npos);

  const auto ok = invoke({"bench", "--max", "2000", "--methods", "euler,gf", "--format", "json"});
  CHECK(ok.code == kOk);
  const auto rows = lines(ok.out);
  REQUIRE(rows.size() == 2);
  const auto a = nlohmann::json::parse(rows[0]);
  const auto b = nlohmann::json::parse(rows[1]);
  CHECK(a["method"] == "euler");
  CHECK(a["checksum"] == b["checksum"]);

  const auto faulty = invoke({"bench", "--max", "100", "--inject-fault", "gf:42"});
  CHECK(faulty.code == kFailure);
  CHECK(faulty.err.find("n=42") != std::string::npos);

  const auto parity_fault =
      invoke({"bench", "--max", "100", "--methods", "direct,macmahon", "--inject-fault", "macmahon:9"});
  CHECK(parity_fault.code == kFailure);
  CHECK(parity_fault.err.find("n=9") != std::string::npos);

  CHECK(invoke({"bench", "--max", "10", "--methods", "euler,warp"}).code == kUsage);
  CHECK(invoke({"bench", "--max", "10", "--inject-fault", "gf"}).code == kUsage);
}

TEST_CASE("run_bench reports agreement and checksums") {
  BenchOptions opts;
  opts.max_n = 300;
  opts.methods = {"euler", "gf", "direct", "thm7", "macmahon"};
  const auto report = run_bench(opts);
  CHECK_FALSE(report.first_disagreement.has_value());
  REQUIRE(report.timings.size() == 5);
  CHECK(report.timings[0].checksum == report.timings[1].checksum);
  CHECK(report.timings[2].checksum == report.timings[3].checksum);
  CHECK(report.timings[3].checksum == report.timings[4].checksum);

  opts.fault = std::make_pair(std::string("thm7"), std::size_t{17});
  const auto bad = run_bench(opts);
  REQUIRE(bad.first_disagreement.has_value());
  CHECK(*bad.first_disagreement == 17);
}
