#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dhcount/cli.hpp"
#include "dhcount/errors.hpp"

using namespace dhcount;
using namespace dhcount::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = main_with_args(args, out, err);
  return {code, out.str(), err.str()};
}

RunConfig parse(const std::vector<std::string>& args) {
  std::ostringstream help;
  auto cfg = parse_args(args, help);
  REQUIRE(cfg.has_value());
  return *cfg;
}

}  // namespace

TEST_CASE("argument parsing") {
  const auto cfg = parse({"sweep", "--p", "5,7", "--r", "1,2", "--n", "4", "--h", "2,1,1,1",
                          "--lambda", "g^3", "--engine", "thm2,padic-main", "--format", "json",
                          "--workers", "2", "--no-timing"});
  CHECK(cfg.command == "sweep");
  CHECK(cfg.p == std::vector<std::uint32_t>{5, 7});
  CHECK(cfg.r == std::vector<std::uint32_t>{1, 2});
  CHECK(cfg.n == 4);
  CHECK(cfg.h == std::vector<std::uint32_t>{2, 1, 1, 1});
  CHECK(cfg.lambda == "g^3");
  CHECK(cfg.engines == std::vector<std::string>{"thm2", "padic-main"});
  CHECK(cfg.format == "json");
  CHECK(cfg.workers == 2);
  CHECK(cfg.no_timing);

  const auto defaults = parse({"count"});
  CHECK(defaults.p == std::vector<std::uint32_t>{7});
  CHECK(defaults.n == 3);
  CHECK(defaults.lambda == "all");

  std::ostringstream help;
  CHECK_FALSE(parse_args({"count", "--help"}, help).has_value());
  CHECK(help.str().find("--lambda") != std::string::npos);
  CHECK_THROWS_AS(parse_args({"frobnicate"}, help), InvalidInput);
  CHECK_THROWS_AS(parse_args({"count", "--p", "x"}, help), InvalidInput);
  CHECK_THROWS_AS(parse_args({"count", "--format", "xml"}, help), InvalidInput);
}

TEST_CASE("to_args round trips") {
  const std::vector<std::vector<std::string>> samples{
      {"count"},
      {"verify", "--p", "11", "--h", "2,1,1", "--lambda", "3"},
      {"sweep", "--p", "3,5", "--r", "2,1", "--engine", "brute", "--no-timing", "--debug"},
      {"gfun", "--p", "7", "--top", "1/3,2/3", "--bottom", "1,1", "--lambda", "g^1"},
      {"gamma-table", "--p", "5", "--den", "8", "--padic-pad", "6", "--prec-bits", "256"},
  };
  for (const auto& s : samples) {
    const auto cfg = parse(s);
    CHECK(parse(to_args(cfg)) == cfg);
  }
}

TEST_CASE("lambda specs") {
  const FieldCtx f = FieldCtx::make(7, 1);
  CHECK(parse_lambda(f, "all").size() == 7);
  CHECK(parse_lambda(f, "g^1") == std::vector<FieldElement>{f.generator()});
  CHECK(parse_lambda(f, "g^-1") == std::vector<FieldElement>{f.inv(f.generator())});
  CHECK(parse_lambda(f, "0") == std::vector<FieldElement>{f.zero()});
  CHECK(parse_lambda(f, "5") == std::vector<FieldElement>{FieldElement{5}});
  CHECK(format_lambda(f, f.zero()) == "0");
  CHECK(format_lambda(f, FieldElement{2}) == "g^2");
  CHECK_THROWS_AS(parse_lambda(f, "7"), InvalidInput);
  CHECK_THROWS_AS(parse_lambda(f, "g^x"), InvalidInput);

  const FieldCtx f9 = FieldCtx::make(3, 2);
  for (auto x : f9.elements()) {
    CHECK(parse_lambda(f9, format_lambda(f9, x)) == std::vector<FieldElement>{x});
  }
  CHECK(parse_lambda(f9, "1,2").size() == 1);
  CHECK_THROWS_AS(parse_lambda(f9, "1,2,0"), InvalidInput);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"count", "--p", "7", "--lambda", "g^1", "--engine", "brute"}).code == kOk);
  CHECK(invoke({"count", "--p", "4"}).code == kInvalidInput);
  CHECK(invoke({"count", "--h", "2,2"}).code == kInvalidInput);
  CHECK(invoke({"count", "--engine", "nope"}).code == kInvalidInput);
  const auto pre = invoke({"count", "--p", "2", "--r", "2", "--engine", "padic-main", "--lambda", "g^1"});
  CHECK(pre.code == kPrecondition);
  CHECK_FALSE(pre.err.empty());
  CHECK(invoke({"count", "--prec-bits", "64"}).code == kInvalidInput);
}

TEST_CASE("count output") {
  const auto r = invoke({"count", "--p", "7", "--lambda", "g^1", "--engine", "brute,padic-main,thm2",
                         "--no-timing"});
  REQUIRE(r.code == kOk);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "p,r,n,h,lambda,engine,count,residual,precision,ms,status");
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK(row.find(",9,") != std::string::npos);
    CHECK(row.ends_with(",OK"));
  }
  CHECK(rows == 3);

  const auto j = invoke({"count", "--p", "5", "--lambda", "0", "--engine", "brute", "--format", "json"});
  REQUIRE(j.code == kOk);
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.is_array());
  CHECK(doc.at(0).at("count") == 6);
  CHECK(doc.at(0).at("engine") == "brute");
}

TEST_CASE("verify passes on small fields") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"verify", "--p", "5"},
        {"verify", "--p", "7", "--h", "2,1,1"},
        {"verify", "--p", "3", "--r", "2", "--n", "4"}}) {
    const auto r = invoke(args);
    CHECK(r.code == kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
}

TEST_CASE("sweep output is deterministic across worker counts") {
  const std::vector<std::string> base{"sweep", "--p", "5,7", "--r", "1", "--no-timing",
                                      "--engine", "brute,padic-main,corthm2-long"};
  auto one = base, four = base;
  one.insert(one.end(), {"--workers", "1"});
  four.insert(four.end(), {"--workers", "4"});
  const auto a = invoke(one), b = invoke(four);
  CHECK(a.code == kOk);
  CHECK(b.code == kOk);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("environment overrides") {
  RunConfig cfg;
  ::setenv("DHCOUNT_PREC_BITS", "320", 1);
  ::setenv("DHCOUNT_WORKERS", "3", 1);
  CHECK(effective_prec_bits(cfg) == 320);
  CHECK(effective_workers(cfg) == 3);
  cfg.prec_bits = 256;
  cfg.workers = 2;
  CHECK(effective_prec_bits(cfg) == 256);
  CHECK(effective_workers(cfg) == 2);
  ::unsetenv("DHCOUNT_PREC_BITS");
  ::unsetenv("DHCOUNT_WORKERS");
  CHECK(effective_prec_bits(RunConfig{}) == CycValue::kMinPrecBits);
  CHECK(effective_workers(RunConfig{}) >= 1);
}

TEST_CASE("table subcommands") {
  CHECK(invoke({"gsum-table", "--p", "5"}).code == kOk);
  CHECK(invoke({"gamma-table", "--p", "5", "--den", "4"}).code == kOk);
  CHECK(invoke({"gamma-table", "--p", "5", "--den", "5"}).code == kInvalidInput);
  const auto w = invoke({"wset", "--p", "7", "--n", "3"});
  CHECK(w.code == kOk);
  CHECK(w.out.find("classes=3") != std::string::npos);
  const auto g = invoke({"gfun", "--p", "7", "--top", "1/3,2/3", "--bottom", "1,1", "--lambda", "g^1"});
  CHECK(g.code == kOk);
  CHECK(invoke({"gfun", "--p", "7", "--top", "1/7", "--bottom", "1", "--lambda", "g^1"}).code ==
        kInvalidInput);
}
