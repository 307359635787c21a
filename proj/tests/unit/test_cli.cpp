#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "hmi/io.hpp"
#include "hmi_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(HMI_TEST_DATA) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hmi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_output(std::vector<std::string> args, const std::string& expected) {
  auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, expected);
  EXPECT_TRUE(r.err.empty());
}

}  // namespace

TEST(CliTest, StructuralGoldens) {
  expect_output({"sr", "--complex", data("chain.json")}, "x1*x4, x1*x5, x2*x5\n");
  expect_output({"sr", "--complex", data("empty_edges.json")}, "x1*x2\n");
  expect_output({"dual", "--complex", data("cuts.json")}, "{15,24,134,235}\n");
  expect_output({"complex-of", "--generators", "x1*x2", "--p", "3"}, "{13,23}\n");
  expect_output({"decompose", "--complex", data("four_cycle.json")}, "not decomposable: chordless cycle 1-2-3-4\n");
  expect_output({"decompose", "--complex", data("chain.json")}, "decomposable\n");
  expect_output({"factorize", "--complex", data("chain.json")}, "f{123} f{234} f{345} / f{23} f{34}\n");
  expect_output({"marginalize", "--complex", data("chain.json"), "--strip", "1"}, "{234,345} over {2345}\n");
  expect_output({"linear-resolution", "--ideal", data("ferrer.json")}, "2-linear\n");
  expect_output({"ferrer", "--ideal", data("ferrer.json")},
                "rows 1,2,3,4,5\ncolumns 6,7,8,9\nlambda 3,2,2,1,1\ncliques {123459,234589,45789,6789}\n"
                "separators {23459,4589,789}\n");
  expect_output({"ci-generators", "--p", "3", "--pairwise"}, "1,1,0\n1,0,1\n0,1,1\n");
}

TEST(CliTest, NetworkAndNerveGoldens) {
  expect_output({"network-cuts", "--network", data("network.json")}, "{14,25,135,234}\n");
  expect_output({"network-paths", "--network", data("network.json")}, "{12,45,135,234}\n");
  expect_output({"network-ideals", "--network", data("network.json")},
                "cut ideal: x1*x4, x2*x5, x1*x3*x5, x2*x3*x4\npath ideal: x1*x2, x4*x5, x1*x3*x5, x2*x3*x4\n");
  auto duality = run({"network-duality", "--network", data("network.json")});
  EXPECT_EQ(duality.code, 0);
  EXPECT_EQ(duality.out.find("fail"), std::string::npos);
  expect_output({"nerve", "--points", data("collinear.csv"), "--radius", "0.6"}, "{3,12}\n");
  expect_output({"nerve", "--points", data("collinear.csv"), "--filtration", "0.4,0.6,1.1,1.6"},
                "r=0.4 {1,2,3} decomposable\nr=0.6 {3,12} decomposable\nr=1.1 {12,23} decomposable\n"
                "r=1.6 {123} decomposable\n");
}

TEST(CliTest, AlgebraGoldens) {
  expect_output({"partitions", "--k", "1,0,2"}, "{133} c=1\n{13|3} c=2\n{1|33} c=1\n{1|3|3} c=1\n");
  expect_output({"collapse", "--partition", "{13|3}"}, "2\n");
  expect_output({"cumulant-from-moments", "--k", "1,1", "--moments", data("shifted_gauss_moments.json")}, "1/2\n");
  expect_output({"chain-rule", "--k", "1,0,1"}, "Dg D^{101}h\nD^2g D^{100}h D^{001}h\n");
  expect_output({"parse-poly", "--poly", "x1*x2+1", "--p", "2"}, "1 + x1*x2\n");
  expect_output({"check-model", "--poly", "1 + 2*x1 + 3*x2 + 5*x1*x2", "--p", "2", "--complex", data("empty_edges.json")},
                "not hierarchical: term x1*x2 has non-face support {12}\n");
  expect_output({"gaussian-ideal", "--gaussian", data("tridiagonal.json")}, "x1*x3, x1*x4, x2*x4\n");
  expect_output({"mec", "--mec", data("bec.json")}, "g = 1 + 2*x1 + 3*x2 + 5*x1*x2\nsupport {12}\n");
}

TEST(CliTest, ExitCodes) {
  auto domain = run({"factorize", "--complex", data("four_cycle.json")});
  EXPECT_EQ(domain.code, hmi::cli::kExitDomainError);
  EXPECT_TRUE(domain.out.empty());
  EXPECT_NE(domain.err.find("chordless cycle"), std::string::npos);
  EXPECT_EQ(run({"marginalize", "--complex", data("chain.json"), "--strip", "3"}).code, hmi::cli::kExitDomainError);
  EXPECT_EQ(run({"sr", "--complex", "/nonexistent.json"}).code, hmi::cli::kExitDomainError);
  EXPECT_EQ(run({"parse-poly", "--poly", "x1 +* x2", "--p", "2"}).code, hmi::cli::kExitDomainError);
  EXPECT_EQ(run({"sr"}).code, hmi::cli::kExitUsage);
  EXPECT_EQ(run({}).code, hmi::cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, hmi::cli::kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "sr", "--complex", data("chain.json")}).code, hmi::cli::kExitUsage);
  EXPECT_EQ(run({"local-moment", "--density", data("gauss_rho05.json"), "--xi", "0,0", "--k", "1,1"}).code,
            hmi::cli::kExitUsage);
}

TEST(CliTest, JsonOutputRoundTrips) {
  auto sr = run({"--format", "json", "sr", "--complex", data("chain.json")});
  ASSERT_EQ(sr.code, 0);
  EXPECT_EQ(hmi::ideal_from_json(hmi::parse_json(sr.out)).to_string(), "x1*x4, x1*x5, x2*x5");
  auto dual = run({"dual", "--complex", data("cuts.json"), "--format", "json"});
  ASSERT_EQ(dual.code, 0);
  EXPECT_EQ(hmi::complex_from_json(hmi::parse_json(dual.out)).to_string(), "{15,24,134,235}");
  auto marginal = run({"--format", "json", "marginalize", "--complex", data("chain.json"), "--strip", "1"});
  ASSERT_EQ(marginal.code, 0);
  auto j = hmi::parse_json(marginal.out);
  EXPECT_EQ(hmi::complex_from_json(j).ground(), hmi::Face::parse("2345"));
  auto gaussian = run({"--format", "json", "gaussian-ideal", "--gaussian", data("tridiagonal.json")});
  EXPECT_EQ(hmi::ideal_from_json(hmi::parse_json(gaussian.out)).to_string(), "x1*x3, x1*x4, x2*x4");
  auto report = run({"--format", "json", "diff-moment", "--density", data("gauss_rho05.json"), "--xi", "0,0", "--k", "1,1"});
  auto rj = hmi::parse_json(report.out);
  EXPECT_EQ(rj["method"], "finite-difference");
  EXPECT_NEAR(rj["value"].get<double>(), 2.0 / 3, 1e-6);
}

TEST(CliTest, OutputIndependentOfThreads) {
  std::vector<std::vector<std::string>> commands{
      {"local-moment", "--density", data("gauss_rho05.json"), "--xi", "0.1,0", "--eps", "0.2", "--k", "1,1"},
      {"local-moment", "--density", data("gauss_rho05.json"), "--xi", "0,0", "--eps", "0.2", "--k", "2,1",
       "--monte-carlo", "--samples", "5000"},
      {"limit-probe", "--density", data("gauss_rho05.json"), "--xi", "1,0", "--k", "1,1", "--nodes", "8"},
      {"nerve", "--points", data("collinear.csv"), "--filtration", "0.4,0.6,1.1,1.6"},
  };
  for (auto args : commands) {
    for (const char* format : {"text", "json"}) {
      auto base = args;
      base.insert(base.begin(), {"--format", format});
      auto one = run(base);
      ASSERT_EQ(one.code, 0) << one.err;
      EXPECT_EQ(run(base).out, one.out);
      for (const char* threads : {"2", "4"}) {
        auto more = base;
        more.insert(more.end(), {"--threads", threads});
        EXPECT_EQ(run(more).out, one.out) << args.front() << " threads=" << threads;
      }
    }
  }
}

TEST(CliTest, SeedFromEnvironment) {
  std::vector<std::string> args{"--format", "json", "local-moment", "--density", data("gauss_rho05.json"), "--xi", "0,0",
                                "--eps", "0.2", "--k", "1,1", "--monte-carlo", "--samples", "2000"};
  setenv("HMI_SEED", "7", 1);
  auto a = run(args);
  auto b = run(args);
  setenv("HMI_SEED", "8", 1);
  auto c = run(args);
  unsetenv("HMI_SEED");
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(hmi::parse_json(a.out)["metadata"]["seed"], 7);
}
