#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "gnum/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = gnum::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CountPrintsValue) {
  auto r = run({"count", "--system", "builtin:rational", "--x", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "100\n");
}

TEST(Cli, ZetaMatchesClosedForm) {
  auto r = run({"zeta", "--system", "builtin:ex43", "--s", "2+0i", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"re\": 1.63252691943815"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).code, gnum::cli::kExitUsage);
  EXPECT_EQ(run({"count", "--system", "builtin:rational", "--bogus", "1"}).code, gnum::cli::kExitUsage);
  EXPECT_EQ(run({"count", "--system", "builtin:nosuch", "--x", "10"}).code, gnum::cli::kExitValidation);
  EXPECT_EQ(run({"count", "--system", "primes:0.5,2", "--x", "10"}).code, gnum::cli::kExitValidation);
  EXPECT_EQ(run({"zeta", "--system", "builtin:ex42", "--s", "1+2i"}).code, gnum::cli::kExitBudget);
  ::setenv("GNUM_BUDGET", "50", 1);
  auto b = run({"integers", "--system", "builtin:rational", "--X", "1000"});
  ::unsetenv("GNUM_BUDGET");
  EXPECT_EQ(b.code, gnum::cli::kExitBudget);
  EXPECT_NE(b.err.find("budget"), std::string::npos);
}

TEST(Cli, IntegersStreamColumns) {
  auto r = run({"integers", "--system", "primes:2,3", "--X", "12"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "value,Omega,mu,lambda,exponents\n"
            "1,0,1,1,\n2,1,-1,-1,1^1\n3,1,-1,-1,2^1\n4,2,0,1,1^2\n6,2,1,1,1^1 2^1\n"
            "8,3,0,-1,1^3\n9,2,0,1,2^2\n12,3,0,-1,1^2 2^1\n"
            "# X: 12\n# count: 8\n");
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args{"Pi", "--system", "builtin:ex42", "--range", "2:1000:7", "--threads", "2"};
  auto a = run(args);
  auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> z{"zeta", "--system", "builtin:ex42", "--sigma", "1.1:2", "--t", "0:5", "--steps", "3x4"};
  EXPECT_EQ(run(z).out, run(z).out);
}

TEST(Cli, EveryCommandHonorsJson) {
  const std::vector<std::vector<std::string>> cmds = {
      {"systems"},
      {"integers", "--system", "primes:2", "--X", "8"},
      {"count", "--system", "primes:2", "--x", "8"},
      {"pi", "--system", "builtin:rational", "--x", "100"},
      {"Pi", "--system", "builtin:rational", "--x", "100"},
      {"zeta", "--system", "builtin:pi0", "--s", "2"},
      {"density", "--system", "builtin:pi0"},
      {"defect", "--system", "builtin:ex51", "--kind", "l1", "--U", "24"},
      {"criteria", "--terms", "0.7071067811865476:1:-0.7853981633974483"},
      {"probe", "--system", "builtin:pi0", "--eta", "0.5", "--t", "1:2", "--steps", "2x2"},
      {"mobius", "--system", "primes:2,3", "--x", "10"},
      {"liouville", "--system", "primes:2,3", "--x", "10"},
      {"wobble", "--q", "2", "--lo", "20", "--hi", "21"},
  };
  for (auto args : cmds) {
    args.push_back("--format");
    args.push_back("json");
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_EQ(r.out.rfind("{\n  \"command\": \"", 0), 0u) << args[0];
    EXPECT_NE(r.out.find("\"verdict\""), std::string::npos) << args[0];
  }
}

TEST(Cli, ParseComplex) {
  using gnum::cli::parse_complex;
  EXPECT_EQ(parse_complex("2"), std::complex<double>(2, 0));
  EXPECT_EQ(parse_complex("2+0i"), std::complex<double>(2, 0));
  EXPECT_EQ(parse_complex("1.1-7i"), std::complex<double>(1.1, -7));
  EXPECT_EQ(parse_complex("3i"), std::complex<double>(0, 3));
  EXPECT_EQ(parse_complex("1e-3+2e+1i"), std::complex<double>(1e-3, 20));
  EXPECT_THROW(parse_complex("x+yi"), std::exception);
}

}  // namespace
