#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "support/random_natural.hpp"

namespace fftp::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "fftp_cli_" + name;
}

TEST(CliMul, Examples) {
  EXPECT_EQ(run_cli({"mul", "0", "ff"}).out, "0\n");
  EXPECT_EQ(run_cli({"mul", "ff", "ff"}).out, "fe01\n");
  EXPECT_EQ(run_cli({"mul", "FF", "ff", "--engine", "oracle"}).out, "fe01\n");
}

TEST(CliMul, EnginesAgreeOn4096Bits) {
  std::mt19937_64 rng(61);
  const std::string u = testing::random_natural(rng, 4096).to_hex();
  const std::string v = testing::random_natural(rng, 4096).to_hex();
  const CliRun base = run_cli({"mul", u, v, "--engine", "oracle"});
  ASSERT_EQ(base.code, kOk);
  for (const char* e : {"karatsuba", "fft", "fft-recursive"}) {
    EXPECT_EQ(run_cli({"mul", u, v, "--engine", e}).out, base.out) << e;
  }
  EXPECT_EQ(run_cli({"mul", u, v, "--check"}).code, kOk);
}

TEST(CliMul, Errors) {
  EXPECT_EQ(run_cli({"mul", "xyz", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"mul", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"mul", "1", "2", "--engine", "gpu"}).code, kUsage);
  EXPECT_EQ(run_cli({"mul", "1", "2", "--bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
}

TEST(CliMul, ProfileFile) {
  const std::string path = temp_path("profile.txt");
  {
    std::ofstream f(path);
    f << "# two levels\nmode=test_scale\nmax_depth=2\n";
  }
  EXPECT_EQ(run_cli({"--profile", path, "mul", "ffff", "ffff", "--engine",
                     "fft-recursive"}).out,
            "fffe0001\n");
  {
    std::ofstream f(path);
    f << "depth=2\n";
  }
  EXPECT_EQ(run_cli({"mul", "1", "1", "--profile", path}).code, kUsage);
  std::remove(path.c_str());
}

TEST(CliFindPrime, Examples) {
  EXPECT_EQ(run_cli({"find-prime", "--m", "8"}).out, "a=1\np=257\n");
  EXPECT_EQ(run_cli({"find-prime", "--m", "12", "--hex"}).out, "a=3\np=3001\n");
  const CliRun r = run_cli({"find-prime", "--m", "1000"});
  EXPECT_EQ(r.out.substr(0, 5), "a=13\n");
  EXPECT_NE(r.err.find("elapsed_ms="), std::string::npos);
  EXPECT_EQ(run_cli({"find-prime", "--m", "1", "--list", "--a-max", "6"}).out,
            "1,2,3,5,6\n");
}

TEST(CliFindPrime, NotFoundAndUsage) {
  EXPECT_EQ(run_cli({"find-prime", "--m", "10", "--a-max", "11"}).code, kInfeasible);
  EXPECT_EQ(run_cli({"find-prime", "--m", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"find-prime"}).code, kUsage);
  EXPECT_EQ(run_cli({"find-prime", "--m", "10", "--exploratory"}).out,
            "a=12\np=12289\n");
}

TEST(CliApScan, Examples) {
  const CliRun two = run_cli({"ap-scan", "--q-max", "2"});
  EXPECT_EQ(two.out, "q,phi_q,P_q,ratio_num,ratio_den\n2,1,3,3,2\n");
  EXPECT_NE(two.err.find("max ratio 3/2 at q=2"), std::string::npos);
  EXPECT_EQ(run_cli({"ap-scan", "--q-max", "4"}).out,
            "q,phi_q,P_q,ratio_num,ratio_den\n2,1,3,3,2\n3,2,7,7,12\n4,2,5,5,16\n");
  EXPECT_EQ(run_cli({"ap-scan", "--q-max", "1"}).code, kUsage);
  const CliRun strict = run_cli({"ap-scan", "--q-max", "10", "--ratio", "1/1"});
  EXPECT_NE(strict.err.find("exceeds: q=2"), std::string::npos);
}

TEST(CliApScan, CsvFileIsDeterministic) {
  const std::string a = temp_path("ap_a.csv"), b = temp_path("ap_b.csv");
  ASSERT_EQ(run_cli({"ap-scan", "--q-max", "300", "--csv", a}).code, kOk);
  ASSERT_EQ(run_cli({"ap-scan", "--q-max", "300", "--csv", b}).code, kOk);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  const std::string text = sa.str();
  EXPECT_EQ(text, sb.str());
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 300);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(CliSelftest, QuickPassesAndIsDeterministic) {
  const CliRun a = run_cli({"selftest", "--seed", "5"});
  const CliRun b = run_cli({"--seed", "5", "selftest", "--level", "quick"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("result: pass"), std::string::npos);
}

TEST(CliSelftest, InjectedFaultNamesSuite) {
  for (const std::string& suite : suite_names()) {
    const CliRun r = run_cli({"selftest", "--inject-fault", suite});
    EXPECT_EQ(r.code, kInvariant) << suite;
    EXPECT_NE(r.out.find(suite + ": FAIL"), std::string::npos) << suite;
  }
  EXPECT_EQ(run_cli({"selftest", "--inject-fault", "nope"}).code, kUsage);
}

TEST(CliBench, OneRowPerEngine) {
  const CliRun r = run_cli({"bench", "--bits", "1024", "--engines",
                         "oracle,karatsuba,fft,fft-recursive", "--repeats", "1"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line,
            "bits,engine,seconds,field_muls,recursions,layers,short_layers,"
            "short_transforms,max_depth");
  std::vector<std::string> engines;
  while (std::getline(lines, line)) engines.push_back(line.substr(5, line.find(',', 5) - 5));
  EXPECT_EQ(engines,
            (std::vector<std::string>{"oracle", "karatsuba", "fft", "fft-recursive"}));
}

TEST(CliBench, TrendHelper) {
  std::vector<BenchRow> rows;
  for (std::size_t bits : {1U << 17, 1U << 18, 1U << 19, 1U << 20}) {
    BenchRow row;
    row.bits = bits;
    row.seconds = static_cast<double>(bits);
    rows.push_back(row);
  }
  const auto trend = bench_trend(rows, intmul::Engine::fft, 1U << 18);
  ASSERT_EQ(trend.size(), 2U);
  EXPECT_EQ(trend[0].bits, 1U << 18);
  EXPECT_DOUBLE_EQ(trend[0].ratio, 2.0);
}

}  // namespace
}  // namespace fftp::cli
