#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fftp/counters.hpp"
#include "fftp/intmul.hpp"

namespace fftp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,  // ParameterInfeasible or primes::NotFound
  kInvariant = 3,
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// --- selftest ---

enum class Level { quick, full };

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

std::vector<std::string> suite_names();

// Runs every suite; `inject_fault` names a suite whose first observed
// result is corrupted before it is checked.
std::vector<SuiteResult> run_selftest(Level level, std::uint64_t seed,
                                      const std::optional<std::string>& inject_fault = {});

void write_selftest_report(std::ostream& out, Level level, std::uint64_t seed,
                           const std::vector<SuiteResult>& results);

// --- bench ---

struct BenchRow {
  std::size_t bits = 0;
  intmul::Engine engine = intmul::Engine::fft;
  double seconds = 0;  // median over repeats
  OpCounters counters;  // from a single run
};

struct BenchOptions {
  std::vector<std::size_t> bits;
  std::vector<intmul::Engine> engines = {intmul::Engine::karatsuba,
                                         intmul::Engine::fft};
  unsigned repeats = 3;
  std::uint64_t seed = 1;
  transform::Profile profile = transform::Profile::single_recursion();
};

std::vector<BenchRow> run_bench(const BenchOptions& options);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

struct TrendPoint {
  std::size_t bits = 0;  // n; the ratio compares 2n against n
  double ratio = 0;
};

// time(2n) / time(n) for consecutive doublings of one engine with
// n >= min_bits.
std::vector<TrendPoint> bench_trend(const std::vector<BenchRow>& rows,
                                    intmul::Engine engine,
                                    std::size_t min_bits);

}  // namespace fftp::cli
