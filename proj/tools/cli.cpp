#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "fftp/primes.hpp"

namespace fftp::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  std::string profile_path;
  std::string output_path;
  std::uint64_t seed = 1;

  // mul
  std::string u_hex, v_hex;
  std::string engine = "fft";
  bool cross_check = false;

  // find-prime
  std::size_t m = 0;
  bool list = false;
  std::optional<std::uint64_t> a_max;
  bool hex = false;
  bool exploratory = false;
  std::uint64_t timeout_ms = 60000;

  // ap-scan
  std::uint64_t q_max = 0;
  std::string csv_path;
  std::string ratio = "3/2";

  // selftest
  std::string level = "quick";
  std::string inject_fault;

  // bench
  std::vector<std::size_t> bits;
  std::vector<std::string> engines = {"karatsuba", "fft"};
  unsigned repeats = 3;
  bool trend = false;
};

transform::Profile load_profile(const std::string& path) {
  if (path.empty()) return transform::Profile::single_recursion();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read profile '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return transform::Profile::parse(text.str());
}

// Writes to `path` when given, else to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::ios_base::failure("cannot open '" + path + "' for writing");
      out_ = &file_;
    }
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_mul(const Options& o, std::ostream& out, std::ostream& err) {
  const Natural u = Natural::from_hex(o.u_hex);
  const Natural v = Natural::from_hex(o.v_hex);
  intmul::MultiplierOptions mo;
  mo.engine = intmul::parse_engine(o.engine);
  mo.profile = load_profile(o.profile_path);
  mo.force_transform = true;
  const Natural product = intmul::Multiplier(mo).multiply(u, v);
  if (o.cross_check) {
    for (intmul::Engine e : {intmul::Engine::oracle, intmul::Engine::karatsuba,
                             intmul::Engine::fft, intmul::Engine::fft_recursive}) {
      intmul::MultiplierOptions other = mo;
      other.engine = e;
      if (intmul::Multiplier(other).multiply(u, v) != product) {
        err << "engine " << intmul::to_string(e) << " disagrees with "
            << o.engine << '\n';
        return kInvariant;
      }
    }
  }
  Sink sink(o.output_path, out);
  sink.get() << product.to_hex() << '\n';
  return kOk;
}

int cmd_find_prime(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  Sink sink(o.output_path, out);
  auto show = [&](const Natural& p) { return o.hex ? p.to_hex() : p.to_decimal(); };
  if (o.list) {
    const std::uint64_t a_max =
        o.a_max ? *o.a_max : primes::default_a_max(o.m).low_u64();
    const auto all = primes::find_all_a(o.m, a_max);
    for (std::size_t i = 0; i < all.size(); ++i) {
      sink.get() << (i ? "," : "") << all[i];
    }
    sink.get() << '\n';
  } else {
    const primes::FftPrime p =
        o.exploratory
            ? primes::find_p0_exploratory(o.m, std::chrono::milliseconds(o.timeout_ms))
            : primes::find_p0(o.m, o.a_max ? Natural(*o.a_max)
                                           : primes::default_a_max(o.m));
    sink.get() << "a=" << p.a.to_decimal() << '\n' << "p=" << show(p.p) << '\n';
  }
  err << "elapsed_ms="
      << std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count()
      << '\n';
  return kOk;
}

primes::Ratio parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  primes::Ratio r;
  try {
    r.num = std::stoull(text.substr(0, slash));
    r.den = slash == std::string::npos ? 1 : std::stoull(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad ratio '" + text + "'");
  }
  if (r.den == 0) throw std::invalid_argument("ratio denominator is zero");
  return r;
}

int cmd_ap_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const primes::Ratio c = parse_ratio(o.ratio);
  Sink sink(o.csv_path.empty() ? o.output_path : o.csv_path, out);
  primes::write_ap_csv_header(sink.get());
  const primes::ApScanSummary summary = primes::ap_scan(
      o.q_max, [&](const primes::ApRecord& r) { primes::write_ap_csv_row(sink.get(), r); },
      c);
  err << "# max ratio " << summary.best.ratio_num << '/' << summary.best.ratio_den
      << " at q=" << summary.best.q << "; at q=2: " << (summary.max_at_q2 ? "yes" : "no")
      << "; exceeding " << c.num << '/' << c.den << ": " << summary.exceeding.size()
      << '\n';
  for (const primes::ApRecord& r : summary.exceeding) {
    err << "# exceeds: q=" << r.q << " P=" << r.least_prime << " ratio=" << r.ratio_num
        << '/' << r.ratio_den << '\n';
  }
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream&) {
  const Level level = o.level == "full" ? Level::full : Level::quick;
  std::optional<std::string> fault;
  if (!o.inject_fault.empty()) fault = o.inject_fault;
  const auto results = run_selftest(level, o.seed, fault);
  Sink sink(o.output_path, out);
  write_selftest_report(sink.get(), level, o.seed, results);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const SuiteResult& r) { return r.failures == 0; });
  return ok ? kOk : kInvariant;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  BenchOptions bo;
  bo.bits = o.bits;
  bo.engines.clear();
  for (const std::string& e : o.engines) bo.engines.push_back(intmul::parse_engine(e));
  bo.repeats = std::max(1U, o.repeats);
  bo.seed = o.seed;
  bo.profile = load_profile(o.profile_path);
  const auto rows = run_bench(bo);
  Sink sink(o.csv_path.empty() ? o.output_path : o.csv_path, out);
  write_bench_csv(sink.get(), rows);
  if (o.trend) {
    for (intmul::Engine e : bo.engines) {
      for (const TrendPoint& t : bench_trend(rows, e, 1U << 18)) {
        err << "# trend " << intmul::to_string(e) << " time(" << 2 * t.bits << ")/time("
            << t.bits << ") = " << std::fixed << std::setprecision(3) << t.ratio
            << (t.ratio < 3 ? " ok" : " above 3") << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (std::size_t bits : options.bits) {
    std::mt19937_64 rng(options.seed ^ (bits * 0x9e3779b97f4a7c15ULL));
    std::vector<Limb> a((bits + 63) / 64), b((bits + 63) / 64);
    for (Limb& l : a) l = rng();
    for (Limb& l : b) l = rng();
    if (bits % 64 != 0) {
      a.back() &= (Limb{1} << (bits % 64)) - 1;
      b.back() &= (Limb{1} << (bits % 64)) - 1;
    }
    const Natural u = Natural::from_limbs(a);
    const Natural v = Natural::from_limbs(b);
    for (intmul::Engine engine : options.engines) {
      intmul::MultiplierOptions mo;
      mo.engine = engine;
      mo.profile = options.profile;
      mo.force_transform = true;
      const intmul::Multiplier mult(mo);
      if (engine == intmul::Engine::fft || engine == intmul::Engine::fft_recursive) {
        mult.plan_for(bits);  // keep prime search out of the timing
      }
      BenchRow row;
      row.bits = bits;
      row.engine = engine;
      std::vector<double> times;
      for (unsigned r = 0; r < options.repeats; ++r) {
        reset_op_counters();
        const auto start = Clock::now();
        const Natural product = mult.multiply(u, v);
        times.push_back(std::chrono::duration<double>(Clock::now() - start).count());
        if (r == 0) row.counters = op_counters();
      }
      std::sort(times.begin(), times.end());
      row.seconds = times[times.size() / 2];
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "bits,engine,seconds,field_muls,recursions,layers,short_layers,"
         "short_transforms,max_depth\n";
  for (const BenchRow& r : rows) {
    out << r.bits << ',' << intmul::to_string(r.engine) << ',' << std::scientific
        << std::setprecision(6) << r.seconds << std::defaultfloat << ','
        << r.counters.field_muls << ',' << r.counters.recursions << ','
        << r.counters.layers << ',' << r.counters.short_layers << ','
        << r.counters.short_transforms << ',' << r.counters.max_depth << '\n';
  }
}

std::vector<TrendPoint> bench_trend(const std::vector<BenchRow>& rows,
                                    intmul::Engine engine, std::size_t min_bits) {
  std::vector<TrendPoint> out;
  for (const BenchRow& lo : rows) {
    if (lo.engine != engine || lo.bits < min_bits) continue;
    for (const BenchRow& hi : rows) {
      if (hi.engine == engine && hi.bits == 2 * lo.bits && lo.seconds > 0) {
        out.push_back({lo.bits, hi.seconds / lo.seconds});
      }
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Integer multiplication over FFT primes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--profile", o.profile_path, "transform profile (key=value file)");
  app.add_option("-o,--output", o.output_path, "write the primary output here");
  app.add_option("--seed", o.seed, "seed for randomized runs");

  auto* mul = app.add_subcommand("mul", "multiply two hex integers");
  mul->add_option("u", o.u_hex, "first factor (hex)")->required();
  mul->add_option("v", o.v_hex, "second factor (hex)")->required();
  mul->add_option("--engine", o.engine, "oracle | karatsuba | fft | fft-recursive")
      ->check(CLI::IsMember({"oracle", "karatsuba", "fft", "fft-recursive"}));
  mul->add_flag("--check", o.cross_check, "cross-check against every engine");

  auto* find = app.add_subcommand("find-prime", "least a with a*2^m + 1 prime");
  find->add_option("--m", o.m, "exponent m")->required()->check(CLI::PositiveNumber);
  find->add_flag("--list", o.list, "list every a up to --a-max");
  find->add_option("--a-max", o.a_max, "upper bound on a (default below 3/2 m^2)");
  find->add_flag("--hex", o.hex, "print p in hex");
  find->add_flag("--exploratory", o.exploratory, "search without a bound on a");
  find->add_option("--timeout-ms", o.timeout_ms, "exploratory search timeout");

  auto* scan = app.add_subcommand("ap-scan", "least primes in progressions, as CSV");
  scan->add_option("--q-max", o.q_max, "largest modulus")->required()->check(
      CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  scan->add_option("--csv", o.csv_path, "CSV output path (default stdout)");
  scan->add_option("--ratio", o.ratio, "constant C as num/den");

  auto* self = app.add_subcommand("selftest", "run the invariant suites");
  self->add_option("--level", o.level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  self->add_option("--inject-fault", o.inject_fault, "corrupt one suite's first result")
      ->check(CLI::IsMember(suite_names()));

  auto* bench = app.add_subcommand("bench", "time the engines, as CSV");
  bench->add_option("--bits", o.bits, "operand sizes")->required()->delimiter(',');
  bench->add_option("--engines", o.engines, "engines to time")->delimiter(',');
  bench->add_option("--repeats", o.repeats, "runs per size; the median is reported");
  bench->add_option("--csv", o.csv_path, "CSV output path (default stdout)");
  bench->add_flag("--trend", o.trend, "report time(2n)/time(n) for n >= 2^18");

  std::vector<std::string> argv_store = {"fftp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*mul) return cmd_mul(o, out, err);
    if (*find) return cmd_find_prime(o, out, err);
    if (*scan) return cmd_ap_scan(o, out, err);
    if (*self) return cmd_selftest(o, out, err);
    if (*bench) return cmd_bench(o, out, err);
  } catch (const transform::ParameterInfeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const primes::NotFound& e) {
    err << "not found: " << e.what() << '\n';
    return kInfeasible;
  } catch (const bivariate::LiftAmbiguity& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fftp::cli
