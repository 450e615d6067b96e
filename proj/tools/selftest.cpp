#include <functional>
#include <numeric>
#include <ostream>
#include <random>

#include "cli.hpp"
#include "fftp/bluestein.hpp"
#include "fftp/bivariate.hpp"
#include "fftp/primes.hpp"
#include "fftp/transform.hpp"

namespace fftp::cli {
namespace {

using dft::Poly;
using fp::Element;
using fp::Field;

class Suite {
 public:
  Suite(std::string name, bool fault, std::uint64_t seed)
      : rng(seed), fault_(fault) {
    result_.name = std::move(name);
  }

  // Passes a computed value through, corrupting the first one when a fault
  // is injected into this suite.
  Natural observe(Natural x) {
    if (take_fault()) x += Natural(1);
    return x;
  }
  Poly observe(const Field& field, Poly x) {
    if (take_fault() && !x.empty()) x[0] = field.add(x[0], field.one());
    return x;
  }
  std::uint64_t observe(std::uint64_t x) { return take_fault() ? x + 1 : x; }

  void expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = what;
  }

  SuiteResult result() const { return result_; }

  std::mt19937_64 rng;

 private:
  bool take_fault() {
    if (!fault_) return false;
    fault_ = false;
    return true;
  }

  SuiteResult result_;
  bool fault_;
};

Natural random_natural(std::mt19937_64& rng, std::size_t bits) {
  std::vector<Limb> limbs((bits + 63) / 64);
  for (Limb& l : limbs) l = rng();
  if (bits % 64 != 0 && !limbs.empty()) limbs.back() &= (Limb{1} << (bits % 64)) - 1;
  return Natural::from_limbs(std::move(limbs));
}

Poly random_poly(const Field& field, std::size_t n, std::mt19937_64& rng) {
  Poly out(n);
  for (Element& e : out) e = field.from_u64(rng());
  return out;
}

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void bigint_suite(Suite& s, Level level) {
  const int trials = level == Level::quick ? 200 : 2000;
  const std::size_t max_bits = level == Level::quick ? 4096 : 16384;
  for (int t = 0; t < trials; ++t) {
    const Natural x = random_natural(s.rng, 1 + s.rng() % max_bits);
    const Natural y = random_natural(s.rng, 1 + s.rng() % max_bits);
    s.expect(s.observe(mul_karatsuba(x, y)) == mul_oracle(x, y),
             "karatsuba != oracle at " + std::to_string(x.bit_length()) + " bits");
    if (!y.is_zero()) {
      const auto [q, r] = divmod(x, y);
      s.expect(r < y && q * y + r == x, "divmod identity");
    }
  }
  s.expect(Natural::from_decimal(std::string(30, '9')).to_decimal() ==
               std::string(30, '9'),
           "decimal round trip");
}

void primes_suite(Suite& s, Level level) {
  const std::uint64_t limit = level == Level::quick ? 20000 : 200000;
  std::size_t disagreements = 0;
  for (std::uint64_t n = 0; n < limit; ++n) {
    if (primes::is_prime_u64(n) != trial_division(n)) ++disagreements;
  }
  s.expect(s.observe(std::uint64_t{disagreements}) == 0,
           "is_prime disagrees with trial division");
  const std::vector<std::pair<std::size_t, std::uint64_t>> least = {
      {1, 1}, {4, 1}, {10, 12}, {12, 3}, {24, 10}, {32, 18}, {135, 225}};
  for (const auto& [m, a] : least) {
    s.expect(primes::least_fft_prime(m).a == Natural(a),
             "p0 multiplier for m = " + std::to_string(m));
  }
  s.expect(primes::find_all_a(1, 6) == std::vector<std::uint64_t>{1, 2, 3, 5, 6},
           "find_all_a(1, 6)");
  if (level == Level::full) {
    s.expect(primes::find_all_a(1000, 9100) ==
                 std::vector<std::uint64_t>{13, 306, 726, 2647, 3432, 5682, 5800,
                                            5916, 6532, 7737, 8418, 8913, 9072},
             "find_all_a(1000, 9100)");
  }
  const std::uint64_t q_max = level == Level::quick ? 60 : 300;
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    std::uint64_t worst = 0;
    for (std::uint64_t r = 1; r < q; ++r) {
      if (std::gcd(r, q) != 1) continue;
      std::uint64_t n = r;
      while (!trial_division(n)) n += q;
      worst = std::max(worst, n);
    }
    s.expect(primes::p_of_q(q).least_prime == worst,
             "P(q) for q = " + std::to_string(q));
  }
}

void fp_suite(Suite& s, Level level) {
  const int trials = level == Level::quick ? 200 : 2000;
  for (std::size_t m : {4U, 16U, 62U, 135U, 216U}) {
    const Field field(primes::least_fft_prime(m));
    const Natural& p = field.modulus();
    for (int t = 0; t < trials; ++t) {
      const Natural x = random_natural(s.rng, p.bit_length() + 2) % p;
      const Natural y = random_natural(s.rng, p.bit_length() + 2) % p;
      const Natural prod = field.to_natural(field.mul(field.from(x), field.from(y)));
      s.expect(s.observe(prod) == mul_oracle(x, y) % p,
               "mul mod p for m = " + std::to_string(m));
      s.expect(field.to_natural(field.add(field.from(x), field.from(y))) ==
                   (x + y) % p,
               "add mod p");
    }
    const Element zeta = field.root_of_unity(std::uint64_t{1} << std::min<std::size_t>(m, 20));
    s.expect(dft::has_order(field, zeta, std::size_t{1} << std::min<std::size_t>(m, 20)),
             "root of unity order");
  }
}

void dft_suite(Suite& s, Level level) {
  const std::size_t max_len = level == Level::quick ? 256 : 2048;
  const Field field(primes::least_fft_prime(32));
  for (std::size_t L = 1; L <= max_len; L <<= 1) {
    const Element zeta = field.root_of_unity(L);
    const Poly f = random_poly(field, L, s.rng);
    const Poly expect = dft::dft_naive(field, f, zeta);
    s.expect(s.observe(field, dft::dft_radix2(field, f, zeta)) == expect,
             "radix-2 at L = " + std::to_string(L));
    s.expect(dft::idft(field, expect, zeta) == f, "inverse at L = " + std::to_string(L));
    for (std::size_t S = 2; S <= L; S <<= 1) {
      const dft::CtPlan plan = dft::make_ct_plan(field, L, S, zeta);
      s.expect(dft::dft_cooley_tukey(field, f, plan,
                                     dft::naive_short_engine(field, plan.omega, S)) ==
                   expect,
               "Cooley-Tukey at L = " + std::to_string(L) + ", S = " +
                   std::to_string(S));
    }
  }
}

void bluestein_suite(Suite& s, Level level) {
  const int trials = level == Level::quick ? 5 : 25;
  for (std::size_t m : {16U, 62U}) {
    const Field field(primes::least_fft_prime(m));
    for (std::size_t S = 1; S <= 64; S <<= 1) {
      const Element eta = field.root_of_unity(2 * S);
      const bluestein::ChirpPair chirp =
          bluestein::make_chirp(field, field.mul(eta, eta), S, eta);
      for (int t = 0; t < trials; ++t) {
        const Poly a = random_poly(field, S, s.rng);
        const Poly got = bluestein::short_dft_via_convolution(
            field, a, chirp, bluestein::naive_convolver(field, chirp));
        s.expect(s.observe(field, got) == dft::dft_naive(field, a, chirp.omega),
                 "chirp transform at S = " + std::to_string(S));
      }
    }
  }
}

void bivariate_suite(Suite& s, Level level) {
  const int trials = level == Level::quick ? 100 : 2000;
  {
    const primes::FftPrime p17 = primes::FftPrime::make(4, Natural(1));
    const Field field(p17);
    const auto params = bivariate::ChunkParams::make(p17, 2, 1);
    const Poly f = {field.from_u64(13)};
    const Poly g = {field.from_u64(5)};
    const auto h = bivariate::mul_bivariate_integer(bivariate::split(field, f, params),
                                                    bivariate::split(field, g, params),
                                                    params);
    s.expect(h(0, 0) == SignedInt(2) && h(0, 1) == SignedInt(4), "13 * 5 chunk product");
    s.expect(s.observe(field.to_natural(bivariate::recombine(field, h, params)[0])) ==
                 Natural(14),
             "13 * 5 recombination");
  }
  for (std::size_t m : {16U, 24U, 32U}) {
    const primes::FftPrime& prime = primes::least_fft_prime(m);
    const Field field(prime);
    for (int t = 0; t < trials / 3; ++t) {
      const std::size_t S = std::size_t{1} << (s.rng() % 4);
      const std::size_t k = transform::default_chunk_count(m);
      const auto params = bivariate::ChunkParams::make(prime, k, S);
      const Poly f = random_poly(field, S, s.rng);
      const Poly g = random_poly(field, S, s.rng);
      const auto h = bivariate::mul_bivariate_integer(
          bivariate::split(field, f, params), bivariate::split(field, g, params), params);
      bool bounded = true;
      for (const SignedInt& c : h.data) {
        bounded = bounded && c.magnitude() <= params.coefficient_bound();
      }
      s.expect(bounded, "coefficient bound");
      s.expect(bivariate::recombine(field, h, params) ==
                   dft::cyclic_convolution_naive(field, f, g),
               "homomorphism at S = " + std::to_string(S));
    }
  }
}

void transform_suite(Suite& s, Level level) {
  const std::size_t max_len = level == Level::quick ? 256 : 1024;
  for (std::size_t m : {16U, 62U}) {
    const Field field(primes::least_fft_prime(m));
    for (const transform::Profile& profile :
         {transform::Profile::base_case(), transform::Profile::single_recursion(),
          transform::Profile::double_recursion()}) {
      for (std::size_t L = 1; L <= max_len; L <<= 1) {
        const Element zeta = field.root_of_unity(L);
        const Poly f = random_poly(field, L, s.rng);
        s.expect(s.observe(field, transform::transform(field, f, zeta, profile)) ==
                     dft::dft_naive(field, f, zeta),
                 "transform at m = " + std::to_string(m) + ", L = " +
                     std::to_string(L) + ", depth " + std::to_string(profile.max_depth));
      }
    }
  }
}

void intmul_suite(Suite& s, Level level) {
  const std::uint64_t span = level == Level::quick ? 64 : 1024;
  const intmul::MulPlan tiny = intmul::make_plan(10);
  for (std::uint64_t u = 0; u < span; ++u) {
    for (std::uint64_t v = 0; v < span; v += level == Level::quick ? 1 : 7) {
      s.expect(s.observe(intmul::multiply(Natural(u), Natural(v), tiny)) ==
                   Natural(u * v),
               std::to_string(u) + " * " + std::to_string(v));
    }
  }
  const std::size_t max_bits = level == Level::quick ? 1U << 14 : 1U << 18;
  for (std::size_t bits = 64; bits <= max_bits; bits <<= 2) {
    const intmul::MulPlan plan = intmul::make_plan(bits);
    for (int t = 0; t < 3; ++t) {
      const Natural u = random_natural(s.rng, bits);
      const Natural v = random_natural(s.rng, bits);
      const Natural expect = mul_oracle(u, v);
      s.expect(intmul::multiply(u, v, plan) == expect,
               "fft product at " + std::to_string(bits) + " bits");
      if (bits <= 4096) {
        s.expect(intmul::multiply(u, v, plan, intmul::Engine::fft_recursive) == expect,
                 "recursive product at " + std::to_string(bits) + " bits");
      }
    }
  }
}

using SuiteFn = void (*)(Suite&, Level);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"bigint", bigint_suite},       {"primes", primes_suite},
      {"fp", fp_suite},               {"dft", dft_suite},
      {"bluestein", bluestein_suite}, {"bivariate", bivariate_suite},
      {"transform", transform_suite}, {"intmul", intmul_suite},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  return names;
}

std::vector<SuiteResult> run_selftest(Level level, std::uint64_t seed,
                                      const std::optional<std::string>& inject_fault) {
  std::vector<SuiteResult> results;
  std::uint64_t index = 0;
  for (const auto& [name, fn] : suites()) {
    Suite suite(name, inject_fault && *inject_fault == name, seed * 1000003 + index++);
    try {
      fn(suite, level);
    } catch (const std::exception& e) {
      suite.expect(false, std::string("exception: ") + e.what());
    }
    results.push_back(suite.result());
  }
  return results;
}

void write_selftest_report(std::ostream& out, Level level, std::uint64_t seed,
                           const std::vector<SuiteResult>& results) {
  out << "selftest level=" << (level == Level::quick ? "quick" : "full")
      << " seed=" << seed << '\n';
  bool ok = true;
  for (const SuiteResult& r : results) {
    out << r.name << ": " << (r.failures == 0 ? "pass" : "FAIL") << " checks="
        << r.checks << " failures=" << r.failures;
    if (r.failures != 0) out << " first=\"" << r.first_failure << '"';
    out << '\n';
    ok = ok && r.failures == 0;
  }
  out << "result: " << (ok ? "pass" : "FAIL") << '\n';
}

}  // namespace fftp::cli
