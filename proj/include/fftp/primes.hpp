#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fftp/bigint.hpp"

namespace fftp::primes {

// Raised when a bounded search for a prime comes up empty.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// p = a * 2^m + 1, prime.
struct FftPrime {
  std::size_t m = 0;
  Natural a;
  Natural p;

  // Builds the triple and checks primality; throws std::invalid_argument
  // when a * 2^m + 1 is composite.
  static FftPrime make(std::size_t m, const Natural& a);

  friend bool operator==(const FftPrime&, const FftPrime&) = default;
};

struct PrimalityOptions {
  // Seeds the random witnesses used above the deterministic range.
  std::uint64_t seed = 0x5eed'0f'f7'9e1dULL;
  // Random Miller-Rabin rounds; 64 rounds bound the error by 4^-64 = 2^-128.
  unsigned rounds = 64;
};

// Miller-Rabin behind a trial-division prefilter. Exact for
// n < 3.3 * 10^24 (the first twelve primes as witnesses); probabilistic
// above that.
bool is_prime(const Natural& n, const PrimalityOptions& options = {});
bool is_prime_u64(std::uint64_t n);

// The conjectured constant in P(q) <= C q (lg q)^2, as an exact fraction.
struct Ratio {
  std::uint64_t num = 3;
  std::uint64_t den = 2;
};

// Largest a with a < C m^2.
Natural default_a_max(std::size_t m, Ratio c = {});

// Least a in [1, a_max] with a * 2^m + 1 prime. Throws NotFound.
FftPrime find_p0(std::size_t m, const Natural& a_max);
// Same scan without an upper bound on a, giving up after the timeout.
FftPrime find_p0_exploratory(std::size_t m, std::chrono::milliseconds timeout);
// Memoized find_p0 with the default bound; safe to call concurrently.
const FftPrime& least_fft_prime(std::size_t m);

// Every a in [1, a_max] with a * 2^m + 1 prime, ascending.
std::vector<std::uint64_t> find_all_a(std::size_t m, std::uint64_t a_max);

// --- least primes in arithmetic progressions ---

std::uint64_t euler_phi(std::uint64_t q);

// Least prime congruent to r mod q; requires gcd(r, q) = 1 and 0 < r <= q.
std::uint64_t least_prime_in_ap(std::uint64_t r, std::uint64_t q);

struct ApRecord {
  std::uint64_t q = 0;
  std::uint64_t phi = 0;
  std::uint64_t least_prime = 0;  // P(q)
  std::uint64_t worst_residue = 0;  // a residue attaining P(q)
  // P(q) / (q (lg q)^2) in lowest terms.
  std::uint64_t ratio_num = 0;
  std::uint64_t ratio_den = 1;
};

// Compares the ratio fields exactly.
int compare_ratio(const ApRecord& x, const ApRecord& y);
int compare_ratio(const ApRecord& x, Ratio c);

// P(q) = max_r P(r, q) for q >= 2.
ApRecord p_of_q(std::uint64_t q);

struct ApScanSummary {
  ApRecord best;  // largest ratio; smallest q on ties
  bool max_at_q2 = false;
  std::vector<ApRecord> exceeding;  // records with ratio > C
};

// Computes p_of_q for every q in [2, q_max] in order, feeding each record
// to the sink.
ApScanSummary ap_scan(std::uint64_t q_max,
                      const std::function<void(const ApRecord&)>& sink = {},
                      Ratio c = {});

void write_ap_csv_header(std::ostream& out);
void write_ap_csv_row(std::ostream& out, const ApRecord& record);

}  // namespace fftp::primes
