#include <gtest/gtest.h>

#include <numeric>
#include <sstream>
#include <vector>

#include "fftp/primes.hpp"

namespace fftp::primes {
namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t brute_least_prime(std::uint64_t r, std::uint64_t q) {
  for (std::uint64_t n = r;; n += q) {
    if (trial_division(n)) return n;
  }
}

std::uint64_t brute_p_of_q(std::uint64_t q) {
  std::uint64_t worst = 0;
  for (std::uint64_t r = 1; r < q; ++r) {
    if (std::gcd(r, q) == 1) worst = std::max(worst, brute_least_prime(r, q));
  }
  return worst;
}

TEST(Primality, AgreesWithTrialDivisionBelow100000) {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    ASSERT_EQ(is_prime_u64(n), trial_division(n)) << n;
    if (n % 97 == 0) ASSERT_EQ(is_prime(Natural(n)), trial_division(n)) << n;
  }
}

TEST(Primality, StrongPseudoprimes) {
  // Strong pseudoprimes to several small bases.
  for (std::uint64_t n : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL,
                          2152302898747ULL, 3474749660383ULL,
                          341550071728321ULL, 3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime_u64(n)) << n;
    EXPECT_FALSE(is_prime(Natural(n))) << n;
  }
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
  EXPECT_FALSE(is_prime_u64(18446744073709551615ULL));
}

TEST(Primality, LargeKnownValues) {
  // 2^127 - 1 and 2^521 - 1 are Mersenne primes; 2^128 + 1 is not prime.
  EXPECT_TRUE(is_prime(Natural::pow2(127) - Natural(1)));
  EXPECT_TRUE(is_prime(Natural::pow2(521) - Natural(1)));
  EXPECT_FALSE(is_prime(Natural::pow2(128) + Natural(1)));
  EXPECT_FALSE(is_prime((Natural::pow2(127) - Natural(1)) *
                        (Natural::pow2(89) - Natural(1))));
}

TEST(FftPrimes, FrozenLeastMultipliers) {
  const std::vector<std::pair<std::size_t, std::uint64_t>> expected = {
      {1, 1},   {2, 1},   {4, 1},    {8, 1},   {10, 12}, {12, 3}, {16, 1},
      {24, 10}, {28, 12}, {32, 18}, {135, 225}, {162, 9}, {216, 31}};
  for (const auto& [m, a] : expected) {
    const FftPrime& p = least_fft_prime(m);
    EXPECT_EQ(p.m, m);
    EXPECT_EQ(p.a, Natural(a)) << "m = " << m;
    EXPECT_EQ(p.p, (Natural(a) << m) + Natural(1));
  }
  EXPECT_EQ(least_fft_prime(12).p, Natural(12289));
}

TEST(FftPrimes, AllMultipliersSmall) {
  EXPECT_EQ(find_all_a(1, 6), (std::vector<std::uint64_t>{1, 2, 3, 5, 6}));
  std::vector<std::uint64_t> brute;
  for (std::uint64_t a = 1; a <= 300; ++a) {
    if (trial_division((a << 8) + 1)) brute.push_back(a);
  }
  EXPECT_EQ(find_all_a(8, 300), brute);
  // m >= 11 exercises the sieve path.
  brute.clear();
  for (std::uint64_t a = 1; a <= 400; ++a) {
    if (trial_division((a << 12) + 1)) brute.push_back(a);
  }
  EXPECT_EQ(find_all_a(12, 400), brute);
}

TEST(FftPrimes, BoundsAndErrors) {
  EXPECT_EQ(default_a_max(10), Natural(149));
  EXPECT_EQ(default_a_max(1), Natural(1));
  EXPECT_THROW(find_p0(10, Natural(11)), NotFound);
  EXPECT_EQ(find_p0(10, Natural(12)).a, Natural(12));
  EXPECT_THROW(FftPrime::make(3, Natural(1)), std::invalid_argument);
  EXPECT_EQ(FftPrime::make(4, Natural(1)).p, Natural(17));
}

TEST(FftPrimes, ExploratorySearch) {
  const FftPrime p = find_p0_exploratory(10, std::chrono::seconds(10));
  EXPECT_EQ(p.a, Natural(12));
}

TEST(ArithmeticProgressions, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1U);
  EXPECT_EQ(euler_phi(2), 1U);
  EXPECT_EQ(euler_phi(12), 4U);
  EXPECT_EQ(euler_phi(97), 96U);
  EXPECT_EQ(euler_phi(1024), 512U);
}

TEST(ArithmeticProgressions, LeastPrimeMatchesBruteForce) {
  for (std::uint64_t q = 2; q <= 60; ++q) {
    for (std::uint64_t r = 1; r < q; ++r) {
      if (std::gcd(r, q) != 1) continue;
      ASSERT_EQ(least_prime_in_ap(r, q), brute_least_prime(r, q))
          << r << " mod " << q;
    }
  }
  EXPECT_THROW(least_prime_in_ap(2, 4), std::invalid_argument);
  EXPECT_THROW(least_prime_in_ap(0, 4), std::invalid_argument);
}

TEST(ArithmeticProgressions, POfQMatchesBruteForce) {
  for (std::uint64_t q = 2; q <= 300; ++q) {
    const ApRecord rec = p_of_q(q);
    ASSERT_EQ(rec.least_prime, brute_p_of_q(q)) << q;
    ASSERT_EQ(rec.phi, euler_phi(q));
    ASSERT_EQ(least_prime_in_ap(rec.worst_residue, q), rec.least_prime);
    ASSERT_EQ(std::gcd(rec.ratio_num, rec.ratio_den), 1U);
  }
}

TEST(ArithmeticProgressions, RatioAtTwo) {
  const ApRecord rec = p_of_q(2);
  EXPECT_EQ(rec.least_prime, 3U);
  EXPECT_EQ(rec.ratio_num, 3U);
  EXPECT_EQ(rec.ratio_den, 2U);
  EXPECT_EQ(compare_ratio(rec, Ratio{}), 0);
  EXPECT_LT(compare_ratio(p_of_q(3), rec), 0);
}

TEST(ArithmeticProgressions, ScanSmallRange) {
  std::vector<std::uint64_t> seen;
  const ApScanSummary summary =
      ap_scan(200, [&](const ApRecord& r) { seen.push_back(r.q); });
  ASSERT_EQ(seen.size(), 199U);
  EXPECT_EQ(seen.front(), 2U);
  EXPECT_EQ(seen.back(), 200U);
  EXPECT_EQ(summary.best.q, 2U);
  EXPECT_TRUE(summary.max_at_q2);
  EXPECT_TRUE(summary.exceeding.empty());

  // With a smaller constant, the q = 2 record itself exceeds it.
  const ApScanSummary strict = ap_scan(10, {}, Ratio{1, 1});
  EXPECT_FALSE(strict.exceeding.empty());
  EXPECT_EQ(strict.exceeding.front().q, 2U);
}

TEST(ArithmeticProgressions, CsvFormat) {
  std::ostringstream out;
  write_ap_csv_header(out);
  write_ap_csv_row(out, p_of_q(2));
  EXPECT_EQ(out.str(), "q,phi_q,P_q,ratio_num,ratio_den\n2,1,3,3,2\n");
}

}  // namespace
}  // namespace fftp::primes
