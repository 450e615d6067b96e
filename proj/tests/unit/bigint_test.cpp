#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "fftp/bigint.hpp"
#include "support/random_natural.hpp"

namespace fftp {
namespace {

using testing::is_canonical;
using testing::random_natural;
using testing::random_natural_exact;

TEST(Natural, ZeroHasNoLimbs) {
  EXPECT_TRUE(Natural().is_zero());
  EXPECT_EQ(Natural(0).limb_count(), 0U);
  EXPECT_EQ(Natural::from_limbs({0, 0, 0}).limb_count(), 0U);
  EXPECT_EQ(Natural::from_limbs({5, 0, 0}).limb_count(), 1U);
}

TEST(Natural, HexRoundTrip) {
  EXPECT_EQ(Natural::from_hex("0").to_hex(), "0");
  EXPECT_EQ(Natural::from_hex("00ff").to_hex(), "ff");
  EXPECT_EQ(Natural::from_hex("DeadBeef").to_hex(), "deadbeef");
  const std::string h = "123456789abcdef0fedcba9876543210aa";
  EXPECT_EQ(Natural::from_hex(h).to_hex(), h);
  EXPECT_THROW(Natural::from_hex("12g"), std::invalid_argument);
  EXPECT_THROW(Natural::from_hex(""), std::invalid_argument);
}

TEST(Natural, DecimalRoundTrip) {
  EXPECT_EQ(Natural::from_decimal("0").to_decimal(), "0");
  const std::string d = "340282366920938463463374607431768211455";
  EXPECT_EQ(Natural::from_decimal(d).to_decimal(), d);
  EXPECT_EQ(Natural::from_decimal(d), Natural::pow2(128) - Natural(1));
  EXPECT_THROW(Natural::from_decimal("1x"), std::invalid_argument);
}

TEST(Natural, NinesSquaredPlusCarry) {
  // 10^30 - 1 written out digit by digit, then (10^30 - 1) + 1 = 10^30.
  const Natural nines = Natural::from_decimal(std::string(30, '9'));
  EXPECT_EQ((nines + Natural(1)).to_decimal(), "1" + std::string(30, '0'));
  EXPECT_EQ((nines * nines).to_decimal(),
            std::string(29, '9') + "8" + std::string(29, '0') + "1");
}

TEST(Natural, FrozenProducts) {
  const Natural x = Natural::from_decimal("12345678901234567890");
  const Natural y = Natural::from_decimal("98765432109876543210");
  EXPECT_EQ(mul_oracle(x, y).to_decimal(),
            "1219326311370217952237463801111263526900");
  const Natural m = Natural::pow2(128) - Natural(1);
  EXPECT_EQ(mul_oracle(m, m).to_hex(),
            "fffffffffffffffffffffffffffffffe00000000000000000000000000000001");
  EXPECT_EQ(mul_karatsuba(m, m), mul_oracle(m, m));
}

TEST(Natural, SubtractionUnderflowThrows) {
  EXPECT_THROW(sub(Natural(3), Natural(4)), std::underflow_error);
  EXPECT_EQ(sub(Natural(4), Natural(4)), Natural(0));
  EXPECT_EQ(Natural::pow2(64) - Natural(1), Natural(~std::uint64_t{0}));
}

TEST(Natural, CompareAndShift) {
  EXPECT_LT(Natural(3), Natural::pow2(64));
  EXPECT_EQ(cmp(Natural(7), Natural(7)), 0);
  EXPECT_EQ(Natural(1) << 200, Natural::pow2(200));
  EXPECT_EQ(Natural::pow2(200) >> 199, Natural(2));
  EXPECT_EQ(Natural::pow2(200) >> 201, Natural(0));
}

TEST(Natural, BitLengthAndLg) {
  EXPECT_EQ(Natural().bit_length(), 0U);
  EXPECT_EQ(Natural(1).bit_length(), 1U);
  EXPECT_EQ(Natural::pow2(64).bit_length(), 65U);
  EXPECT_EQ(lg(std::uint64_t{1}), 0U);
  EXPECT_EQ(lg(std::uint64_t{2}), 1U);
  EXPECT_EQ(lg(std::uint64_t{3}), 2U);
  EXPECT_EQ(lg(std::uint64_t{1024}), 10U);
  EXPECT_EQ(lg(std::uint64_t{1025}), 11U);
  EXPECT_EQ(lg(Natural::pow2(100)), 100U);
  EXPECT_EQ(lg(Natural::pow2(100) + Natural(1)), 101U);
}

TEST(Natural, BitsliceConcatenation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Natural x = random_natural(rng, 1 + rng() % 700);
    const std::size_t cut = rng() % 400;
    const Natural lo = x.bitslice(0, cut);
    const Natural hi = x.bitslice(cut, 800);
    Natural joined = lo;
    joined.add_shifted(hi, cut);
    EXPECT_EQ(joined, x);
    EXPECT_TRUE(is_canonical(lo));
    EXPECT_TRUE(is_canonical(hi));
  }
}

TEST(Natural, KaratsubaMatchesOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Natural x = random_natural(rng, 1 + rng() % 4096);
    const Natural y = random_natural(rng, 1 + rng() % 4096);
    const Natural expect = mul_oracle(x, y);
    EXPECT_EQ(mul_karatsuba(x, y), expect);
    EXPECT_EQ(mul_karatsuba(x, y, 4), expect);
    EXPECT_TRUE(is_canonical(expect));
  }
}

TEST(Natural, KaratsubaAllOnes) {
  for (std::size_t bits : {63U, 64U, 65U, 255U, 256U, 1000U, 4096U}) {
    const Natural x = Natural::pow2(bits) - Natural(1);
    EXPECT_EQ(mul_karatsuba(x, x, 4), mul_oracle(x, x)) << bits;
  }
}

TEST(Natural, DivmodIdentity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10000; ++trial) {
    const Natural x = random_natural(rng, 1 + rng() % 600);
    Natural y = random_natural(rng, 1 + rng() % 400);
    if (y.is_zero()) y = Natural(1);
    const auto [q, r] = divmod(x, y);
    ASSERT_LT(r, y);
    ASSERT_EQ(q * y + r, x);
  }
}

TEST(Natural, DivmodEdgeCases) {
  EXPECT_THROW(divmod(Natural(1), Natural(0)), std::domain_error);
  // Divisor with a top limb that forces the qhat correction in Knuth D.
  const Natural y = Natural::from_limbs({0, 0x8000000000000000ULL});
  const Natural x = Natural::from_limbs({~0ULL, ~0ULL, 0x7fffffffffffffffULL});
  const auto [q, r] = divmod(x, y);
  EXPECT_EQ(q * y + r, x);
  EXPECT_LT(r, y);
}

TEST(Natural, ModU64AndGcd) {
  const Natural x = Natural::pow2(200) + Natural(12345);
  EXPECT_EQ(x.mod_u64(1000003), (x % Natural(1000003)).low_u64());
  EXPECT_EQ(gcd(Natural(12), Natural(18)), Natural(6));
  EXPECT_EQ(gcd(Natural(0), Natural(5)), Natural(5));
  EXPECT_EQ(pow(Natural(3), 5), Natural(243));
  EXPECT_EQ(pow(Natural(2), 130), Natural::pow2(130));
}

TEST(SignedInt, Arithmetic) {
  const SignedInt a(-7);
  const SignedInt b(3);
  EXPECT_EQ((a + b).to_decimal(), "-4");
  EXPECT_EQ((a - b).to_decimal(), "-10");
  EXPECT_EQ((a * b).to_decimal(), "-21");
  EXPECT_EQ((a * a).to_decimal(), "49");
  EXPECT_EQ((b - b).sign(), 0);
  EXPECT_LT(a, b);
  EXPECT_EQ(a.mod(Natural(5)), Natural(3));
  EXPECT_EQ(SignedInt(-10).mod(Natural(5)), Natural(0));
  EXPECT_EQ(SignedInt(Natural(0), -1).sign(), 0);
}

}  // namespace
}  // namespace fftp
