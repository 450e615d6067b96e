#include <gtest/gtest.h>

#include <random>

#include "fftp/counters.hpp"
#include "fftp/dft.hpp"

namespace fftp::dft {
namespace {

using primes::FftPrime;
using primes::least_fft_prime;

Poly random_poly(const Field& field, std::size_t n, std::mt19937_64& rng) {
  Poly out(n);
  for (Element& e : out) e = field.from(Natural::from_limbs({rng(), rng()}));
  return out;
}

TEST(Dft, WorkedExampleOverF17) {
  const Field field(FftPrime::make(4, Natural(1)));
  // 4 has order 4 mod 17.
  const Element zeta = field.from_u64(4);
  Poly f;
  for (std::uint64_t v : {1, 2, 3, 4}) f.push_back(field.from_u64(v));
  const Poly out = dft_naive(field, f, zeta);
  // f(1) = 10, f(4) = 1 + 8 + 48 + 256 = 313 = 7, f(16) = 1 - 2 + 3 - 4 = -2,
  // f(13) = 1 + 26 + 507 + 8788 = 9322 = 6 (mod 17).
  const std::vector<std::uint64_t> expect = {10, 7, 15, 6};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(field.to_natural(out[i]), Natural(expect[i])) << i;
  }
  EXPECT_EQ(dft_radix2(field, f, zeta), out);
  EXPECT_EQ(idft(field, out, zeta), f);
}

TEST(Dft, Radix2MatchesNaive) {
  const Field field(least_fft_prime(32));
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 512; n <<= 1) {
    const Element zeta = field.root_of_unity(n);
    const Poly f = random_poly(field, n, rng);
    const Poly expect = dft_naive(field, f, zeta);
    ASSERT_EQ(dft_radix2(field, f, zeta), expect) << n;
    ASSERT_EQ(idft(field, expect, zeta), f) << n;
  }
}

TEST(Dft, ConvolutionTheorem) {
  const Field field(least_fft_prime(24));
  std::mt19937_64 rng(6);
  for (std::size_t n = 1; n <= 64; n <<= 1) {
    const Element zeta = field.root_of_unity(n);
    const Poly f = random_poly(field, n, rng);
    const Poly g = random_poly(field, n, rng);
    Poly ff = dft_radix2(field, f, zeta);
    const Poly gg = dft_radix2(field, g, zeta);
    for (std::size_t i = 0; i < n; ++i) ff[i] = field.mul(ff[i], gg[i]);
    EXPECT_EQ(idft(field, ff, zeta), cyclic_convolution_naive(field, f, g));
  }
}

TEST(Dft, RejectsBadInputs) {
  const Field field(least_fft_prime(16));
  Poly three(3, field.one());
  EXPECT_THROW(dft_naive(field, three, field.one()), std::invalid_argument);
  Poly four(4, field.one());
  EXPECT_THROW(dft_radix2(field, four, field.root_of_unity(8)), OrderMismatch);
  EXPECT_THROW(dft_naive(field, four, field.root_of_unity(2)), OrderMismatch);
  EXPECT_THROW(make_ct_plan(field, 16, 32, field.root_of_unity(16)),
               std::invalid_argument);
}

TEST(Dft, TransposeRoundTrip) {
  std::vector<int> m(6);
  for (int i = 0; i < 6; ++i) m[i] = i;
  const auto t = transpose<int>(std::span<const int>(m), 2, 3);
  EXPECT_EQ(t, (std::vector<int>{0, 3, 1, 4, 2, 5}));
  EXPECT_EQ(transpose<int>(std::span<const int>(t), 3, 2), m);
}

TEST(CooleyTukey, MatchesNaiveForAllShapes) {
  const Field field(least_fft_prime(32));
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 1024; n <<= 1) {
    const Element zeta = field.root_of_unity(n);
    const Poly f = random_poly(field, n, rng);
    const Poly expect = dft_radix2(field, f, zeta);
    for (std::size_t s = 2; s <= n; s <<= 1) {
      const CtPlan plan = make_ct_plan(field, n, s, zeta);
      EXPECT_EQ(plan.short_layers * std::countr_zero(s) + plan.radix2_layers,
                static_cast<std::size_t>(std::countr_zero(n)));
      const ShortEngine engine = naive_short_engine(field, plan.omega, s);
      ASSERT_EQ(dft_cooley_tukey(field, f, plan, engine), expect)
          << "L = " << n << ", S = " << s;
      ASSERT_EQ(dft_cooley_tukey(field, f, plan,
                                 radix2_short_engine(field, plan.omega, s)),
                expect);
    }
  }
}

TEST(CooleyTukey, LengthOne) {
  const Field field(least_fft_prime(8));
  const Poly f = {field.from_u64(42)};
  const CtPlan plan = make_ct_plan(field, 1, 1, field.one());
  EXPECT_EQ(dft_cooley_tukey(field, f, plan, {}), f);
}

TEST(CooleyTukey, CountsLayersAndShortTransforms) {
  const Field field(least_fft_prime(32));
  const std::size_t n = 256;
  const CtPlan plan = make_ct_plan(field, n, 8, field.root_of_unity(n));
  EXPECT_EQ(plan.short_layers, 2U);
  EXPECT_EQ(plan.radix2_layers, 2U);
  std::mt19937_64 rng(8);
  const Poly f = random_poly(field, n, rng);
  reset_op_counters();
  dft_cooley_tukey(field, f, plan, naive_short_engine(field, plan.omega, 8));
  const OpCounters c = op_counters();
  EXPECT_EQ(c.layers, 4U);
  EXPECT_EQ(c.short_layers, 2U);
  EXPECT_EQ(c.short_transforms, 2U * (n / 8));
  EXPECT_GT(c.field_muls, 0U);
}

}  // namespace
}  // namespace fftp::dft
