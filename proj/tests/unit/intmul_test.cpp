#include <gtest/gtest.h>

#include <random>

#include "fftp/intmul.hpp"
#include "support/random_natural.hpp"

namespace fftp::intmul {
namespace {

using testing::random_natural;

TEST(Plan, PracticalMillionBits) {
  const MulPlan plan = make_plan(1000000);
  EXPECT_EQ(plan.k, 5U);
  EXPECT_EQ(plan.m, 135U);
  EXPECT_EQ(plan.b, 33U);
  EXPECT_EQ(plan.d_chunks, 30304U);
  EXPECT_EQ(plan.ell, 17U);
  EXPECT_EQ(plan.L, 131072U);
  EXPECT_LE(plan.d_chunks, plan.L / 2);
  EXPECT_LT(2 * plan.b + lg(std::uint64_t{plan.d_chunks}), plan.m);
  EXPECT_EQ(plan.field->prime().a, Natural(225));
}

TEST(Plan, PaperFaithfulMillionBitsIsInfeasible) {
  PlanOptions options;
  options.mode = transform::Mode::paper_faithful;
  try {
    make_plan(1000000, options);
    FAIL() << "expected ParameterInfeasible";
  } catch (const ParameterInfeasible& e) {
    EXPECT_NE(std::string(e.what()).find("(5/2) lg n"), std::string::npos);
  }
}

TEST(Plan, DegenerateAndForced) {
  const MulPlan tiny = make_plan(2);
  EXPECT_EQ(tiny.d_chunks, 1U);
  EXPECT_EQ(tiny.L, 2U);
  PlanOptions forced;
  forced.forced_k = 3;
  const MulPlan small = make_plan(10, forced);
  EXPECT_EQ(small.m, 24U);
  EXPECT_EQ(small.b, 6U);
  EXPECT_EQ(small.d_chunks, 2U);
  forced.forced_k = 2;  // m = 2 leaves b = 0
  EXPECT_THROW(make_plan(10, forced), ParameterInfeasible);
  forced.forced_k = 3;
  EXPECT_THROW(make_plan(1 << 20, forced), ParameterInfeasible);
  EXPECT_THROW(make_plan(1), std::invalid_argument);
}

TEST(Plan, InequalitiesAcrossSizes) {
  for (std::size_t n = 2; n <= (std::size_t{1} << 30); n = n * 3 + 1) {
    const MulPlan plan = make_plan(n);
    EXPECT_LE(plan.d_chunks, plan.L / 2) << n;
    EXPECT_LT(2 * plan.b + lg(std::uint64_t{plan.d_chunks}), plan.m) << n;
    EXPECT_GT(plan.m, 2 * lg(std::uint64_t{n}) + 64) << n;
  }
}

TEST(RecoverProduct, Examples) {
  EXPECT_EQ(recover_product(std::vector<Natural>{Natural(1), Natural(1)}, 4),
            Natural(17));
  EXPECT_EQ(recover_product(std::vector<Natural>{Natural(12345)}, 7),
            Natural(12345));
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t b = 1 + rng() % 90;
    std::vector<Natural> coeffs(1 + rng() % 30);
    for (Natural& c : coeffs) c = random_natural(rng, 2 * b + 5);
    // Horner evaluation at 2^b.
    Natural expect;
    for (std::size_t i = coeffs.size(); i-- > 0;) expect = (expect << b) + coeffs[i];
    EXPECT_EQ(recover_product(coeffs, b), expect);
  }
}

TEST(Multiply, SmallCases) {
  const MulPlan plan = make_plan(64);
  const Natural u(0xdeadbeefcafeULL);
  EXPECT_EQ(multiply(Natural(0), u, plan), Natural(0));
  EXPECT_EQ(multiply(u, Natural(1), plan), u);
  EXPECT_EQ(multiply(u, u, plan), mul_oracle(u, u));
  EXPECT_THROW(multiply(Natural::pow2(64), u, plan), std::invalid_argument);
}

TEST(Multiply, ExhaustiveEightBitsForcedK) {
  PlanOptions forced;
  forced.forced_k = 3;
  const MulPlan plan = make_plan(8, forced);
  for (std::uint64_t u = 0; u < 256; ++u) {
    for (std::uint64_t v = 0; v < 256; ++v) {
      ASSERT_EQ(multiply(Natural(u), Natural(v), plan), Natural(u * v))
          << u << " * " << v;
    }
  }
}

TEST(Multiply, RandomAgainstOracle) {
  std::mt19937_64 rng(52);
  for (std::size_t bits = 16; bits <= (1U << 16); bits *= 4) {
    const MulPlan plan = make_plan(bits);
    for (int trial = 0; trial < 10; ++trial) {
      const Natural u = random_natural(rng, bits);
      const Natural v = random_natural(rng, bits);
      ASSERT_EQ(multiply(u, v, plan), mul_oracle(u, v)) << bits;
    }
    const Natural all = Natural::pow2(bits) - Natural(1);
    ASSERT_EQ(multiply(all, all, plan), mul_oracle(all, all)) << bits;
  }
}

TEST(Multiply, RecursiveEngineAgrees) {
  std::mt19937_64 rng(53);
  for (std::size_t bits : {100U, 1000U, 5000U}) {
    const MulPlan plan = make_plan(bits);
    const Natural u = random_natural(rng, bits);
    const Natural v = random_natural(rng, bits);
    const Natural expect = mul_oracle(u, v);
    EXPECT_EQ(multiply(u, v, plan, Engine::fft_recursive,
                       transform::Profile::single_recursion()),
              expect);
    EXPECT_EQ(multiply(u, v, plan, Engine::fft_recursive,
                       transform::Profile::double_recursion()),
              expect);
  }
}

TEST(Multiply, RingAxioms) {
  std::mt19937_64 rng(54);
  Multiplier mult({.force_transform = true});
  for (int trial = 0; trial < 20; ++trial) {
    const Natural u = random_natural(rng, 1 + rng() % 3000);
    const Natural v = random_natural(rng, 1 + rng() % 3000);
    const Natural w = random_natural(rng, 1 + rng() % 3000);
    EXPECT_EQ(mult.multiply(u, v), mult.multiply(v, u));
    EXPECT_EQ(mult.multiply(u, v + w), mult.multiply(u, v) + mult.multiply(u, w));
  }
}

TEST(Multiplier, EnginesAndBypass) {
  std::mt19937_64 rng(55);
  const Natural u = random_natural(rng, 40000);
  const Natural v = random_natural(rng, 30000);
  const Natural expect = mul_oracle(u, v);
  for (Engine e : {Engine::oracle, Engine::karatsuba, Engine::fft}) {
    MultiplierOptions options;
    options.engine = e;
    EXPECT_EQ(Multiplier(options).multiply(u, v), expect) << to_string(e);
  }
  const Multiplier defaults;
  EXPECT_EQ(defaults.multiply(Natural(3), Natural(5)), Natural(15));
  EXPECT_EQ(&defaults.plan_for(1000), &defaults.plan_for(1024));
  EXPECT_EQ(defaults.plan_for(1000).n, 1024U);
  EXPECT_EQ(multiply(u, v), expect);
}

TEST(Engine, Names) {
  EXPECT_EQ(parse_engine("fft-recursive"), Engine::fft_recursive);
  EXPECT_EQ(to_string(parse_engine("oracle")), "oracle");
  EXPECT_THROW(parse_engine("ntt"), std::invalid_argument);
}

}  // namespace
}  // namespace fftp::intmul
