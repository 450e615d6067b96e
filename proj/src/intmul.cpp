#include "fftp/intmul.hpp"

#include <bit>

namespace fftp::intmul {
namespace {

using dft::Poly;
using fp::Element;
using fp::Field;

std::size_t ceil_div(std::size_t x, std::size_t y) { return (x + y - 1) / y; }

// Bits [lo, lo + width) of the limb sequence, width <= 64.
std::uint64_t chunk_u64(std::span<const Limb> limbs, std::size_t lo,
                        std::size_t width) {
  const std::size_t word = lo / kLimbBits;
  const unsigned shift = lo % kLimbBits;
  if (word >= limbs.size()) return 0;
  std::uint64_t v = limbs[word] >> shift;
  if (shift != 0 && word + 1 < limbs.size()) {
    v |= limbs[word + 1] << (kLimbBits - shift);
  }
  return width == 64 ? v : v & ((std::uint64_t{1} << width) - 1);
}

Poly to_chunks(const Field& field, const Natural& x, const MulPlan& plan) {
  Poly out(plan.L, field.zero());
  const std::size_t count = ceil_div(x.bit_length(), plan.b);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = plan.b <= 64
                 ? field.from_u64(chunk_u64(x.limbs(), i * plan.b, plan.b))
                 : field.from(x.bitslice(i * plan.b, plan.b));
  }
  return out;
}

void require(bool ok, const std::string& inequality, const MulPlan& plan) {
  if (ok) return;
  throw ParameterInfeasible(
      inequality + " fails for n = " + std::to_string(plan.n) + " (k = " +
      std::to_string(plan.k) + ", m = " + std::to_string(plan.m) + ", b = " +
      std::to_string(plan.b) + ", d = " + std::to_string(plan.d_chunks) +
      ", L = " + std::to_string(plan.L) + ")");
}

}  // namespace

MulPlan make_plan(std::size_t n, const PlanOptions& options) {
  if (n < 2) throw std::invalid_argument("make_plan needs n >= 2");
  MulPlan plan;
  plan.n = n;
  plan.mode = options.mode;
  const std::size_t lg_n = lg(std::uint64_t{n});

  transform::AdmissibleSize adm;
  if (options.forced_k) {
    adm = transform::admissible_from_k(*options.forced_k);
  } else if (options.mode == transform::Mode::test_scale) {
    adm = transform::least_admissible_above(2 * lg_n + 64);
  } else {
    const std::size_t lglg = lg(std::uint64_t{lg_n});
    const std::size_t denom = 2 * lglg * lglg * lglg;
    plan.k = denom == 0 ? 0 : ceil_div(5 * lg_n, denom);
    require(plan.k >= 2,
            "k = ceil((5/2) lg n / (lg lg n)^3) >= 2 (so that m = k (lg k)^3 > 0)",
            plan);
    adm = transform::admissible_from_k(plan.k);
  }
  plan.k = adm.k;
  plan.m = adm.m;
  if (options.mode == transform::Mode::paper_faithful) {
    require(plan.m > (std::size_t{1} << 17), "m > 2^17", plan);
    require(2 * lg_n < plan.m && plan.m < 3 * lg_n, "2 lg n < m < 3 lg n", plan);
  }

  plan.b = plan.m / 4;
  require(plan.b >= 1, "b = floor(m/4) >= 1", plan);
  plan.d_chunks = ceil_div(n, plan.b);
  while ((std::size_t{1} << plan.ell) * plan.m < 10 * n) ++plan.ell;
  plan.L = std::size_t{1} << plan.ell;
  if (options.mode == transform::Mode::test_scale) {
    while (plan.L < 2 * plan.d_chunks) plan.L <<= 1;
  }
  require(plan.d_chunks <= plan.L / 2, "d <= L/2", plan);
  require(2 * plan.b + lg(std::uint64_t{plan.d_chunks}) < plan.m,
          "2b + lg d < m", plan);
  require(lg(std::uint64_t{plan.L}) <= plan.m, "lg L <= m", plan);

  try {
    plan.field = transform::field_for(plan.m);
  } catch (const std::invalid_argument& e) {
    throw ParameterInfeasible("no usable field for m = " +
                              std::to_string(plan.m) + ": " + e.what());
  }
  plan.zeta = plan.field->root_of_unity(plan.L);
  return plan;
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::oracle: return "oracle";
    case Engine::karatsuba: return "karatsuba";
    case Engine::fft: return "fft";
    case Engine::fft_recursive: return "fft-recursive";
  }
  return "?";
}

Engine parse_engine(std::string_view name) {
  for (Engine e : {Engine::oracle, Engine::karatsuba, Engine::fft,
                   Engine::fft_recursive}) {
    if (name == to_string(e)) return e;
  }
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

Natural recover_product(std::span<const Natural> coeffs, std::size_t b) {
  Natural out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.add_shifted(coeffs[i], i * b);
  return out;
}

Natural multiply(const Natural& u, const Natural& v, const MulPlan& plan,
                 Engine engine, const transform::Profile& profile) {
  if (engine == Engine::oracle) return mul_oracle(u, v);
  if (engine == Engine::karatsuba) return mul_karatsuba(u, v);
  if (u.bit_length() > plan.n || v.bit_length() > plan.n) {
    throw std::invalid_argument("operand exceeds the planned " +
                                std::to_string(plan.n) + " bits");
  }
  if (u.is_zero() || v.is_zero()) return Natural();

  const Field& field = *plan.field;
  Poly uu = to_chunks(field, u, plan);
  Poly vv = to_chunks(field, v, plan);
  Poly w;
  if (engine == Engine::fft) {
    uu = dft::dft_radix2(field, uu, plan.zeta);
    vv = dft::dft_radix2(field, vv, plan.zeta);
    for (std::size_t i = 0; i < plan.L; ++i) uu[i] = field.mul(uu[i], vv[i]);
    w = dft::idft(field, uu, plan.zeta);
  } else {
    uu = transform::transform(field, uu, plan.zeta, profile);
    vv = transform::transform(field, vv, plan.zeta, profile);
    for (std::size_t i = 0; i < plan.L; ++i) uu[i] = field.mul(uu[i], vv[i]);
    w = transform::inverse_transform(field, uu, plan.zeta, profile);
  }

  std::vector<Natural> coeffs;
  coeffs.reserve(2 * plan.d_chunks);
  for (std::size_t i = 0; i < std::min(plan.L, 2 * plan.d_chunks); ++i) {
    coeffs.push_back(field.to_natural(w[i]));
  }
  return recover_product(coeffs, plan.b);
}

Multiplier::Multiplier(MultiplierOptions options) : options_(std::move(options)) {}

const MulPlan& Multiplier::plan_for(std::size_t n) const {
  const std::size_t key = std::bit_ceil(std::max<std::size_t>(n, 2));
  std::lock_guard lock(mutex_);
  auto& slot = plans_[key];
  if (!slot) slot = std::make_unique<MulPlan>(make_plan(key, options_.plan));
  return *slot;
}

Natural Multiplier::multiply(const Natural& u, const Natural& v) const {
  const std::size_t n = std::max(u.bit_length(), v.bit_length());
  const bool transform_engine =
      options_.engine == Engine::fft || options_.engine == Engine::fft_recursive;
  if (!transform_engine) return intmul::multiply(u, v, MulPlan{}, options_.engine);
  if (!options_.force_transform && n < options_.karatsuba_threshold_bits) {
    return mul_karatsuba(u, v);
  }
  return intmul::multiply(u, v, plan_for(n), options_.engine, options_.profile);
}

Natural multiply(const Natural& u, const Natural& v) {
  static const Multiplier multiplier;
  return multiplier.multiply(u, v);
}

}  // namespace fftp::intmul
