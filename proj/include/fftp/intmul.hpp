#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>

#include "fftp/transform.hpp"

namespace fftp::intmul {

using transform::ParameterInfeasible;

// Parameters for multiplying integers below 2^n through F_p[X]/(X^L - 1).
struct MulPlan {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t b = 0;         // chunk bits, floor(m / 4)
  std::size_t d_chunks = 0;  // ceil(n / b)
  std::size_t ell = 0;       // lg(10 n / m), before clipping
  std::size_t L = 0;         // 2^ell, at least 2 d_chunks
  transform::Mode mode = transform::Mode::test_scale;
  std::shared_ptr<const fp::Field> field;
  fp::Element zeta;  // order L
};

struct PlanOptions {
  transform::Mode mode = transform::Mode::test_scale;
  // Use m = k (lg k)^3 for this k instead of the size-driven choice.
  std::optional<std::size_t> forced_k;
};

// Practical mode takes the least admissible m > 2 lg n + 64; paper-faithful
// mode uses k = ceil((5/2) lg n / (lg lg n)^3). Both enforce
// d_chunks <= L/2 and 2b + lg d_chunks < m, throwing ParameterInfeasible
// naming the first inequality that fails.
MulPlan make_plan(std::size_t n, const PlanOptions& options = {});

enum class Engine { oracle, karatsuba, fft, fft_recursive };

std::string to_string(Engine engine);
// Throws std::invalid_argument for unknown names.
Engine parse_engine(std::string_view name);

// W(2^b) for W = sum_i coeffs[i] X^i, by shifted accumulation.
Natural recover_product(std::span<const Natural> coeffs, std::size_t b);

// u * v through the plan: chunk both in base 2^b, transform, multiply
// pointwise, invert, evaluate at 2^b. Requires u, v < 2^n. The fft engine
// uses the radix-2 transform directly; fft_recursive runs the recursive
// transform under `profile`.
Natural multiply(const Natural& u, const Natural& v, const MulPlan& plan,
                 Engine engine = Engine::fft,
                 const transform::Profile& profile =
                     transform::Profile::single_recursion());

struct MultiplierOptions {
  Engine engine = Engine::fft;
  transform::Profile profile = transform::Profile::single_recursion();
  PlanOptions plan;
  // Operands shorter than this many bits go to Karatsuba unless the
  // transform path is forced.
  std::size_t karatsuba_threshold_bits = 16384;
  bool force_transform = false;
};

// Multiplies arbitrary naturals, caching one plan per power-of-two size.
class Multiplier {
 public:
  explicit Multiplier(MultiplierOptions options = {});

  Natural multiply(const Natural& u, const Natural& v) const;
  const MulPlan& plan_for(std::size_t n) const;
  const MultiplierOptions& options() const { return options_; }

 private:
  MultiplierOptions options_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<MulPlan>> plans_;
};

// One-shot product with the default multiplier.
Natural multiply(const Natural& u, const Natural& v);

}  // namespace fftp::intmul
