#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fftp/bivariate.hpp"
#include "fftp/counters.hpp"
#include "fftp/dft.hpp"

namespace fftp::transform {

using dft::Element;
using dft::Field;
using dft::Poly;

// The requested parameters violate an inequality of the chosen profile.
class ParameterInfeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// m = k (lg k)^3 with r = (lg k)^3.
struct AdmissibleSize {
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t m = 0;
  friend bool operator==(const AdmissibleSize&, const AdmissibleSize&) = default;
};

// Requires k >= 2.
AdmissibleSize admissible_from_k(std::size_t k);
// The k with k (lg k)^3 = m, if any.
std::optional<AdmissibleSize> admissible_for_m(std::size_t m);
// Least admissible m strictly greater than bound.
AdmissibleSize least_admissible_above(std::size_t bound);

enum class Mode { paper_faithful, test_scale };

struct Profile {
  Mode mode = Mode::test_scale;
  // Fields whose m is at most this use the radix-2 base case.
  std::size_t base_case_threshold = 0;
  // Recursion levels allowed below the top call; 0 means base case only.
  std::size_t max_depth = 1;
  std::optional<std::size_t> short_length;  // S
  std::optional<std::size_t> chunk_count;   // k
  std::optional<std::size_t> m_prime;       // m' for the first recursion

  static Profile base_case();
  static Profile single_recursion();
  static Profile double_recursion();
  static Profile paper_faithful();

  // Line-based key=value text; '#' starts a comment.
  std::string serialize() const;
  static Profile parse(std::string_view text);

  friend bool operator==(const Profile&, const Profile&) = default;
};

std::string to_string(Mode mode);

// Size formulas of the recursive step for an ambient admissible m:
// beta = 2 (lg m)^3, k' = ceil(beta / (lg beta - 3 lg lg beta)^3),
// m' = k' (lg k')^3.
struct RecursionSizes {
  std::size_t beta = 0;
  std::size_t lg_beta = 0;
  std::size_t lg_lg_beta = 0;
  std::size_t k_prime = 0;
  std::size_t m_prime = 0;
};

// Throws ParameterInfeasible when lg beta - 3 lg lg beta < 1.
RecursionSizes derive_recursion_sizes(std::size_t m);

// Everything the recursive step needs for one call.
struct RecursionParams {
  std::size_t S = 0;
  bivariate::ChunkParams chunks;
  Natural bound;  // 2^(2r) S k a^3
  std::size_t beta = 0;  // bits needed so that p' > 2 * bound
  std::size_t m_prime = 0;
  std::shared_ptr<const Field> field_prime;
  Element zeta_prime;  // order S in F_p'
};

// Shared field for p0(m); built once per m.
std::shared_ptr<const Field> field_for(std::size_t m);

// Default chunk count: the largest divisor of m not exceeding sqrt(m).
std::size_t default_chunk_count(std::size_t m);

// Test-scale short length: 2^ceil(2 lg lg L), clamped to [2, L].
std::size_t default_short_length(std::size_t L);

// Least m' with m' >= lg S, a multiple of `multiple_of`, and
// 2^m' > 2 * bound.
std::size_t select_m_prime(const Natural& bound, std::size_t S,
                           std::size_t multiple_of = 1);

// Parameters for the recursive step of a length-L transform over `field`
// with short length S. In paper-faithful mode m' follows
// derive_recursion_sizes; in test-scale mode it is the least size passing
// the lift range check, or the profile override.
RecursionParams derive_recursion_params(const Field& field, std::size_t S,
                                        const Profile& profile,
                                        std::size_t depth = 0);

// Paper-faithful preconditions: m admissible, m > 2^17, (lg m)^4 < lg L < m.
void check_paper_faithful(std::size_t m, std::size_t L);

// The transform of f with respect to zeta (of order L = f.size()): the
// radix-2 base case, or Cooley-Tukey layers whose short transforms run
// through the chirp substitution, the chunked bivariate product over a
// smaller prime p', and recursive transforms over p'.
Poly transform(const Field& field, std::span<const Element> f,
               const Element& zeta, const Profile& profile);

// transform with zeta^-1, divided by L.
Poly inverse_transform(const Field& field, std::span<const Element> f,
                       const Element& zeta, const Profile& profile);

}  // namespace fftp::transform
