#pragma once

#include <random>
#include <vector>

#include "fftp/bigint.hpp"

namespace fftp::testing {

// Uniform in [0, 2^bits).
inline Natural random_natural(std::mt19937_64& rng, std::size_t bits) {
  std::vector<Limb> limbs((bits + 63) / 64);
  for (Limb& l : limbs) l = rng();
  if (bits % 64 != 0 && !limbs.empty()) {
    limbs.back() &= (Limb{1} << (bits % 64)) - 1;
  }
  return Natural::from_limbs(std::move(limbs));
}

// Exactly `bits` bits long (top bit set), for bits >= 1.
inline Natural random_natural_exact(std::mt19937_64& rng, std::size_t bits) {
  Natural x = random_natural(rng, bits - 1);
  x.add_shifted(Natural(1), bits - 1);
  return x;
}

inline bool is_canonical(const Natural& x) {
  return x.limbs().empty() || x.limbs().back() != 0;
}

}  // namespace fftp::testing
