#include "fftp/bigint.hpp"

namespace fftp {

// Plain O(n*m) limb product. Deliberately standalone: nothing in here is
// reused by the Karatsuba or transform multipliers it is used to check.
Natural mul_oracle(const Natural& x, const Natural& y) {
  using u128 = unsigned __int128;
  const auto& a = x.limbs_;
  const auto& b = y.limbs_;
  if (a.empty() || b.empty()) return {};
  std::vector<Limb> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Limb ai = a[i];
    Limb carry = 0;
    Limb* row = out.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const u128 t = static_cast<u128>(ai) * b[j] + row[j] + carry;
      row[j] = static_cast<Limb>(t);
      carry = static_cast<Limb>(t >> 64);
    }
    row[b.size()] = carry;
  }
  return Natural(std::move(out));
}

}  // namespace fftp
