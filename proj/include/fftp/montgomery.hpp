#pragma once

#include <span>
#include <vector>

#include "fftp/bigint.hpp"

namespace fftp {

namespace detail {

// -p^{-1} mod 2^64 for odd p0.
constexpr Limb montgomery_inverse(Limb p0) {
  Limb inv = p0;  // correct to 3 bits for odd p0
  for (int i = 0; i < 6; ++i) inv *= 2 - p0 * inv;
  return ~inv + 1;
}

// Coarsely integrated operand scanning: out = a * b * 2^{-64n} mod p for
// a, b < p. scratch must hold n + 2 limbs; out may alias a or b.
inline void mont_mul(const Limb* a, const Limb* b, const Limb* p, Limb pinv,
                     std::size_t n, Limb* out, Limb* scratch) {
  using u128 = unsigned __int128;
  Limb* t = scratch;
  for (std::size_t j = 0; j < n + 2; ++j) t[j] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Limb carry = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const u128 s = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
      t[j] = static_cast<Limb>(s);
      carry = static_cast<Limb>(s >> 64);
    }
    u128 s = static_cast<u128>(t[n]) + carry;
    t[n] = static_cast<Limb>(s);
    t[n + 1] = static_cast<Limb>(s >> 64);

    const Limb q = t[0] * pinv;
    s = static_cast<u128>(q) * p[0] + t[0];
    carry = static_cast<Limb>(s >> 64);
    for (std::size_t j = 1; j < n; ++j) {
      s = static_cast<u128>(q) * p[j] + t[j] + carry;
      t[j - 1] = static_cast<Limb>(s);
      carry = static_cast<Limb>(s >> 64);
    }
    s = static_cast<u128>(t[n]) + carry;
    t[n - 1] = static_cast<Limb>(s);
    t[n] = t[n + 1] + static_cast<Limb>(s >> 64);
  }
  // t < 2p; one conditional subtraction gives the canonical residue.
  bool ge = t[n] != 0;
  if (!ge) {
    ge = true;
    for (std::size_t j = n; j-- > 0;) {
      if (t[j] != p[j]) {
        ge = t[j] > p[j];
        break;
      }
    }
  }
  if (ge) {
    Limb borrow = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Limb d = t[j] - p[j];
      const Limb d2 = d - borrow;
      borrow = static_cast<Limb>((t[j] < p[j]) || (d < borrow));
      out[j] = d2;
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) out[j] = t[j];
  }
}

}  // namespace detail

// Montgomery-form modular arithmetic for an odd modulus of any size.
class Montgomery {
 public:
  explicit Montgomery(const Natural& modulus);

  const Natural& modulus() const { return modulus_; }
  std::size_t width() const { return n_; }

  std::vector<Limb> to_form(const Natural& x) const;
  Natural from_form(std::span<const Limb> x) const;
  std::vector<Limb> one() const { return one_; }
  void mul(std::span<const Limb> a, std::span<const Limb> b,
           std::span<Limb> out) const;

  // base^exponent mod modulus, canonical.
  Natural pow(const Natural& base, const Natural& exponent) const;

 private:
  std::vector<Limb> to_limbs(const Natural& x) const;

  Natural modulus_;
  std::size_t n_;
  std::vector<Limb> p_;
  Limb pinv_;
  std::vector<Limb> r2_;
  std::vector<Limb> one_;
};

}  // namespace fftp
